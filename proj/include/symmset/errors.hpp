#pragma once

#include <stdexcept>
#include <string>

namespace symmset {

// Violated precondition or malformed input. Maps to exit code 1 in the CLI.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A fact guaranteed by the theory failed at runtime. Either the library or a
// user-supplied symmetric-set instance is broken. Maps to exit code 3.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

}  // namespace symmset
