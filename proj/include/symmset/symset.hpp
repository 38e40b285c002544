#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symmset/finset.hpp"

namespace symmset {

// Structure payloads. All are kept canonical so that equality is structural:
// edge lists sorted with u < v, partitions as restricted growth strings.
struct EdgeSet {
    std::vector<std::pair<int, int>> edges;
    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

struct Blocks {
    std::vector<int> class_of;  // RGS form, classes numbered by minimum element
    friend bool operator==(const Blocks&, const Blocks&) = default;
};

struct Coloring {
    std::vector<int> colors;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// The "error message" element of Eq_{=l+1}.
struct Sentinel {
    friend bool operator==(const Sentinel&, const Sentinel&) = default;
};

struct Atom {
    int value = 0;
    friend bool operator==(const Atom&, const Atom&) = default;
};

using Payload = std::variant<EdgeSet, Blocks, Coloring, Sentinel, Atom>;

// An M-structure on a carrier. `owner` is the descriptor of the symmetric set
// the structure belongs to, so structures of different instances never
// compare equal.
struct Structure {
    std::string owner;
    FinSet carrier;
    Payload payload;

    friend bool operator==(const Structure& a, const Structure& b) {
        return a.owner == b.owner && a.carrier == b.carrier && a.payload == b.payload;
    }
    friend bool operator!=(const Structure& a, const Structure& b) { return !(a == b); }
};

bool payload_less(const Payload& a, const Payload& b);
inline bool operator<(const Structure& a, const Structure& b) {
    if (a.owner != b.owner) return a.owner < b.owner;
    if (a.carrier.size != b.carrier.size) return a.carrier.size < b.carrier.size;
    return payload_less(a.payload, b.payload);
}

// A symmetric set presented extensionally: an enumerable, deterministic set of
// structures per carrier plus a contravariant pullback action. Instances are
// immutable and safe to share across threads.
class SymSet {
public:
    explicit SymSet(std::string name) : name_(std::move(name)) {}
    virtual ~SymSet() = default;

    SymSet(const SymSet&) = delete;
    SymSet& operator=(const SymSet&) = delete;

    const std::string& name() const noexcept { return name_; }

    virtual std::uint64_t structure_count(const FinSet& A) const = 0;
    virtual Structure structure_at(const FinSet& A, std::uint64_t index) const = 0;

    // The contravariant action x ↦ xα along α : A → B for x ∈ M(B).
    virtual Structure pullback(const Structure& x, const FinFn& alpha) const = 0;

    // Validates and canonicalizes a raw payload into a structure of this
    // instance (used by deserialization and tests).
    virtual Structure from_payload(const FinSet& A, Payload payload) const = 0;

    std::vector<Structure> enumerate_structures(const FinSet& A, std::uint64_t guard = (1u << 20)) const;

    // Visits structures in enumeration order until fn returns false.
    void for_each_structure(const FinSet& A, const std::function<bool(const Structure&)>& fn) const;

protected:
    void check_args(const Structure& x, const FinFn& alpha) const;

private:
    std::string name_;
};

// Instances expose a const-only interface; sharing is safe.
using SymSetPtr = std::shared_ptr<SymSet>;

// The paper's concrete instances.
SymSetPtr graph_symset();
SymSetPtr eq_symset();
SymSetPtr representable_symset(const FinSet& S);
SymSetPtr eq_exact_symset(int l);
SymSetPtr eq_leq_symset(int l);
SymSetPtr discrete_symset(const FinSet& X);

// Reconstructs an instance from its descriptor: "graph", "eq", "eq_exact(2)",
// "eq_leq(2)", "representable(3)", "discrete(2)", "sk_1(graph)".
SymSetPtr make_symset(const std::string& descriptor);

namespace detail {
// Descriptor parsing for the concrete instances; make_symset adds the
// skeleton wrapper on top.
SymSetPtr make_basic_symset(const std::string& descriptor);
}  // namespace detail

}  // namespace symmset
