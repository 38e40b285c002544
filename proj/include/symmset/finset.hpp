#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symmset/errors.hpp"

namespace symmset {

// An object of the site: the canonical non-empty finite set {0, ..., size-1}.
// Labels are display metadata only; equality of derived objects never depends
// on them, so FinSet equality compares sizes alone.
struct FinSet {
    int size = 1;
    std::vector<std::string> labels;  // empty, or one name per element

    FinSet() = default;
    explicit FinSet(int n, std::vector<std::string> names = {});

    // Label if present, decimal index otherwise.
    std::string display(int i) const;

    friend bool operator==(const FinSet& a, const FinSet& b) { return a.size == b.size; }
    friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }
};

// A \ {a}, canonically relabeled 0..size-2 preserving order.
FinSet remove_element(const FinSet& A, int a);

// A total function between canonical finite sets.
struct FinFn {
    FinSet dom;
    FinSet cod;
    std::vector<int> images;  // images[i] = value at i, one per dom element

    FinFn() = default;
    FinFn(FinSet dom_, FinSet cod_, std::vector<int> images_);

    int operator()(int i) const { return images[static_cast<std::size_t>(i)]; }

    friend bool operator==(const FinFn& f, const FinFn& g) {
        return f.dom == g.dom && f.cod == g.cod && f.images == g.images;
    }
    friend bool operator!=(const FinFn& f, const FinFn& g) { return !(f == g); }
};

FinFn identity(const FinSet& A);

// Pointwise composite f∘g (g applied first). Requires g.cod = f.dom.
FinFn compose(const FinFn& f, const FinFn& g);

bool is_surjective(const FinFn& f);
bool is_injective(const FinFn& f);

// f = mono ∘ epi with epi onto the canonical image set; image elements are
// ordered by their first preimage.
std::pair<FinFn, FinFn> epi_mono_factorize(const FinFn& f);

// The canonical embedding δ^a : A \ {a} ↣ A. Requires |A| ≥ 2.
FinFn delta(const FinSet& A, int a);

// The retraction ρ_{a→b} : A ↠ A \ {a} sending a to b and fixing the rest.
FinFn collapse(const FinSet& A, int a, int b);

// Picks the least preimage of each codomain element. Requires surjectivity.
FinFn min_section(const FinFn& surjection);

// An equivalence relation on a canonical finite set, stored as a restricted
// growth string: class_of[0] = 0 and class_of[i] <= max(class_of[<i]) + 1,
// so classes are numbered by their minimum element.
struct EquivRel {
    FinSet carrier;
    std::vector<int> class_of;

    EquivRel() : carrier(1), class_of{0} {}
    EquivRel(FinSet carrier_, std::vector<int> class_of_);

    int num_classes() const;
    std::vector<std::vector<int>> classes() const;
    bool related(int a, int b) const { return class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)]; }

    friend bool operator==(const EquivRel& r, const EquivRel& s) {
        return r.carrier == s.carrier && r.class_of == s.class_of;
    }
    friend bool operator!=(const EquivRel& r, const EquivRel& s) { return !(r == s); }
};

// Canonicalizes an arbitrary class labeling into RGS form.
EquivRel equiv_from_labels(FinSet carrier, const std::vector<int>& labels);

// The canonical surjection A ↠ A/~. Quotient labels are brace-joined member
// labels when the carrier is labeled.
FinFn quotient_map(const EquivRel& rel);

// Exhaustive, duplicate-free, lexicographic enumerations.
void for_each_function(const FinSet& A, const FinSet& B, const std::function<void(const FinFn&)>& fn);
void for_each_surjection(const FinSet& A, const FinSet& B, const std::function<void(const FinFn&)>& fn);
void for_each_partition(const FinSet& A, const std::function<void(const EquivRel&)>& fn);

std::vector<FinFn> enumerate_functions(const FinSet& A, const FinSet& B);
std::vector<FinFn> enumerate_surjections(const FinSet& A, const FinSet& B);
std::vector<EquivRel> enumerate_partitions(const FinSet& A);

std::uint64_t bell_number(int n);
std::uint64_t stirling2(int n, int k);

}  // namespace symmset
