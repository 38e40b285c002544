#pragma once

#include "symmset/finset.hpp"
#include "symmset/symset.hpp"

namespace symmset {

// x = (quotient_structure) ∘ (quotient_map), with the quotient structure
// non-degenerate. Unique up to bijection; made canonical by numbering the
// congruence classes by minimum element and taking minimal sections.
struct EzDecomposition {
    EquivRel congruence;          // the EZ-congruence ~x on the carrier
    FinFn quotient_map;           // carrier ↠ carrier/~x
    Structure quotient_structure; // the non-degenerate y with x = y ∘ quotient_map
    int mass = 0;                 // number of congruence classes
};

// The EZ-congruence ~x, computed by the endo-collapse test:
// a ~x b iff a = b or x pulled back along (a ↦ b, rest fixed) equals x.
// The relation is guaranteed to be an equivalence by the theory; the axioms
// are re-checked and an InternalError signals a broken instance.
EquivRel ez_congruence(const SymSet& M, const Structure& x);

// Number of EZ-congruence classes; equals min{|B| : x = yα, α : A → B}.
int mass(const SymSet& M, const Structure& x);

EzDecomposition ez_decompose(const SymSet& M, const Structure& x);

bool is_degenerate(const SymSet& M, const Structure& x);

// Whether removing a keeps the mass, i.e. whether the ~x-class of a is not a
// singleton. Requires a carrier of at least 2 points.
bool reduces(const SymSet& M, const Structure& x, int a);

// Given that a reduces x and an EZ-decomposition (α, y) of x·δ^a, produces
// the unique surjection β extending α with x = y ∘ β.
FinFn decomposition_lifting(const SymSet& M, const Structure& x, int a, const EzDecomposition& face);

// True iff a and b each reduce both x and y, x·δ^a = y·δ^a and x·δ^b = y·δ^b.
// Whenever this holds, x = y follows; the property suite checks that.
bool equality_lifting_two_points_check(const SymSet& M, const Structure& x, const Structure& y,
                                       int a, int b);

}  // namespace symmset
