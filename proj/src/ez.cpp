#include "symmset/ez.hpp"

#include <vector>

namespace symmset {

EquivRel ez_congruence(const SymSet& M, const Structure& x) {
    const FinSet& A = x.carrier;
    if (A.size == 1) return EquivRel(A, {0});

    std::vector<std::vector<char>> rel(static_cast<std::size_t>(A.size),
                                       std::vector<char>(static_cast<std::size_t>(A.size), 0));
    for (int a = 0; a < A.size; ++a) {
        rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
        for (int b = 0; b < A.size; ++b) {
            if (a == b) continue;
            // The endofunction a ↦ b fixing everything else.
            FinFn endo = compose(delta(A, a), collapse(A, a, b));
            if (M.pullback(x, endo) == x) rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        }
    }

    // The theory guarantees an equivalence relation; verify before trusting it.
    for (int a = 0; a < A.size; ++a)
        for (int b = 0; b < A.size; ++b) {
            ensure(rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                       rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)],
                   M.name() + ": EZ-congruence relation is not symmetric");
            if (!rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = 0; c < A.size; ++c)
                ensure(!rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] ||
                           rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)],
                       M.name() + ": EZ-congruence relation is not transitive");
        }

    std::vector<int> labels(static_cast<std::size_t>(A.size));
    for (int i = 0; i < A.size; ++i) {
        int first = i;
        for (int j = 0; j < i; ++j)
            if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                first = j;
                break;
            }
        labels[static_cast<std::size_t>(i)] = first;
    }
    return equiv_from_labels(A, labels);
}

int mass(const SymSet& M, const Structure& x) { return ez_congruence(M, x).num_classes(); }

EzDecomposition ez_decompose(const SymSet& M, const Structure& x) {
    EquivRel cong = ez_congruence(M, x);
    FinFn pi = quotient_map(cong);
    FinFn section = min_section(pi);
    Structure y = M.pullback(x, section);
    ensure(M.pullback(y, pi) == x, M.name() + ": EZ-decomposition round trip failed");
    int m = cong.num_classes();
    ensure(mass(M, y) == m, M.name() + ": EZ-quotient structure is degenerate");
    return EzDecomposition{std::move(cong), std::move(pi), std::move(y), m};
}

bool is_degenerate(const SymSet& M, const Structure& x) { return mass(M, x) < x.carrier.size; }

bool reduces(const SymSet& M, const Structure& x, int a) {
    require(x.carrier.size >= 2, "reduces: carrier must have at least 2 points");
    require(a >= 0 && a < x.carrier.size, "reduces: element out of range");
    EquivRel cong = ez_congruence(M, x);
    int cls = cong.class_of[static_cast<std::size_t>(a)];
    int size = 0;
    for (int c : cong.class_of)
        if (c == cls) ++size;
    return size >= 2;
}

FinFn decomposition_lifting(const SymSet& M, const Structure& x, int a, const EzDecomposition& face) {
    const FinSet& A = x.carrier;
    require(reduces(M, x, a), "decomposition_lifting: the point does not reduce the structure");

    EzDecomposition own = ez_decompose(M, x);
    // gamma ∘ δ^a is surjective exactly because a reduces x.
    FinFn gamma_da = compose(own.quotient_map, delta(A, a));
    ensure(is_surjective(gamma_da), "decomposition_lifting: restricted quotient map is not surjective");

    // The unique bijection with sigma ∘ (gamma δ^a) = alpha, read off a section.
    FinFn sigma = compose(face.quotient_map, min_section(gamma_da));
    ensure(is_injective(sigma) && is_surjective(sigma),
           "decomposition_lifting: connecting map is not a bijection");
    ensure(compose(sigma, gamma_da) == face.quotient_map,
           "decomposition_lifting: connecting map does not match the face decomposition");

    FinFn beta = compose(sigma, own.quotient_map);
    ensure(compose(beta, delta(A, a)) == face.quotient_map,
           "decomposition_lifting: lifted map does not extend the face quotient");
    ensure(M.pullback(face.quotient_structure, beta) == x,
           "decomposition_lifting: lifted decomposition does not recover the structure");
    return beta;
}

bool equality_lifting_two_points_check(const SymSet& M, const Structure& x, const Structure& y,
                                       int a, int b) {
    require(a != b, "equality_lifting_two_points_check: the two points must differ");
    require(x.carrier == y.carrier, "equality_lifting_two_points_check: carriers must agree");
    const FinSet& A = x.carrier;
    if (!(reduces(M, x, a) && reduces(M, x, b) && reduces(M, y, a) && reduces(M, y, b))) return false;
    FinFn da = delta(A, a), db = delta(A, b);
    return M.pullback(x, da) == M.pullback(y, da) && M.pullback(x, db) == M.pullback(y, db);
}

}  // namespace symmset
