#pragma once

#include "symmset/ez.hpp"
#include "symmset/symset.hpp"

namespace symmset::testing {

// Independent mass oracle: the least |B| admitting a surjective decomposition
// x = y ∘ α, found by plain enumeration of surjections and structures. A
// decomposition with |B| = |A| always exists (the identity), so only smaller
// codomains need searching. Deliberately avoids the EZ-congruence path.
inline int brute_force_mass(const SymSet& m, const Structure& x) {
    const FinSet& a = x.carrier;
    for (int b = 1; b < a.size; ++b) {
        FinSet cod(b);
        auto structures = m.enumerate_structures(cod);
        bool found = false;
        for_each_surjection(a, cod, [&](const FinFn& alpha) {
            if (found) return;
            for (const Structure& y : structures)
                if (m.pullback(y, alpha) == x) {
                    found = true;
                    return;
                }
        });
        if (found) return b;
    }
    return a.size;
}

}  // namespace symmset::testing
