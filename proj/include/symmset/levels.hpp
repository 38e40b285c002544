#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmset/cycles.hpp"
#include "symmset/symset.hpp"

namespace symmset {

// The l-skeleton of an instance: structures of mass at most l+1, with the
// inherited action (pullback never increases mass, so the subset is closed).
// Membership per carrier size is found by scanning the inner instance, which
// must stay below scan_guard structures.
SymSetPtr skeleton_symset(SymSetPtr inner, int l, std::uint64_t scan_guard = (std::uint64_t{1} << 22));

// Desk-scale check: every structure on every carrier of size <= size_bound
// has mass <= l+1.
bool is_l_skeletal(const SymSet& M, int l, int size_bound);

bool skeleton_membership(const SymSet& M, int l, const Structure& x);

struct CoskeletalityCheck {
    bool passed = true;
    int failed_k = -1;
    std::uint64_t cycles_checked = 0;
    std::optional<Cycle> counterexample;
    std::uint64_t counterexample_fillers = 0;
};

// Enumerates every k-cycle for l < k <= k_bound and counts fillers; passes
// iff each cycle has exactly one. Structure counts are capped by the guard.
CoskeletalityCheck check_coskeletality(const SymSetPtr& M, int l, int k_bound,
                                       std::uint64_t carrier_guard = 4096);
bool is_l_coskeletal(const SymSetPtr& M, int l, int k_bound, std::uint64_t carrier_guard = 4096);

// The explicit unfillable cycle of Eq_{=l+1}: k = 2 (l=1), 4 (l=2), 2l-1 (l>=3).
Cycle lower_bound_cycle(int l);

struct LowerBoundCertificate {
    int level = 0;
    int k = 0;
    Cycle cycle;
    std::uint64_t search_size = 0;      // structures examined by the filler search
    std::uint64_t filler_count = 0;     // must be 0
    bool reduction_graph_propagative = true;  // must be false

    bool passed() const { return filler_count == 0 && !reduction_graph_propagative; }
};

// Builds the lower-bound cycle, verifies it has no filler by brute force and
// that its reduction graph is non-propagative.
LowerBoundCertificate verify_lower_bound(int l, std::uint64_t guard = (std::uint64_t{1} << 22));

// The closed form of the main theorem: 1, 2, 4, 2l-1 for l = 0, 1, 2, >= 3.
int claimed_aufhebung(int l);

struct AufhebungGuards {
    int graph_carrier_max = 7;
    int eq_carrier_max = 8;
    std::uint64_t exhaustive_family_guard = (std::uint64_t{1} << 16);
    std::uint64_t brute_force_guard = (std::uint64_t{1} << 22);
    int randomized_cycles_per_check = 40;
    std::uint64_t seed = 93824;
};

struct UpperBoundCheck {
    std::string instance;
    int k = 0;
    std::string mode;  // "exhaustive", "randomized" or "skipped"
    std::uint64_t cycles_tested = 0;
    bool all_uniquely_filled = true;
    std::string note;
};

struct AufhebungReport {
    int level = 0;
    int claimed_value = 0;
    int k_bound = 0;
    LowerBoundCertificate lower_bound;
    std::vector<UpperBoundCheck> upper_bound_checks;
    AufhebungGuards parameters;

    bool passed() const;
};

// Lower-bound certificate plus desk-scale upper-bound checks over the bundled
// l-skeletal instances Eq_{=l+1}, Eq_{<=l} and sk_l(Graph): every tested
// k-cycle with k > claimed value has a unique filler, the filler is
// degenerate, and the constructive algorithm reproduces it.
AufhebungReport verify_aufhebung(int l, int k_bound = 0, const AufhebungGuards& guards = {});

}  // namespace symmset
