#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symmset/ez.hpp"
#include "symmset/propagraph.hpp"
#include "symmset/symset.hpp"

namespace symmset {

// A k-cycle: one structure per face P \ {p}, pairwise compatible. For k = 1
// the cycle equations are vacuous and not enforced.
struct Cycle {
    SymSetPtr symset;
    FinSet P;
    std::vector<Structure> faces;  // faces[p] lives on P \ {p}

    int k() const { return P.size - 1; }
};

// Sink for the proof-step assertion log of the filler algorithm.
using TraceFn = std::function<void(const std::string&)>;

// Checks carriers and the cycle equations; reports the first violated pair.
Cycle validate_cycle(SymSetPtr M, const FinSet& P, std::vector<Structure> faces);

// The always-valid cycle of restrictions c_p = f·δ^p.
Cycle restrict_to_cycle(SymSetPtr M, const Structure& f);

// All fillers in enumeration order, by exhaustive search over M(P).
std::vector<Structure> brute_force_fillers(const Cycle& cycle, std::uint64_t guard = (std::uint64_t{1} << 22));

struct CycleStats {
    int n = 0;                 // max face mass - 1
    int d = 0;                 // k - n
    std::vector<int> upper;    // P̄ : faces of mass n+1
    std::vector<int> lower;    // P̲ : the rest
    std::vector<int> face_mass;
};
CycleStats cycle_stats(const Cycle& cycle);

// Directed graph on P with an edge p → q iff p reduces c_q; the undirected
// restriction to P̄ is the graph driving the propagation argument.
struct ReductionGraph {
    FinSet P;
    std::vector<std::pair<int, int>> edges;  // directed, lexicographically sorted
    std::vector<int> upper;                  // P̄, ascending
    std::vector<int> lower;                  // P̲, ascending
    UGraph upper_subgraph;                   // vertex i stands for upper[i]

    bool has_edge(int p, int q) const;
    // Mutual edges {p, q} within P̄, in original vertex numbering, sorted.
    std::vector<std::pair<int, int>> upper_edges() const;
};
ReductionGraph reduction_graph(const Cycle& cycle);

// The inequalities (d >= 3 and k > 2n-1) under which the constructive filling
// theorem applies, or the separately handled exceptional shape.
bool meets_filling_inequalities(int n, int k);
bool is_exceptional_case(int n, int k);

// The unique f with f·δ^p = c_p, f·δ^q = c_q and mass n+1, built by lifting
// the common EZ-decomposition of the shared double face along both points.
// Requires a mutual reduction edge between p and q with both faces of
// maximal mass.
Structure seed_filler(const Cycle& cycle, int p, int q, const TraceFn& trace = {});

// Closes S under the propagation step: r joins once two distinct points of
// S ∩ P̄ reduce c_r, and f·δ^r = c_r is asserted at each addition. Returns
// the least fixpoint, which is independent of the processing order.
std::vector<int> propagate_filler(const Cycle& cycle, const Structure& f, std::vector<int> s,
                                  const TraceFn& trace = {});

// The unique degenerate filler, under the filling inequalities or the
// exceptional shape (n,k) = (1,3). Seeds at the least edge of the upper
// reduction graph, propagates across P̄, then descends to P̲.
Structure construct_degenerate_filler(const Cycle& cycle, const TraceFn& trace = {});

}  // namespace symmset
