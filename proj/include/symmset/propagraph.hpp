#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symmset/finset.hpp"

namespace symmset {

// An undirected graph without loops; edges canonical (u < v, sorted, unique).
struct UGraph {
    FinSet vertices;
    std::vector<std::pair<int, int>> edges;

    UGraph() = default;
    UGraph(FinSet vertices_, std::vector<std::pair<int, int>> edges_);

    int n() const { return vertices.size; }
    int degree(int v) const;
    // Bit v of mask u is set iff {u, v} is an edge. Requires n <= 31.
    std::vector<std::uint32_t> adjacency_masks() const;

    friend bool operator==(const UGraph& a, const UGraph& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
};

// ΦS = S together with every vertex adjacent to two distinct members of S.
std::vector<int> phi(const UGraph& g, const std::vector<int>& s);

// Iterates Φ from the seed until the fixpoint; the seed is the first entry.
std::vector<std::vector<int>> phi_trace(const UGraph& g, const std::vector<int>& seed);

// Every 2-element seed grows to the whole vertex set under iterated Φ.
bool is_propagative(const UGraph& g);

int min_degree(const UGraph& g);

// K_{ceil(n/2), floor(n/2)}: non-propagative with minimum degree floor(n/2).
UGraph bipartite_counterexample(int n);

struct PuzzleSearch {
    int n = 0;
    int threshold = 0;                              // the puzzle's answer
    std::uint64_t graphs_total = 0;                 // labeled graphs enumerated
    std::uint64_t propagativity_checks = 0;
    std::uint64_t high_min_degree_graphs = 0;       // graphs with min degree > n/2
    std::uint64_t high_min_degree_counterexamples = 0;  // of those, non-propagative
    int max_nonpropagative_min_degree = 0;
    bool up_to_iso = false;
};

// Exhaustive search for the least m such that every n-vertex graph with
// minimum degree >= m is propagative. With up_to_iso, only graphs whose
// degree sequence is non-decreasing in the vertex index are visited; every
// isomorphism class has such a representative and both minimum degree and
// propagativity are isomorphism invariants, so the search stays exhaustive.
PuzzleSearch puzzle_search(int n, bool up_to_iso = false, int max_n = 7);
int puzzle_threshold(int n, bool up_to_iso = false, int max_n = 7);

}  // namespace symmset
