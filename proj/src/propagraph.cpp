#include "symmset/propagraph.hpp"

#include <algorithm>
#include <bit>

namespace symmset {

namespace {

std::uint32_t set_to_mask(const UGraph& g, const std::vector<int>& s) {
    std::uint32_t mask = 0;
    for (int v : s) {
        require(v >= 0 && v < g.n(), "vertex subset out of range");
        mask |= std::uint32_t{1} << v;
    }
    return mask;
}

std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask >> v; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

std::uint32_t phi_mask(const std::vector<std::uint32_t>& adj, int n, std::uint32_t s) {
    std::uint32_t grown = s;
    for (int v = 0; v < n; ++v)
        if (std::popcount(adj[static_cast<std::size_t>(v)] & s) >= 2) grown |= std::uint32_t{1} << v;
    return grown;
}

bool propagative_masks(const std::vector<std::uint32_t>& adj, int n) {
    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::uint32_t s = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
            while (true) {
                std::uint32_t next = phi_mask(adj, n, s);
                if (next == s) break;
                s = next;
            }
            if (s != full) return false;
        }
    return true;
}

}  // namespace

UGraph::UGraph(FinSet vertices_, std::vector<std::pair<int, int>> edges_)
    : vertices(std::move(vertices_)), edges(std::move(edges_)) {
    for (auto& [u, v] : edges) {
        require(u >= 0 && u < vertices.size && v >= 0 && v < vertices.size,
                "UGraph: edge endpoint out of range");
        require(u != v, "UGraph: loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int UGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<std::uint32_t> UGraph::adjacency_masks() const {
    require(n() <= 31, "UGraph: mask representation limited to 31 vertices");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n()), 0);
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    return adj;
}

std::vector<int> phi(const UGraph& g, const std::vector<int>& s) {
    return mask_to_set(phi_mask(g.adjacency_masks(), g.n(), set_to_mask(g, s)));
}

std::vector<std::vector<int>> phi_trace(const UGraph& g, const std::vector<int>& seed) {
    auto adj = g.adjacency_masks();
    std::uint32_t s = set_to_mask(g, seed);
    std::vector<std::vector<int>> out{mask_to_set(s)};
    while (true) {
        std::uint32_t next = phi_mask(adj, g.n(), s);
        if (next == s) return out;
        s = next;
        out.push_back(mask_to_set(s));
    }
}

bool is_propagative(const UGraph& g) {
    require(g.n() >= 2, "is_propagative: at least 2 vertices required");
    return propagative_masks(g.adjacency_masks(), g.n());
}

int min_degree(const UGraph& g) {
    int m = g.n();
    for (int v = 0; v < g.n(); ++v) m = std::min(m, g.degree(v));
    return m;
}

UGraph bipartite_counterexample(int n) {
    require(n > 2, "bipartite_counterexample: needs more than 2 vertices");
    int left = (n + 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < left; ++u)
        for (int v = left; v < n; ++v) edges.emplace_back(u, v);
    return UGraph(FinSet(n), std::move(edges));
}

PuzzleSearch puzzle_search(int n, bool up_to_iso, int max_n) {
    require(n >= 3 && n <= max_n, "puzzle_search: n out of the configured range");

    PuzzleSearch result;
    result.n = n;
    result.up_to_iso = up_to_iso;

    // The bipartite example pins the known floor; only graphs that could beat
    // it need a propagativity check.
    UGraph bipartite = bipartite_counterexample(n);
    ensure(!is_propagative(bipartite), "puzzle_search: bipartite graph unexpectedly propagative");
    int best = min_degree(bipartite);  // = floor(n/2)

    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_list;
    pair_list.reserve(static_cast<std::size_t>(pairs));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::fill(adj.begin(), adj.end(), 0);
        for (int j = 0; j < pairs; ++j)
            if (code >> j & 1) {
                auto [u, v] = pair_list[static_cast<std::size_t>(j)];
                adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
                adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
            }
        ++result.graphs_total;

        int mindeg = n;
        bool sorted_degrees = true;
        int prev = -1;
        for (int v = 0; v < n; ++v) {
            int d = std::popcount(adj[static_cast<std::size_t>(v)]);
            mindeg = std::min(mindeg, d);
            if (d < prev) sorted_degrees = false;
            prev = d;
        }
        if (up_to_iso && !sorted_degrees) continue;

        if (2 * mindeg > n) ++result.high_min_degree_graphs;
        if (mindeg <= best) continue;

        ++result.propagativity_checks;
        if (!propagative_masks(adj, n)) {
            if (2 * mindeg > n) ++result.high_min_degree_counterexamples;
            best = mindeg;
        }
    }

    result.max_nonpropagative_min_degree = best;
    result.threshold = best + 1;
    return result;
}

int puzzle_threshold(int n, bool up_to_iso, int max_n) {
    return puzzle_search(n, up_to_iso, max_n).threshold;
}

}  // namespace symmset
