#pragma once

#include <vector>

#include "symmset/ez.hpp"
#include "symmset/symset.hpp"

namespace symmset::testing {

using Edges = std::vector<std::pair<int, int>>;

// The 7-vertex graph with mass 4 used throughout the worked examples
// (EZ-congruence classes {0,5},{1,2},{3,6},{4}).
inline Edges mass4_graph_edges() {
    return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 5},
            {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}};
}

// The 7-vertex propagative example (two hubs 0 and 1).
inline Edges propagative_graph_edges() {
    return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
            {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {3, 4}};
}

inline Structure graph_on(int n, const Edges& edges) {
    return graph_symset()->from_payload(FinSet(n), EdgeSet{edges});
}

inline Structure partition_on(const SymSetPtr& m, int n, const std::vector<std::vector<int>>& classes) {
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    int cls = 0;
    for (const auto& block : classes) {
        for (int v : block) labels[static_cast<std::size_t>(v)] = cls;
        ++cls;
    }
    return m->from_payload(FinSet(n), Blocks{labels});
}

inline Edges complete_graph_edges(int n) {
    Edges out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

}  // namespace symmset::testing
