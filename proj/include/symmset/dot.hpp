#pragma once

#include <string>
#include <vector>

#include "symmset/cycles.hpp"
#include "symmset/propagraph.hpp"

namespace symmset {

// Graphviz export. Vertices in `mark` are drawn filled (used for Φ-iteration
// snapshots where the fill tracks membership in S).
std::string to_dot(const UGraph& g, const std::vector<int>& mark = {});

// Reduction graph with maximal-mass vertices filled black and the rest white;
// mutual edges are drawn once with dir=both.
std::string to_dot(const ReductionGraph& g);

}  // namespace symmset
