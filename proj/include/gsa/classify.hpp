#pragma once

#include <span>
#include <vector>

#include "gsa/graph.hpp"

namespace gsa {

// tau[u] in {1, 2, 3} for every node.
using TauVector = std::vector<Tau>;

// Class of min_u for every node, in O(|E|).
TauVector compute_tau(const LabeledGraph& g);

// Same, but node u is classified through max_u when kinds[u] == Kind::Max.
// The value is always the class of the string itself under the integer
// order: 1 if dropping its first character makes it smaller, 3 if larger.
TauVector compute_tau(const LabeledGraph& g, std::span<const Kind> kinds);

}  // namespace gsa
