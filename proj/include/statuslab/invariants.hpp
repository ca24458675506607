#pragma once

#include <utility>
#include <vector>

#include "statuslab/graph.hpp"

namespace statuslab {

struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> witness;  // pairwise non-adjacent edges, sorted
};

struct DominationResult {
  int size = 0;
  std::vector<int> witness;  // sorted dominating set
};

bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& edges);
bool is_dominating_set(const Graph& g, const std::vector<int>& vertices);

// Exact maximum matching of a tree (two-state subtree DP, rooted at 0).
MatchingResult matching_number_tree(const Graph& t);

// Exact domination number of a tree (three-state subtree DP, rooted at 0).
DominationResult domination_number_tree(const Graph& t);

// Exhaustive oracles, exact for any connected graph within the budgets.
MatchingResult matching_number_bruteforce(const Graph& g);      // edge_count <= 24
DominationResult domination_number_bruteforce(const Graph& g);  // order <= 20

}  // namespace statuslab
