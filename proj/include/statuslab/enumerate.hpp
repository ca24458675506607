#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "statuslab/graph.hpp"

namespace statuslab {

inline constexpr int kTreeEnumerationLimit = 18;
inline constexpr int kGraphEnumerationLimit = 7;

// Canonical form of a free tree: the AHU parenthesis code of the tree rooted
// at its centroid, taking the lexicographically smaller of the two rootings
// when the centroid is an edge. Equal codes iff isomorphic.
struct TreeCode {
  int n = 0;
  std::string code;
  friend auto operator<=>(const TreeCode&, const TreeCode&) = default;
};

TreeCode canonical_code(const Graph& t);

// One representative per isomorphism class of free trees on n vertices,
// visited in canonical-code order. n <= 18.
void for_each_tree(int n, const std::function<void(const Graph&, const TreeCode&)>& fn);
std::vector<Graph> enumerate_trees(int n);

// One representative per isomorphism class of connected graphs on n vertices,
// 2 <= n <= 7, ordered by canonical code. Each representative carries the
// canonical labeling itself.
std::vector<Graph> enumerate_connected_graphs(int n);

// Canonical code of a small connected graph (n <= 7): the minimum adjacency
// bitstring over all n! relabelings.
std::uint32_t canonical_graph_code(const Graph& g);

// Uniform random labeled tree via a seeded Prüfer sequence; the result is
// deterministic for a fixed (n, seed) on every platform.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace statuslab
