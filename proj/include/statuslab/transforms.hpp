#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "statuslab/graph.hpp"

namespace statuslab {

struct CutEdge {
  int u = 0;
  int v = 0;
  bool pendant = false;  // true iff one endpoint has degree 1
};

// Classifies (u,v): nullopt when the edge is absent or lies on a cycle.
std::optional<CutEdge> find_cut_edge(const Graph& g, int u, int v);
std::vector<CutEdge> cut_edges(const Graph& g);

// Contracts the non-pendant cut edge (u,v) into u and re-attaches v as a
// pendant of u. Order is preserved and the minimum status strictly decreases.
// The edge is re-validated; e.pendant is ignored.
Graph contract_to_pendant(const Graph& g, const CutEdge& e);
Graph contract_to_pendant(const Graph& g, int u, int v);

// Detaches the branches of the tree t rooted at the `moved` neighbors of u and
// re-attaches them at w. Requires deg(u) >= 3, w in a branch at u whose root
// is not moved, and some other unmoved branch at least as large as w's branch
// (recomputed here, not trusted). The minimum status strictly increases.
Graph move_branches(const Graph& t, int u, int w, const std::vector<int>& moved);

// (D_n(p,q), D_n(p+1,q-1)) for p >= q >= 2: shifting one pendant to the
// heavier end strictly decreases the minimum status.
std::pair<Graph, Graph> dumbbell_shift(int n, int p, int q);

// (C_n(p-1,q+1), C_n(p,q)) for p >= q+2, 2(p+q) < n: the more balanced
// caterpillar has the strictly larger minimum status.
std::pair<Graph, Graph> caterpillar_shift(int n, int p, int q);

}  // namespace statuslab
