#include "statuslab/transforms.hpp"

#include <algorithm>
#include <string>

#include "statuslab/families.hpp"

namespace statuslab {

namespace {

// Vertices reachable from `start` when the edge (skip_u, skip_v) is removed.
std::vector<char> reach_without_edge(const Graph& g, int start, int skip_u, int skip_v) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x)) {
      if ((x == skip_u && y == skip_v) || (x == skip_v && y == skip_u)) continue;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

std::optional<CutEdge> find_cut_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!g.has_edge(u, v)) return std::nullopt;
  auto side = reach_without_edge(g, u, u, v);
  if (side[v]) return std::nullopt;  // still connected: the edge lies on a cycle
  return CutEdge{u, v, g.degree(u) == 1 || g.degree(v) == 1};
}

std::vector<CutEdge> cut_edges(const Graph& g) {
  std::vector<CutEdge> out;
  for (auto [u, v] : g.edges()) {
    if (auto e = find_cut_edge(g, u, v)) out.push_back(*e);
  }
  return out;
}

Graph contract_to_pendant(const Graph& g, int u, int v) {
  auto e = find_cut_edge(g, u, v);
  if (!e) {
    throw Error(errc::not_a_cut_edge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not a cut edge");
  }
  if (e->pendant) {
    throw Error(errc::pendant_edge, "(" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is a pendant edge");
  }
  // v's other neighbors become neighbors of u; v stays as a pendant of u.
  // u and v share no neighbor (a shared one would put uv on a triangle).
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [a, b] : g.edges()) {
    if (a == v && b != u) a = u;
    if (b == v && a != u) b = u;
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(g.order(), edges);
}

Graph contract_to_pendant(const Graph& g, const CutEdge& e) {
  return contract_to_pendant(g, e.u, e.v);
}

Graph move_branches(const Graph& t, int u, int w, const std::vector<int>& moved) {
  if (!t.is_tree()) throw Error(errc::not_a_tree, "branch move requires a tree");
  t.check_vertex(u);
  t.check_vertex(w);
  if (t.degree(u) < 3) {
    throw Error(errc::degree_too_small, "branch move requires deg(u) >= 3");
  }
  if (w == u) throw Error(errc::invalid_branch_selection, "w must lie in a branch at u");

  // Branch membership and sizes: branch[x] = the neighbor of u whose branch
  // contains x.
  const int n = t.order();
  std::vector<int> branch(n, -1);
  std::vector<int> branch_size(n, 0);
  for (int root : t.neighbors(u)) {
    auto side = reach_without_edge(t, root, u, root);
    for (int x = 0; x < n; ++x) {
      if (side[x]) branch[x] = root;
    }
    branch_size[root] = static_cast<int>(std::count(side.begin(), side.end(), 1));
  }

  const int w_root = branch[w];
  std::vector<int> moved_set(moved);
  std::sort(moved_set.begin(), moved_set.end());
  moved_set.erase(std::unique(moved_set.begin(), moved_set.end()), moved_set.end());
  if (moved_set.empty()) {
    throw Error(errc::invalid_branch_selection, "no branches selected");
  }
  for (int m : moved_set) {
    t.check_vertex(m);
    if (!t.has_edge(u, m)) {
      throw Error(errc::invalid_branch_selection,
                  std::to_string(m) + " is not a neighbor of u");
    }
    if (m == w_root) {
      throw Error(errc::invalid_branch_selection, "cannot move the branch containing w");
    }
  }
  // Some unmoved branch other than w's must be at least as large as w's.
  bool anchor_found = false;
  for (int root : t.neighbors(u)) {
    if (root == w_root) continue;
    if (std::binary_search(moved_set.begin(), moved_set.end(), root)) continue;
    if (branch_size[root] >= branch_size[w_root]) {
      anchor_found = true;
      break;
    }
  }
  if (!anchor_found) {
    throw Error(errc::invalid_branch_selection,
                "no unmoved branch at least as large as the branch containing w");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(t.edge_count());
  for (auto [a, b] : t.edges()) {
    bool is_moved_root = (a == u && std::binary_search(moved_set.begin(), moved_set.end(), b)) ||
                         (b == u && std::binary_search(moved_set.begin(), moved_set.end(), a));
    if (is_moved_root) {
      edges.emplace_back(w, a == u ? b : a);
    } else {
      edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, edges);
}

std::pair<Graph, Graph> dumbbell_shift(int n, int p, int q) {
  if (q < 2 || p < q || p + q + 2 > n) {
    throw Error(errc::invalid_params, "dumbbell shift requires p >= q >= 2 and p+q+2 <= n");
  }
  return {make_dumbbell(n, p, q), make_dumbbell(n, p + 1, q - 1)};
}

std::pair<Graph, Graph> caterpillar_shift(int n, int p, int q) {
  if (q < 1 || p < q + 2 || 2 * (p + q) >= n) {
    throw Error(errc::invalid_params,
                "caterpillar shift requires p >= q+2, q >= 1 and 2(p+q) < n");
  }
  return {make_caterpillar(n, p - 1, q + 1), make_caterpillar(n, p, q)};
}

}  // namespace statuslab
