#include "statuslab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>
#include <utility>

namespace statuslab {

namespace {

// ---- free-tree canonical codes -------------------------------------------

std::string rooted_code(const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int c : adj[root]) {
    if (c != parent) child_codes.push_back(rooted_code(adj, c, root));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

// Centroid vertices (1 or 2) of a tree given as adjacency lists.
std::vector<int> tree_centroid(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }
  std::vector<int> size(n, 1), weight(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int u = order[i];
    int w = n - size[u];
    for (int v : adj[u]) {
      if (v != parent[u]) w = std::max(w, size[v]);
    }
    weight[u] = w;
    if (parent[u] >= 0) size[parent[u]] += size[u];
  }
  int min_w = *std::min_element(weight.begin(), weight.end());
  std::vector<int> centroid;
  for (int u = 0; u < n; ++u) {
    if (weight[u] == min_w) centroid.push_back(u);
  }
  return centroid;
}

std::string free_code(const std::vector<std::vector<int>>& adj) {
  auto centroid = tree_centroid(adj);
  std::string best = rooted_code(adj, centroid[0], -1);
  if (centroid.size() == 2) {
    best = std::min(best, rooted_code(adj, centroid[1], -1));
  }
  return best;
}

// ---- deterministic RNG ----------------------------------------------------

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Rejection sampling: exactly uniform on [0, n).
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x = next();
    if (rem != 0) {
      while (x >= 0 - rem) x = next();
    }
    return x % n;
  }
};

}  // namespace

TreeCode canonical_code(const Graph& t) {
  if (!t.is_tree()) throw Error(errc::not_a_tree, "canonical code requires a tree");
  return TreeCode{t.order(), free_code(t.adjacency())};
}

// Free trees are produced from the Beyer-Hedetniemi successor over canonical
// level sequences of rooted trees; a rooted tree is kept exactly when its root
// code coincides with the free canonical code, which selects one rooted
// representative per free isomorphism class.
void for_each_tree(int n, const std::function<void(const Graph&, const TreeCode&)>& fn) {
  if (n < 1) throw Error(errc::invalid_params, "tree enumeration requires n >= 1");
  if (n > kTreeEnumerationLimit) {
    throw Error(errc::too_large,
                "tree enumeration limited to n <= " + std::to_string(kTreeEnumerationLimit));
  }
  std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> kept;
  if (n == 1) {
    kept.push_back({"()", {}});
  } else {
    std::vector<int> level(n);
    std::iota(level.begin(), level.end(), 1);  // the path, levels 1..n
    std::vector<std::vector<int>> adj(n);
    std::vector<int> last_at_level(n + 2, -1);
    std::vector<std::pair<int, int>> edges;
    while (true) {
      for (auto& a : adj) a.clear();
      edges.clear();
      last_at_level[1] = 0;
      for (int i = 1; i < n; ++i) {
        int p = last_at_level[level[i] - 1];
        adj[p].push_back(i);
        adj[i].push_back(p);
        edges.emplace_back(p, i);
        last_at_level[level[i]] = i;
      }
      if (rooted_code(adj, 0, -1) == free_code(adj)) {
        kept.push_back({free_code(adj), edges});
      }
      // Successor: trim the last deep position back by one level and repeat
      // the block that starts at its parent.
      int p = -1;
      for (int i = n - 1; i >= 0; --i) {
        if (level[i] > 2) {
          p = i;
          break;
        }
      }
      if (p < 0) break;  // the star: last sequence
      int q = -1;
      for (int i = p - 1; i >= 0; --i) {
        if (level[i] == level[p] - 1) {
          q = i;
          break;
        }
      }
      for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [code, edges] : kept) {
    fn(Graph::from_edges(n, edges), TreeCode{n, code});
  }
}

std::vector<Graph> enumerate_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g, const TreeCode&) { out.push_back(g); });
  return out;
}

namespace {

struct PairBits {
  int bit[kGraphEnumerationLimit][kGraphEnumerationLimit];
  std::pair<int, int> pair_of[21];
  int count = 0;
  explicit PairBits(int n) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        bit[i][j] = bit[j][i] = count;
        pair_of[count] = {i, j};
        ++count;
      }
    }
  }
  std::uint32_t apply(std::uint32_t mask, const int* perm) const {
    std::uint32_t image = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      auto [i, j] = pair_of[std::countr_zero(m)];
      image |= 1u << bit[perm[i]][perm[j]];
    }
    return image;
  }
};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Iterated degree refinement; colors are ranks of structural signatures, so
// they are identical across isomorphic labelings.
std::vector<int> refine_colors(int n, const std::uint32_t* rows) {
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = std::popcount(rows[v]);
  int distinct = 0;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      for (std::uint32_t m = rows[v]; m; m &= m - 1) {
        sig[v].second.push_back(colors[std::countr_zero(m)]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    int now = static_cast<int>(sorted.size());
    if (now == distinct || now == n) break;
    distinct = now;
  }
  return colors;
}

}  // namespace

std::uint32_t canonical_graph_code(const Graph& g) {
  const int n = g.order();
  if (n > kGraphEnumerationLimit) {
    throw Error(errc::too_large, "graph canonical code limited to n <= " +
                                     std::to_string(kGraphEnumerationLimit));
  }
  PairBits pb(n);
  std::uint32_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= 1u << pb.bit[u][v];
  std::uint32_t best = mask;
  for (const auto& perm : all_permutations(n)) {
    best = std::min(best, pb.apply(mask, perm.data()));
  }
  return best;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 2) throw Error(errc::invalid_params, "graph enumeration requires n >= 2");
  if (n > kGraphEnumerationLimit) {
    throw Error(errc::too_large, "graph enumeration limited to n <= " +
                                     std::to_string(kGraphEnumerationLimit));
  }
  PairBits pb(n);
  const int bits = pb.count;
  auto perms = all_permutations(n);
  const std::uint32_t full = (1u << n) - 1;

  std::vector<std::uint32_t> reps;
  std::uint32_t rows[kGraphEnumerationLimit];
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    std::fill(rows, rows + n, 0u);
    for (std::uint32_t m = mask; m; m &= m - 1) {
      auto [i, j] = pb.pair_of[std::countr_zero(m)];
      rows[i] |= 1u << j;
      rows[j] |= 1u << i;
    }
    std::uint32_t reach = 1, prev = 0;
    while (reach != prev) {
      prev = reach;
      for (std::uint32_t m = reach; m; m &= m - 1) reach |= rows[std::countr_zero(m)];
    }
    if (reach != full) continue;

    // Orderly rejection: the kept labeling must sort the refinement colors and
    // be minimal among color-preserving relabelings. Exactly one labeling per
    // isomorphism class survives.
    auto colors = refine_colors(n, rows);
    if (!std::is_sorted(colors.begin(), colors.end())) continue;
    std::vector<std::pair<int, int>> cells;  // [lo, hi) runs of equal color
    for (int lo = 0; lo < n;) {
      int hi = lo;
      while (hi < n && colors[hi] == colors[lo]) ++hi;
      if (hi - lo > 1) cells.emplace_back(lo, hi);
      lo = hi;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool minimal = true;
    auto scan_cells = [&](auto&& self, std::size_t ci) -> void {
      if (!minimal) return;
      if (ci == cells.size()) {
        if (pb.apply(mask, perm.data()) < mask) minimal = false;
        return;
      }
      auto [lo, hi] = cells[ci];
      do {
        self(self, ci + 1);
      } while (minimal && std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    scan_cells(scan_cells, 0);
    if (!minimal) continue;

    std::uint32_t best = mask;
    for (const auto& p : perms) best = std::min(best, pb.apply(mask, p.data()));
    reps.push_back(best);
  }

  std::sort(reps.begin(), reps.end());
  assert(std::adjacent_find(reps.begin(), reps.end()) == reps.end());
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (std::uint32_t rep : reps) {
    std::vector<std::pair<int, int>> edges;
    for (std::uint32_t m = rep; m; m &= m - 1) {
      edges.push_back(pb.pair_of[std::countr_zero(m)]);
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(errc::invalid_params, "random tree requires n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  SplitMix64 rng(seed);
  std::vector<int> prufer(n - 2);
  for (int& s : prufer) s = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));

  std::vector<int> deg(n, 1);
  for (int s : prufer) ++deg[s];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : prufer) {
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, edges);
}

}  // namespace statuslab
