#pragma once

// Test-local oracles and generators, kept independent of the library's own
// algorithmic paths so they can serve as ground truth.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "statuslab/graph.hpp"

namespace testutil {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }
};

// All-pairs distances by Floyd-Warshall, independent of the BFS path.
inline std::vector<std::vector<int>> floyd_warshall(const statuslab::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbors(u)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

inline long long brute_min_status(const statuslab::Graph& g) {
  auto d = floyd_warshall(g);
  long long best = -1;
  for (int u = 0; u < g.order(); ++u) {
    long long s = std::accumulate(d[u].begin(), d[u].end(), 0LL);
    if (best < 0 || s < best) best = s;
  }
  return best;
}

inline int brute_diameter(const statuslab::Graph& g) {
  auto d = floyd_warshall(g);
  int best = 0;
  for (auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// Branch weight of every vertex by deleting it and measuring components.
inline std::vector<int> brute_branch_weights(const statuslab::Graph& t) {
  const int n = t.order();
  std::vector<int> weights(n, 0);
  for (int u = 0; u < n; ++u) {
    std::vector<int> comp(n, -1);
    int max_comp = 0;
    for (int start = 0; start < n; ++start) {
      if (start == u || comp[start] >= 0) continue;
      int size = 0;
      std::vector<int> stack{start};
      comp[start] = start;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++size;
        for (int y : t.neighbors(x)) {
          if (y != u && comp[y] < 0) {
            comp[y] = start;
            stack.push_back(y);
          }
        }
      }
      max_comp = std::max(max_comp, size);
    }
    weights[u] = max_comp;
  }
  return weights;
}

inline statuslab::Graph relabel(const statuslab::Graph& g, Rng& rng) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<int>(rng.bounded(i + 1))]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return statuslab::Graph::from_edges(n, edges);
}

// Naive Prufer decode (smallest-leaf set), independent of the library decode.
inline statuslab::Graph decode_prufer_naive(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1) leaves.insert(s);
  }
  auto it = leaves.begin();
  int a = *it++;
  edges.emplace_back(a, *it);
  return statuslab::Graph::from_edges(n, edges);
}

// Rooted tree counts r[1..N] (Euler-transform recurrence) and the free tree
// count via Otter's identity t(n) = r(n) - (sum r(i)r(n-i) - [2|n] r(n/2))/2.
inline std::vector<long long> rooted_tree_counts(int max_n) {
  std::vector<long long> r(max_n + 1, 0);
  r[1] = 1;
  for (int n = 1; n < max_n; ++n) {
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
      long long c = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) c += static_cast<long long>(d) * r[d];
      }
      total += c * r[n - k + 1];
    }
    r[n + 1] = total / n;
  }
  return r;
}

inline long long free_tree_count_otter(int n, const std::vector<long long>& r) {
  if (n == 1) return 1;
  long long conv = 0;
  for (int i = 1; i < n; ++i) conv += r[i] * r[n - i];
  if (n % 2 == 0) conv -= r[n / 2];
  return r[n] - conv / 2;
}

}  // namespace testutil
