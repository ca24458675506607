#include "statuslab/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace statuslab {

namespace {

constexpr long long kInf = 1'000'000'000'000'000LL;

long long sat_add(long long a, long long b) {
  if (a >= kInf || b >= kInf) return kInf;
  return a + b;
}

// Rooted traversal order and parents, root 0.
void root_tree(const Graph& t, std::vector<int>& parent, std::vector<int>& order) {
  const int n = t.order();
  parent.assign(n, -1);
  order.clear();
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int v : t.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }
}

void require_tree(const Graph& t, const char* what) {
  if (!t.is_tree()) throw Error(errc::not_a_tree, what);
}

}  // namespace

bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
  std::vector<char> used(g.order(), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) return false;
    if (!g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> in(g.order(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) return false;
    in[v] = 1;
  }
  for (int u = 0; u < g.order(); ++u) {
    if (in[u]) continue;
    bool covered = false;
    for (int v : g.neighbors(u)) {
      if (in[v]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

MatchingResult matching_number_tree(const Graph& t) {
  require_tree(t, "matching DP requires a tree");
  const int n = t.order();
  std::vector<int> parent, order;
  root_tree(t, parent, order);

  // dp_free[v]: best matching in subtree(v) leaving v unmatched;
  // dp_any[v]: best matching in subtree(v).
  std::vector<int> dp_free(n, 0), dp_any(n, 0), match_child(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    int sum_any = 0;
    for (int c : t.neighbors(v)) {
      if (c != parent[v]) sum_any += dp_any[c];
    }
    dp_free[v] = sum_any;
    int best_gain = 0;
    for (int c : t.neighbors(v)) {
      if (c == parent[v]) continue;
      int gain = 1 + dp_free[c] - dp_any[c];
      if (gain > best_gain) {  // strict: smallest child wins ties
        best_gain = gain;
        match_child[v] = c;
      }
    }
    dp_any[v] = sum_any + best_gain;
    if (best_gain == 0) match_child[v] = -1;
  }

  MatchingResult result;
  result.size = dp_any[0];
  // need_free records whether v must stay unmatched in the chosen optimum.
  std::vector<std::pair<int, char>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [v, need_free] = stack.back();
    stack.pop_back();
    int matched = (!need_free && match_child[v] >= 0) ? match_child[v] : -1;
    if (matched >= 0) result.witness.emplace_back(std::min(v, matched), std::max(v, matched));
    for (int c : t.neighbors(v)) {
      if (c != parent[v]) stack.push_back({c, static_cast<char>(c == matched)});
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  assert(static_cast<int>(result.witness.size()) == result.size);
  assert(is_matching(t, result.witness));
  return result;
}

DominationResult domination_number_tree(const Graph& t) {
  require_tree(t, "domination DP requires a tree");
  const int n = t.order();
  std::vector<int> parent, order;
  root_tree(t, parent, order);

  // f0: v in the set; f1: v out and dominated by a child;
  // f2: v out and still undominated (its parent must be in the set).
  std::vector<long long> f0(n), f1(n), f2(n);
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    long long in_set = 1, out_base = 0, out_undom = 0;
    bool has_child = false, child_in_set = false;
    long long flip_cost = kInf;
    for (int c : t.neighbors(v)) {
      if (c == parent[v]) continue;
      has_child = true;
      in_set = sat_add(in_set, std::min({f0[c], f1[c], f2[c]}));
      long long best_out = std::min(f0[c], f1[c]);
      out_base = sat_add(out_base, best_out);
      if (f0[c] <= f1[c]) child_in_set = true;
      flip_cost = std::min(flip_cost, f0[c] - best_out);
      out_undom = sat_add(out_undom, f1[c]);
    }
    f0[v] = in_set;
    f1[v] = has_child ? (child_in_set ? out_base : sat_add(out_base, flip_cost)) : kInf;
    f2[v] = out_undom;
  }

  DominationResult result;
  result.size = static_cast<int>(std::min(f0[0], f1[0]));
  std::vector<std::pair<int, char>> stack{{0, f0[0] <= f1[0] ? char(0) : char(1)}};
  while (!stack.empty()) {
    auto [v, state] = stack.back();
    stack.pop_back();
    if (state == 0) {
      result.witness.push_back(v);
      for (int c : t.neighbors(v)) {
        if (c == parent[v]) continue;
        char cs = 2;
        long long best = f2[c];
        if (f1[c] < best) {
          best = f1[c];
          cs = 1;
        }
        if (f0[c] <= best) cs = 0;
        stack.push_back({c, cs});
      }
    } else if (state == 1) {
      // Pick per-child minima, preferring the in-set state on ties; if no
      // child landed in the set, flip the cheapest (smallest-index) one.
      std::vector<std::pair<int, char>> picks;
      bool have_zero = false;
      for (int c : t.neighbors(v)) {
        if (c == parent[v]) continue;
        char cs = f0[c] <= f1[c] ? char(0) : char(1);
        have_zero = have_zero || cs == 0;
        picks.push_back({c, cs});
      }
      if (!have_zero) {
        int best_c = -1;
        long long best_cost = kInf;
        for (auto [c, cs] : picks) {
          long long cost = f0[c] - f1[c];
          if (cost < best_cost) {
            best_cost = cost;
            best_c = c;
          }
        }
        for (auto& [c, cs] : picks) {
          if (c == best_c) cs = 0;
        }
      }
      for (auto pick : picks) stack.push_back(pick);
    } else {
      for (int c : t.neighbors(v)) {
        if (c != parent[v]) stack.push_back({c, 1});
      }
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  assert(static_cast<int>(result.witness.size()) == result.size);
  assert(is_dominating_set(t, result.witness));
  return result;
}

namespace {

void matching_search(const std::vector<std::pair<int, int>>& edges, std::size_t i,
                     std::uint64_t used, int current, int& best,
                     std::vector<std::size_t>& chosen, std::vector<std::size_t>& best_chosen) {
  if (current + static_cast<int>(edges.size() - i) <= best) return;  // bound
  if (i == edges.size()) return;
  auto [u, v] = edges[i];
  std::uint64_t bits = (1ULL << u) | (1ULL << v);
  if ((used & bits) == 0) {
    chosen.push_back(i);
    if (current + 1 > best) {
      best = current + 1;
      best_chosen = chosen;
    }
    matching_search(edges, i + 1, used | bits, current + 1, best, chosen, best_chosen);
    chosen.pop_back();
  }
  matching_search(edges, i + 1, used, current, best, chosen, best_chosen);
}

}  // namespace

MatchingResult matching_number_bruteforce(const Graph& g) {
  if (g.edge_count() > 24) {
    throw Error(errc::too_large, "matching brute force limited to 24 edges");
  }
  auto edges = g.edges();
  int best = 0;
  std::vector<std::size_t> chosen, best_chosen;
  matching_search(edges, 0, 0, 0, best, chosen, best_chosen);
  MatchingResult result;
  result.size = best;
  for (std::size_t i : best_chosen) result.witness.push_back(edges[i]);
  std::sort(result.witness.begin(), result.witness.end());
  assert(is_matching(g, result.witness));
  return result;
}

DominationResult domination_number_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw Error(errc::too_large, "domination brute force limited to 20 vertices");
  std::vector<std::uint32_t> closed(n);
  for (int u = 0; u < n; ++u) {
    closed[u] = 1u << u;
    for (int v : g.neighbors(u)) closed[u] |= 1u << v;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack: all k-subsets in ascending mask order.
    std::uint32_t mask = (1u << k) - 1;
    while (mask <= full) {
      std::uint32_t cover = 0;
      for (std::uint32_t m = mask; m; m &= m - 1) {
        cover |= closed[__builtin_ctz(m)];
      }
      if (cover == full) {
        DominationResult result;
        result.size = k;
        for (std::uint32_t m = mask; m; m &= m - 1) {
          result.witness.push_back(__builtin_ctz(m));
        }
        assert(is_dominating_set(g, result.witness));
        return result;
      }
      std::uint32_t c = mask & -mask;
      std::uint32_t r = mask + c;
      if (r > full) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  // Unreachable: the full vertex set always dominates.
  throw Error(errc::invalid_params, "no dominating set found");
}

}  // namespace statuslab
