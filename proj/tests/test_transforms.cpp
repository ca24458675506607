#include "doctest.h"
#include "helpers.hpp"
#include "statuslab/enumerate.hpp"
#include "statuslab/families.hpp"
#include "statuslab/transforms.hpp"

using namespace statuslab;

namespace {

long long min_status(const Graph& g) { return status_profile(g).min_status; }

bool code_for(errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// A unicyclic graph: random tree plus one closing edge.
Graph random_unicyclic(int n, testutil::Rng& rng) {
  const Graph t = random_tree(n, rng.next());
  auto edges = t.edges();
  while (true) {
    const int u = static_cast<int>(rng.bounded(n));
    const int v = static_cast<int>(rng.bounded(n));
    if (u == v || t.has_edge(u, v)) continue;
    edges.emplace_back(u, v);
    return graph_from_edges(n, edges);
  }
}

}  // namespace

TEST_CASE("cut edge classification") {
  const Graph p4 = make_path(4);
  auto middle = find_cut_edge(p4, 1, 2);
  REQUIRE(middle.has_value());
  CHECK_FALSE(middle->pendant);
  auto end = find_cut_edge(p4, 0, 1);
  REQUIRE(end.has_value());
  CHECK(end->pendant);
  CHECK_FALSE(find_cut_edge(p4, 0, 2).has_value());  // not an edge

  const Graph c5 = make_cycle(5);
  for (auto [u, v] : c5.edges()) CHECK_FALSE(find_cut_edge(c5, u, v).has_value());
  CHECK(cut_edges(c5).empty());
  CHECK(cut_edges(p4).size() == 3);
}

TEST_CASE("contract_to_pendant on the named cases") {
  const Graph p4 = make_path(4);
  const Graph contracted = contract_to_pendant(p4, 1, 2);
  CHECK(min_status(p4) == 4);
  CHECK(min_status(contracted) == 3);
  CHECK(canonical_code(contracted) == canonical_code(make_star(4)));

  const Graph d = make_dumbbell(8, 3, 2);
  const Graph dc = contract_to_pendant(d, 0, 1);  // spine edge
  CHECK(dc.order() == d.order());
  CHECK(min_status(dc) < min_status(d));

  // P_3 has only pendant edges.
  const Graph p3 = make_path(3);
  for (auto [u, v] : p3.edges()) {
    CHECK(code_for(errc::pendant_edge, [&] { contract_to_pendant(p3, u, v); }));
  }
  CHECK(code_for(errc::not_a_cut_edge, [&] { contract_to_pendant(make_cycle(5), 0, 1); }));
  CHECK(code_for(errc::not_a_cut_edge, [&] { contract_to_pendant(p4, 0, 2); }));
}

TEST_CASE("contract_to_pendant strictly decreases min status (fuzz)") {
  testutil::Rng rng(31);
  int applied = 0;
  while (applied < 300) {
    const int n = 4 + static_cast<int>(rng.bounded(61));
    const Graph g = rng.bounded(2) == 0 ? random_tree(n, rng.next()) : random_unicyclic(n, rng);
    std::vector<CutEdge> candidates;
    for (const auto& e : cut_edges(g)) {
      if (!e.pendant) candidates.push_back(e);
    }
    if (candidates.empty()) continue;
    const auto& e = candidates[rng.bounded(candidates.size())];
    const Graph result = contract_to_pendant(g, e);
    CHECK(result.order() == g.order());
    CHECK(min_status(result) < min_status(g));
    ++applied;
  }
}

TEST_CASE("move_branches on the named cases") {
  // Spider with center 0 and legs of sizes 3, 2, 1:
  // 0-1-2-3, 0-4-5, 0-6.
  const Graph spider =
      graph_from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {0, 6}});
  // Move the size-1 leg (neighbor 6) to the far end of the size-2 leg (w=5).
  const Graph moved = move_branches(spider, 0, 5, {6});
  CHECK(moved.order() == spider.order());
  CHECK(moved.is_tree());
  CHECK(min_status(moved) > min_status(spider));

  // A_{8,3}: move one bare star leaf onto a pendant-edge branch.
  const Graph a = make_A(8, 3);  // center 0; leaves 1..5; pendants 6,7 on 1,2
  const Graph a_moved = move_branches(a, 0, 6, {3});
  CHECK(min_status(a_moved) > min_status(a));

  CHECK(code_for(errc::degree_too_small, [&] { move_branches(make_path(5), 1, 3, {0}); }));
  CHECK(code_for(errc::not_a_tree, [&] { move_branches(make_cycle(6), 0, 2, {1}); }));
  // Moving the branch that contains w is invalid.
  CHECK(code_for(errc::invalid_branch_selection, [&] { move_branches(spider, 0, 5, {4}); }));
  // Empty selection.
  CHECK(code_for(errc::invalid_branch_selection, [&] { move_branches(spider, 0, 5, {}); }));
  // Moved vertex must be a neighbor of u.
  CHECK(code_for(errc::invalid_branch_selection, [&] { move_branches(spider, 0, 5, {2}); }));
  // w = u is not inside any branch.
  CHECK(code_for(errc::invalid_branch_selection, [&] { move_branches(spider, 0, 0, {6}); }));
  // No unmoved branch at least as large as w's: w in the size-3 branch,
  // moving both smaller branches leaves nothing to anchor it.
  CHECK(code_for(errc::invalid_branch_selection, [&] { move_branches(spider, 0, 3, {4, 6}); }));
}

TEST_CASE("move_branches strictly increases min status (fuzz)") {
  testutil::Rng rng(37);
  int applied = 0;
  while (applied < 300) {
    const int n = 5 + static_cast<int>(rng.bounded(60));
    const Graph t = random_tree(n, rng.next());
    const int u = static_cast<int>(rng.bounded(n));
    if (t.degree(u) < 3) continue;
    const auto& nbrs = t.neighbors(u);
    // Branch sizes via the deletion oracle.
    std::vector<int> size_of(nbrs.size());
    std::vector<std::vector<int>> members(nbrs.size());
    {
      std::vector<int> which(n, -1);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        std::vector<int> stack{nbrs[i]};
        which[nbrs[i]] = static_cast<int>(i);
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          members[i].push_back(x);
          for (int y : t.neighbors(x)) {
            if (y != u && which[y] < 0) {
              which[y] = static_cast<int>(i);
              stack.push_back(y);
            }
          }
        }
        size_of[i] = static_cast<int>(members[i].size());
      }
    }
    // Pick two anchor branches b1 (larger or equal) and b2, a target w inside
    // b2, and a nonempty selection among the remaining branch roots.
    const std::size_t b1 = rng.bounded(nbrs.size());
    const std::size_t b2 = rng.bounded(nbrs.size());
    if (b1 == b2 || size_of[b1] < size_of[b2]) continue;
    const int w = members[b2][rng.bounded(members[b2].size())];
    std::vector<int> moved;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (i == b1 || i == b2) continue;
      if (rng.bounded(2) == 0) moved.push_back(nbrs[i]);
    }
    if (moved.empty()) continue;
    const Graph result = move_branches(t, u, w, moved);
    CHECK(result.order() == n);
    CHECK(result.is_tree());
    CHECK(min_status(result) > min_status(t));
    ++applied;
  }
}

TEST_CASE("dumbbell shift strictly decreases min status") {
  for (auto [n, p, q] : {std::tuple{10, 2, 2}, {9, 3, 2}, {8, 2, 2}}) {
    const auto [before, after] = dumbbell_shift(n, p, q);
    CHECK(min_status(before) > min_status(after));
    CHECK(canonical_code(before) == canonical_code(make_dumbbell(n, p, q)));
    CHECK(canonical_code(after) == canonical_code(make_dumbbell(n, p + 1, q - 1)));
  }
  CHECK_THROWS_AS(dumbbell_shift(10, 3, 1), Error);  // q < 2
  CHECK_THROWS_AS(dumbbell_shift(6, 3, 2), Error);   // p+q+2 > n
}

TEST_CASE("caterpillar shift: balanced side strictly larger") {
  for (auto [n, p, q] : {std::tuple{12, 3, 1}, {14, 4, 2}, {10, 3, 1}}) {
    const auto [balanced, skewed] = caterpillar_shift(n, p, q);
    CHECK(min_status(balanced) > min_status(skewed));
    CHECK(canonical_code(balanced) == canonical_code(make_caterpillar(n, p - 1, q + 1)));
    CHECK(canonical_code(skewed) == canonical_code(make_caterpillar(n, p, q)));
  }
  CHECK_THROWS_AS(caterpillar_shift(12, 2, 1), Error);  // p < q+2
  CHECK_THROWS_AS(caterpillar_shift(8, 3, 1), Error);   // 2(p+q) = n not < n
}

TEST_CASE("shift inequalities hold exhaustively for n <= 24") {
  for (int n = 4; n <= 24; ++n) {
    for (int q = 2; q <= n; ++q) {
      for (int p = q; p + q + 2 <= n; ++p) {
        const auto [before, after] = dumbbell_shift(n, p, q);
        CHECK(min_status(before) > min_status(after));
      }
    }
    for (int q = 1; q <= n; ++q) {
      for (int p = q + 2; 2 * (p + q) < n; ++p) {
        const auto [balanced, skewed] = caterpillar_shift(n, p, q);
        CHECK(min_status(balanced) > min_status(skewed));
      }
    }
  }
}
