#include <numeric>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "helpers.hpp"
#include "statuslab/enumerate.hpp"
#include "statuslab/families.hpp"
#include "statuslab/graph.hpp"

using namespace statuslab;

namespace {

// Automorphism count of a free tree from the rooted code structure: identical
// child subtrees can be permuted; a bicentroidal tree with isomorphic halves
// gains the swap.
std::pair<std::string, long long> rooted_code_aut(const Graph& t, int v, int parent) {
  std::vector<std::pair<std::string, long long>> kids;
  for (int c : t.neighbors(v)) {
    if (c != parent) kids.push_back(rooted_code_aut(t, c, v));
  }
  std::sort(kids.begin(), kids.end());
  long long aut = 1;
  std::string code = "(";
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j].first == kids[i].first) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) aut *= static_cast<long long>(k);
    for (std::size_t k = i; k < j; ++k) {
      aut *= kids[k].second;
      code += kids[k].first;
    }
    i = j;
  }
  code += ")";
  return {code, aut};
}

long long tree_automorphisms(const Graph& t) {
  const auto centroid = branch_profile(t).centroid;
  if (centroid.size() == 1) return rooted_code_aut(t, centroid[0], -1).second;
  const auto a = rooted_code_aut(t, centroid[0], centroid[1]);
  const auto b = rooted_code_aut(t, centroid[1], centroid[0]);
  return a.second * b.second * (a.first == b.first ? 2 : 1);
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long power(long long base, int exp) {
  long long out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// Test-local labeled-graph machinery for the literal dedup oracle.
struct MaskTools {
  int n, bits;
  int bit[7][7] = {};
  std::pair<int, int> pair_of[21];
  std::vector<std::vector<int>> perms;
  explicit MaskTools(int n_) : n(n_) {
    int b = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        bit[i][j] = bit[j][i] = b;
        pair_of[b] = {i, j};
        ++b;
      }
    }
    bits = b;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::uint32_t apply(std::uint32_t mask, const std::vector<int>& perm) const {
    std::uint32_t image = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      auto [i, j] = pair_of[__builtin_ctz(m)];
      image |= 1u << bit[perm[i]][perm[j]];
    }
    return image;
  }
  bool connected(std::uint32_t mask) const {
    std::uint32_t rows[7] = {};
    for (std::uint32_t m = mask; m; m &= m - 1) {
      auto [i, j] = pair_of[__builtin_ctz(m)];
      rows[i] |= 1u << j;
      rows[j] |= 1u << i;
    }
    std::uint32_t reach = 1, prev = 0;
    while (reach != prev) {
      prev = reach;
      for (std::uint32_t m = reach; m; m &= m - 1) reach |= rows[__builtin_ctz(m)];
    }
    return reach == (1u << n) - 1;
  }
};

}  // namespace

TEST_CASE("canonical codes are relabeling invariants") {
  // P_4 written two ways: 0-1-2-3 and 2-0-3-1.
  const Graph a = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b = graph_from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(make_star(4)));

  testutil::Rng rng(41);
  const Graph d = make_dumbbell(8, 3, 2);
  for (int i = 0; i < 20; ++i) {
    CHECK(canonical_code(testutil::relabel(d, rng)) == canonical_code(d));
  }
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(2 + static_cast<int>(rng.bounded(30)), rng.next());
    CHECK(canonical_code(testutil::relabel(t, rng)) == canonical_code(t));
  }
  CHECK_THROWS_AS(canonical_code(make_cycle(4)), Error);
}

TEST_CASE("tree enumeration counts match Otter's formula up to n=14") {
  const auto r = testutil::rooted_tree_counts(14);
  long long expected4 = testutil::free_tree_count_otter(4, r);
  CHECK(expected4 == 2);
  CHECK(testutil::free_tree_count_otter(7, r) == 11);
  CHECK(testutil::free_tree_count_otter(10, r) == 106);
  for (int n = 1; n <= 14; ++n) {
    long long count = 0;
    for_each_tree(n, [&](const Graph&, const TreeCode&) { ++count; });
    CHECK(count == testutil::free_tree_count_otter(n, r));
  }
}

TEST_CASE("tree enumeration matches the Prufer-and-dedup recount up to n=8") {
  for (int n = 2; n <= 8; ++n) {
    std::unordered_set<std::string> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
      classes.insert(canonical_code(testutil::decode_prufer_naive(n, seq)).code);
      int i = n - 3;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
    CHECK(static_cast<long long>(classes.size()) ==
          static_cast<long long>(enumerate_trees(n).size()));
  }
}

TEST_CASE("labeled-count identity certifies enumeration completeness") {
  // Sum over classes of n!/|Aut| must give Cayley's n^(n-2).
  for (int n = 2; n <= 10; ++n) {
    long long labeled = 0;
    for_each_tree(n, [&](const Graph& t, const TreeCode&) {
      const long long aut = tree_automorphisms(t);
      REQUIRE(factorial(n) % aut == 0);
      labeled += factorial(n) / aut;
    });
    CHECK(labeled == power(n, n - 2));
  }
}

TEST_CASE("enumerated trees are valid, distinct, and code-ordered") {
  for (int n : {4, 7, 10}) {
    std::vector<TreeCode> codes;
    for_each_tree(n, [&](const Graph& g, const TreeCode& code) {
      CHECK(g.order() == n);
      CHECK(g.is_tree());
      CHECK(canonical_code(g) == code);
      codes.push_back(code);
    });
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
  }
  CHECK(enumerate_trees(4).size() == 2);
  CHECK_THROWS_AS(enumerate_trees(19), Error);
  CHECK_THROWS_AS(enumerate_trees(0), Error);
}

TEST_CASE("connected graph enumeration matches the literal permutation dedup") {
  const long long expected[] = {0, 0, 1, 2, 6, 21, 112};
  for (int n = 2; n <= 6; ++n) {
    MaskTools mt(n);
    std::set<std::uint32_t> literal;
    for (std::uint32_t mask = 0; mask < (1u << mt.bits); ++mask) {
      if (!mt.connected(mask)) continue;
      std::uint32_t best = mask;
      for (const auto& p : mt.perms) best = std::min(best, mt.apply(mask, p));
      literal.insert(best);
    }
    CHECK(static_cast<long long>(literal.size()) == expected[n]);

    const auto graphs = enumerate_connected_graphs(n);
    CHECK(static_cast<long long>(graphs.size()) == expected[n]);
    std::set<std::uint32_t> produced;
    for (const auto& g : graphs) produced.insert(canonical_graph_code(g));
    CHECK(produced == literal);
  }
}

TEST_CASE("connected graph enumeration satisfies the labeled-count identity") {
  for (int n = 4; n <= 6; ++n) {
    MaskTools mt(n);
    long long labeled_direct = 0;
    for (std::uint32_t mask = 0; mask < (1u << mt.bits); ++mask) {
      if (mt.connected(mask)) ++labeled_direct;
    }
    long long labeled_from_classes = 0;
    for (const auto& g : enumerate_connected_graphs(n)) {
      std::uint32_t mask = 0;
      for (auto [u, v] : g.edges()) mask |= 1u << mt.bit[u][v];
      long long aut = 0;
      for (const auto& p : mt.perms) {
        if (mt.apply(mask, p) == mask) ++aut;
      }
      REQUIRE(factorial(n) % aut == 0);
      labeled_from_classes += factorial(n) / aut;
    }
    CHECK(labeled_from_classes == labeled_direct);
  }
}

TEST_CASE("graph canonical codes are relabeling invariants") {
  testutil::Rng rng(43);
  const Graph g = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  for (int i = 0; i < 20; ++i) {
    CHECK(canonical_graph_code(testutil::relabel(g, rng)) == canonical_graph_code(g));
  }
  CHECK(canonical_graph_code(make_path(5)) != canonical_graph_code(make_cycle(5)));
  CHECK_THROWS_AS(enumerate_connected_graphs(8), Error);
  CHECK_THROWS_AS(enumerate_connected_graphs(1), Error);
}

TEST_CASE("random trees are deterministic, valid, and hit every labeled tree") {
  const Graph a = random_tree(5, 42);
  const Graph b = random_tree(5, 42);
  CHECK(a.edges() == b.edges());
  CHECK(random_tree(1, 7).order() == 1);
  CHECK(random_tree(2, 7).edges() == std::vector<std::pair<int, int>>{{0, 1}});

  testutil::Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    const Graph t = random_tree(1 + static_cast<int>(rng.bounded(200)), rng.next());
    CHECK(t.is_tree());
  }

  // All 16 labeled trees on 4 vertices show up quickly.
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    seen.insert(format_edge_list_flat(random_tree(4, seed)));
  }
  CHECK(seen.size() == 16);

  // Median = centroid on larger random trees.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph t = random_tree(300, seed);
    CHECK(status_profile(t).median == branch_profile(t).centroid);
  }
}
