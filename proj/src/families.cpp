#include "statuslab/families.hpp"

#include <string>

namespace statuslab {

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw Error(errc::invalid_params, what);
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

Graph make_path(int n) {
  if (n < 1) bad_params("path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) bad_params("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph make_star(int n) {
  if (n < 1) bad_params("star requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph make_A(int n, int m) {
  if (n < 2 || m < 1 || 2 * m > n) bad_params("A_{n,m} requires n >= 2 and 1 <= m <= n/2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n - m; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= m - 1; ++i) edges.emplace_back(i, n - m + i);
  return Graph::from_edges(n, edges);
}

Graph make_dumbbell(int n, int p, int q) {
  if (p < q || q < 0) bad_params("dumbbell requires p >= q >= 0");
  if (p + q == n - 1) return make_star(n);
  if (p + q + 2 > n) bad_params("dumbbell requires p+q+2 <= n (or p+q = n-1)");
  const int spine = n - p - q;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < p; ++i) edges.emplace_back(0, spine + i);
  for (int i = 0; i < q; ++i) edges.emplace_back(spine - 1, spine + p + i);
  return Graph::from_edges(n, edges);
}

Graph make_caterpillar(int n, int p, int q) {
  if (q < 1 || p < q) bad_params("caterpillar requires p >= q >= 1");
  if (2 * (p + q) > n) bad_params("caterpillar requires 2(p+q) <= n");
  const int spine = n - p - q;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < p; ++i) edges.emplace_back(i, next++);
  for (int i = spine - q; i < spine; ++i) edges.emplace_back(i, next++);
  return Graph::from_edges(n, edges);
}

Graph make_family(const FamilySpec& spec) {
  auto need = [&](std::size_t count) {
    if (spec.params.size() != count) bad_params("wrong parameter count for family");
  };
  switch (spec.family) {
    case Family::Path: need(0); return make_path(spec.n);
    case Family::Cycle: need(0); return make_cycle(spec.n);
    case Family::Star: need(0); return make_star(spec.n);
    case Family::A: need(1); return make_A(spec.n, spec.params[0]);
    case Family::Dumbbell: need(2); return make_dumbbell(spec.n, spec.params[0], spec.params[1]);
    case Family::Caterpillar:
      need(2);
      return make_caterpillar(spec.n, spec.params[0], spec.params[1]);
  }
  bad_params("unknown family");
}

long long bound_matching_lower(long long n, long long m) {
  if (m < 1 || 2 * m > n) bad_params("requires 1 <= m <= n/2");
  return n + m - 2;
}

long long bound_matching_upper(long long n, long long m) {
  if (n < 4) bad_params("matching upper bound stated for n >= 4");
  if (m < 1 || 2 * m > n) bad_params("requires 1 <= m <= n/2");
  return m * (n - m);
}

long long bound_domination_lower(long long n, long long gamma) {
  if (gamma < 1 || 2 * gamma > n) bad_params("requires 1 <= gamma <= n/2");
  return n + gamma - 2;
}

long long bound_domination_upper_small(long long n, long long gamma) {
  if (gamma < 1 || gamma >= ceil_div(n, 3)) bad_params("requires 1 <= gamma < ceil(n/3)");
  if (gamma % 2 == 1) {
    long long k = (3 * gamma - 1) / 2;
    return k * (n - k);
  }
  long long k = 3 * gamma / 2;
  return k * (n + 1 - k) - ceil_div(n, 2);
}

long long bound_domination_upper_large(long long n, long long gamma) {
  if (gamma <= ceil_div(n, 3) || 2 * gamma > n) {
    bad_params("requires ceil(n/3) < gamma <= n/2");
  }
  return 3 * n * gamma + 3 * gamma - n - ceil_div(n * n + 18 * gamma * gamma, 4);
}

long long bound_order(long long n) {
  if (n < 3) bad_params("order bound stated for n >= 3");
  return n * n / 4;
}

}  // namespace statuslab
