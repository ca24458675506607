#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace statuslab {

// Error categories shared by the whole library.
enum class errc {
  duplicate_edge,
  self_loop,
  disconnected,
  vertex_out_of_range,
  not_a_tree,
  too_large,
  invalid_params,
  not_a_cut_edge,
  pendant_edge,
  degree_too_small,
  invalid_branch_selection,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Immutable simple connected graph on vertices 0..n-1.
// Adjacency lists are sorted; all invariants are enforced at construction.
class Graph {
 public:
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return edge_count_; }
  int degree(int u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
  }
  const std::vector<int>& neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
  }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }
  bool has_edge(int u, int v) const;
  bool is_tree() const noexcept { return edge_count_ == n_ - 1; }
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  void check_vertex(int u) const;

 private:
  Graph(int n, std::vector<std::vector<int>> adj, int edge_count);

  int n_;
  int edge_count_;
  std::vector<std::vector<int>> adj_;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Exact rational, reduced, denominator > 0.
struct Rational {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);
std::string to_string(const Rational& r);

struct StatusProfile {
  std::vector<long long> statuses;  // statuses[u] = sum of distances from u
  long long min_status = 0;
  std::vector<int> median;  // sorted argmin set
  Rational proximity;       // min_status / (n-1); 0/1 by convention when n = 1
};

// Branch-weight data of a tree: weights[u] is the largest order among the
// components of T - u (0 when n = 1).
struct BranchProfile {
  std::vector<int> weights;
  int min_weight = 0;
  std::vector<int> centroid;  // sorted argmin set
};

std::vector<int> distances_from(const Graph& g, int u);
StatusProfile status_profile(const Graph& g);
BranchProfile branch_profile(const Graph& t);
int diameter(const Graph& g);

// Median membership test for trees via the branch-weight criterion:
// x is in the median iff w_T(x) <= n/2.
bool is_median_vertex(const Graph& t, int x);

// Edge-list interchange format: first line "n e", then e lines "u v",
// 0-indexed, edges in any order.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// One-line form "n e u v u v ..." used by `enumerate` output and by
// verification witnesses.
std::string format_edge_list_flat(const Graph& g);
Graph parse_edge_list_flat(const std::string& line);

}  // namespace statuslab
