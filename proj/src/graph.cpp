#include "statuslab/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace statuslab {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::disconnected: return "Disconnected";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::not_a_tree: return "NotATree";
    case errc::too_large: return "TooLarge";
    case errc::invalid_params: return "InvalidParams";
    case errc::not_a_cut_edge: return "NotACutEdge";
    case errc::pendant_edge: return "PendantEdge";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::invalid_branch_selection: return "InvalidBranchSelection";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Graph::Graph(int n, std::vector<std::vector<int>> adj, int edge_count)
    : n_(n), edge_count_(edge_count), adj_(std::move(adj)) {}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw Error(errc::vertex_out_of_range,
                "vertex " + std::to_string(u) + " not in [0," + std::to_string(n_) + ")");
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw Error(errc::invalid_params, "graph order must be at least 1");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    auto& nb = adj[u];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error(errc::duplicate_edge, "duplicate edge at vertex " + std::to_string(u));
    }
  }
  // Connectivity by DFS from vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) throw Error(errc::disconnected, "graph is not connected");
  return Graph(n, std::move(adj), static_cast<int>(edges.size()));
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edges(n, edges);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw Error(errc::invalid_params, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::vector<int> distances_from(const Graph& g, int u) {
  g.check_vertex(u);
  const int n = g.order();
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[u] = 0;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;  // all entries finite: the graph is connected
}

StatusProfile status_profile(const Graph& g) {
  const int n = g.order();
  StatusProfile p;
  p.statuses.resize(n);
  for (int u = 0; u < n; ++u) {
    auto dist = distances_from(g, u);
    long long s = 0;
    for (int d : dist) s += d;
    p.statuses[u] = s;
  }
  p.min_status = *std::min_element(p.statuses.begin(), p.statuses.end());
  for (int u = 0; u < n; ++u) {
    if (p.statuses[u] == p.min_status) p.median.push_back(u);
  }
  p.proximity = n == 1 ? Rational{0, 1} : make_rational(p.min_status, n - 1);
  return p;
}

BranchProfile branch_profile(const Graph& t) {
  if (!t.is_tree()) throw Error(errc::not_a_tree, "branch profile requires a tree");
  const int n = t.order();
  BranchProfile p;
  p.weights.assign(n, 0);
  if (n > 1) {
    // Subtree sizes from an iterative DFS rooted at 0; the components of
    // T - u are the child subtrees of u plus the part above u.
    std::vector<int> parent(n, -1), order;
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
    std::vector<int> size(n, 1);
    for (int i = n - 1; i >= 0; --i) {
      int u = order[i];
      int w = n - size[u];  // 0 for the root
      for (int v : t.neighbors(u)) {
        if (v != parent[u]) w = std::max(w, size[v]);
      }
      p.weights[u] = w;
      if (parent[u] >= 0) size[parent[u]] += size[u];
    }
  }
  p.min_weight = *std::min_element(p.weights.begin(), p.weights.end());
  for (int u = 0; u < n; ++u) {
    if (p.weights[u] == p.min_weight) p.centroid.push_back(u);
  }
  return p;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.order(); ++u) {
    auto dist = distances_from(g, u);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

bool is_median_vertex(const Graph& t, int x) {
  if (!t.is_tree()) throw Error(errc::not_a_tree, "median criterion requires a tree");
  t.check_vertex(x);
  return 2 * branch_profile(t).weights[x] <= t.order();
}

namespace {

long long read_int_token(std::istream& in, const char* what) {
  long long value;
  if (!(in >> value)) {
    throw Error(errc::parse_error, std::string("expected ") + what);
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  long long n = read_int_token(in, "vertex count");
  long long e = read_int_token(in, "edge count");
  if (n < 1 || e < 0 || n > 1'000'000 || e > 10'000'000) {
    throw Error(errc::parse_error, "implausible edge-list header");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    int u = static_cast<int>(read_int_token(in, "edge endpoint"));
    int v = static_cast<int>(read_int_token(in, "edge endpoint"));
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

std::string format_edge_list_flat(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count();
  for (auto [u, v] : g.edges()) out << ' ' << u << ' ' << v;
  return out.str();
}

Graph parse_edge_list_flat(const std::string& line) {
  std::istringstream in(line);
  return read_edge_list(in);
}

}  // namespace statuslab
