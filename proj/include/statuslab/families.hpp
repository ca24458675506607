#pragma once

#include <vector>

#include "statuslab/graph.hpp"

namespace statuslab {

enum class Family { Path, Cycle, Star, A, Dumbbell, Caterpillar };

struct FamilySpec {
  Family family;
  int n = 0;
  std::vector<int> params;  // A: {m}; Dumbbell/Caterpillar: {p, q}
};

// Standard families with fixed vertex layouts so emitted edge lists are
// stable: path 0-1-...-(n-1); star center 0; cycle closes (n-1,0).
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);

// Star on n-m+1 vertices with a pendant edge attached to m-1 of its leaves.
// Layout: 0 = center, 1..n-m = star leaves, pendant n-m+i hangs off leaf i.
Graph make_A(int n, int m);

// Path on n-p-q vertices with p pendant edges at one end and q at the other;
// p >= q >= 0, p+q+2 <= n. Normalizes to the star when p+q = n-1.
// Layout: spine first, then the p pendants at spine vertex 0, then the q
// pendants at the far end.
Graph make_dumbbell(int n, int p, int q);

// Path spine with one pendant hung at each of the first p and last q spine
// vertices; p >= q >= 1, 2(p+q) <= n. Layout: spine first, pendants appended
// in spine order.
Graph make_caterpillar(int n, int p, int q);

Graph make_family(const FamilySpec& spec);

// Closed-form bounds on the minimum status of a tree of order n.
long long bound_matching_lower(long long n, long long m);     // n+m-2
long long bound_matching_upper(long long n, long long m);     // m(n-m), n >= 4
long long bound_domination_lower(long long n, long long gamma);  // n+gamma-2
// Two-case value for gamma < ceil(n/3): odd gamma (3g-1)/2*(n-(3g-1)/2),
// even gamma (3g/2)*(n+1-3g/2) - ceil(n/2).
long long bound_domination_upper_small(long long n, long long gamma);
// 3ng + 3g - n - ceil((n^2+18g^2)/4) for ceil(n/3) < gamma <= floor(n/2).
long long bound_domination_upper_large(long long n, long long gamma);
long long bound_order(long long n);  // floor(n^2/4), n >= 3

}  // namespace statuslab
