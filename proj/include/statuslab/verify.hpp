#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "statuslab/enumerate.hpp"
#include "statuslab/graph.hpp"

namespace statuslab {

enum class TheoremId {
  MatchLower,
  MatchUpper,
  DomLower,
  DomUpperSmall,
  DomUpperLarge,
  OrderBound,
  DiameterLemma,
  MedianCentroid,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

enum class ClassKind { Matching, Domination };

// Census of one (kind, value) class of trees of order n: how many trees the
// class holds, the extremes of the minimum status, and the canonical codes
// attaining each extreme (with one representative graph per code).
struct ClassRecord {
  int n = 0;
  ClassKind kind = ClassKind::Matching;
  int value = 0;
  long long population = 0;
  long long min_s = 0;
  long long max_s = 0;
  std::vector<std::pair<TreeCode, Graph>> argmin;
  std::vector<std::pair<TreeCode, Graph>> argmax;
};

struct Census {
  int n = 0;
  std::vector<ClassRecord> records;  // matching classes then domination, value ascending
};

// Full census of all non-isomorphic trees of order n. jobs <= 0 picks the
// available hardware parallelism.
Census census(int n, int jobs = 0);
const ClassRecord* find_class(const Census& c, ClassKind kind, int value);

struct Failure {
  int n = 0;
  std::string cls;  // "m=3", "gamma=4", or "-"
  std::string expected;
  std::string observed;
  std::vector<std::string> witnesses;  // flat edge lists
};

struct TheoremReport {
  TheoremId id = TheoremId::MatchLower;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;  // not-applicable classes, band records
  bool passed() const { return failures.empty(); }
};

// {lower, upper}: class minimum n+m-2 with unique extremal A_{n,m}; class
// maximum m(n-m) with the unique balanced dumbbell (checked from n >= 4).
std::array<TheoremReport, 2> verify_matching_theorems(int n_lo, int n_hi, int jobs = 0);

// {lower, upper-small, upper-large}: minimum n+gamma-2 with extremal
// A_{n,gamma}; the two-range maxima with their dumbbell and caterpillar
// extremals. The gamma = ceil(n/3) band is recorded descriptively and checked
// only against the order bound.
std::array<TheoremReport, 3> verify_domination_theorems(int n_lo, int n_hi, int jobs = 0);

// s(G) <= floor(n^2/4) over all connected graphs, equality exactly at the
// path and the cycle. 3 <= n_lo <= n_hi <= 7.
TheoremReport verify_order_bound(int n_lo, int n_hi);

// {diameter, median=centroid}: diameter <= 2n-3*gamma+1 whenever
// gamma > floor(n/3); median = centroid with the branch-weight criterion
// checked vertex by vertex. Scans every tree of order 1..n_hi.
std::array<TheoremReport, 2> verify_structural_lemmas(int n_hi, int jobs = 0);

// Runs the requested theorems over [n_lo, n_hi], sharing censuses between
// them; the order-bound range is clamped to the n <= 7 graph budget.
std::vector<TheoremReport> run_verification(const std::vector<TheoremId>& which, int n_lo,
                                            int n_hi, int jobs = 0);

std::string reports_text(const std::vector<TheoremReport>& reports);
std::string reports_json(const std::vector<TheoremReport>& reports);
std::string reports_csv(const std::vector<TheoremReport>& reports);
int verification_exit_code(const std::vector<TheoremReport>& reports);  // 0 pass, 2 fail

namespace detail {

using BoundFn = std::function<long long(int n, int value)>;
using ExtremalFn = std::function<std::optional<Graph>(int n, int value)>;
using ApplicableFn = std::function<bool(int n, int value)>;

// Checks one side of every (kind, value) class against a closed-form bound
// and, when the bound matches, the uniqueness of the extremal tree. Exposed
// so tests can inject deliberately wrong bounds and watch the harness fail.
TheoremReport check_tree_classes(TheoremId id, ClassKind kind, bool minimum_side,
                                 const BoundFn& bound, const ExtremalFn& extremal,
                                 const ApplicableFn& applicable,
                                 const std::vector<const Census*>& censuses);

}  // namespace detail

}  // namespace statuslab
