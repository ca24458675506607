#include "statuslab/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "statuslab/families.hpp"
#include "statuslab/invariants.hpp"

namespace statuslab {

namespace {

constexpr TheoremId kAllTheorems[] = {
    TheoremId::MatchLower,   TheoremId::MatchUpper,    TheoremId::DomLower,
    TheoremId::DomUpperSmall, TheoremId::DomUpperLarge, TheoremId::OrderBound,
    TheoremId::DiameterLemma, TheoremId::MedianCentroid,
};

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Deterministic parallel map: f(i) writes only to slot i of its output.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  std::size_t workers = static_cast<std::size_t>(resolve_jobs(jobs));
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::future<void>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&f, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    }));
  }
  for (auto& fut : futures) fut.get();
}

int ceil_third(int n) { return (n + 2) / 3; }

std::string class_label(ClassKind kind, int value) {
  return (kind == ClassKind::Matching ? "m=" : "gamma=") + std::to_string(value);
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::MatchLower: return "MatchLower";
    case TheoremId::MatchUpper: return "MatchUpper";
    case TheoremId::DomLower: return "DomLower";
    case TheoremId::DomUpperSmall: return "DomUpperSmall";
    case TheoremId::DomUpperLarge: return "DomUpperLarge";
    case TheoremId::OrderBound: return "OrderBound";
    case TheoremId::DiameterLemma: return "DiameterLemma";
    case TheoremId::MedianCentroid: return "MedianCentroid";
  }
  return "Unknown";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  std::string lowered;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (TheoremId id : kAllTheorems) {
    std::string canon;
    for (const char* p = theorem_name(id); *p; ++p) {
      canon += static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
    }
    if (lowered == canon) return id;
  }
  return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
  return {std::begin(kAllTheorems), std::end(kAllTheorems)};
}

Census census(int n, int jobs) {
  std::vector<Graph> trees;
  std::vector<TreeCode> codes;
  for_each_tree(n, [&](const Graph& g, const TreeCode& code) {
    trees.push_back(g);
    codes.push_back(code);
  });

  struct Item {
    long long s = 0;
    int m = 0;
    int g = 0;
  };
  std::vector<Item> items(trees.size());
  parallel_for(trees.size(), jobs, [&](std::size_t i) {
    items[i].s = status_profile(trees[i]).min_status;
    items[i].m = matching_number_tree(trees[i]).size;
    items[i].g = domination_number_tree(trees[i]).size;
  });

  std::map<std::pair<int, int>, ClassRecord> acc;  // (kind, value) -> record
  auto update = [&](ClassKind kind, int value, std::size_t i) {
    auto& rec = acc[{static_cast<int>(kind), value}];
    if (rec.population == 0) {
      rec.n = n;
      rec.kind = kind;
      rec.value = value;
      rec.min_s = rec.max_s = items[i].s;
    }
    ++rec.population;
    if (items[i].s < rec.min_s) {
      rec.min_s = items[i].s;
      rec.argmin.clear();
    }
    if (items[i].s == rec.min_s) rec.argmin.emplace_back(codes[i], trees[i]);
    if (items[i].s > rec.max_s) {
      rec.max_s = items[i].s;
      rec.argmax.clear();
    }
    if (items[i].s == rec.max_s) rec.argmax.emplace_back(codes[i], trees[i]);
  };
  for (std::size_t i = 0; i < trees.size(); ++i) {
    update(ClassKind::Matching, items[i].m, i);
    update(ClassKind::Domination, items[i].g, i);
  }

  Census result;
  result.n = n;
  for (auto& [key, rec] : acc) result.records.push_back(std::move(rec));
  return result;  // trees arrive in code order, so argmin/argmax stay sorted
}

const ClassRecord* find_class(const Census& c, ClassKind kind, int value) {
  for (const auto& rec : c.records) {
    if (rec.kind == kind && rec.value == value) return &rec;
  }
  return nullptr;
}

namespace detail {

TheoremReport check_tree_classes(TheoremId id, ClassKind kind, bool minimum_side,
                                 const BoundFn& bound, const ExtremalFn& extremal,
                                 const ApplicableFn& applicable,
                                 const std::vector<const Census*>& censuses) {
  TheoremReport report;
  report.id = id;
  report.n_lo = censuses.front()->n;
  report.n_hi = censuses.back()->n;
  for (const Census* c : censuses) {
    const int n = c->n;
    for (int value = 1; 2 * value <= n; ++value) {
      const std::string cls = class_label(kind, value);
      if (!applicable(n, value)) {
        report.notes.push_back("n=" + std::to_string(n) + " " + cls + ": not applicable");
        continue;
      }
      const ClassRecord* rec = find_class(*c, kind, value);
      if (rec == nullptr || rec->population == 0) {
        report.notes.push_back("n=" + std::to_string(n) + " " + cls +
                               ": empty class, not applicable");
        continue;
      }
      const long long expected = bound(n, value);
      const long long observed = minimum_side ? rec->min_s : rec->max_s;
      const auto& extremes = minimum_side ? rec->argmin : rec->argmax;
      if (observed != expected) {
        Failure f;
        f.n = n;
        f.cls = cls;
        f.expected = std::to_string(expected);
        f.observed = std::to_string(observed);
        for (const auto& [code, g] : extremes) f.witnesses.push_back(format_edge_list_flat(g));
        report.failures.push_back(std::move(f));
        continue;
      }
      if (auto ext = extremal(n, value)) {
        const TreeCode ext_code = canonical_code(*ext);
        if (extremes.size() != 1 || extremes[0].first != ext_code) {
          Failure f;
          f.n = n;
          f.cls = cls;
          f.expected = "unique extremal " + format_edge_list_flat(*ext);
          f.observed = std::to_string(extremes.size()) + " extremal class(es)";
          for (const auto& [code, g] : extremes) f.witnesses.push_back(format_edge_list_flat(g));
          report.failures.push_back(std::move(f));
        }
      }
    }
  }
  return report;
}

}  // namespace detail

namespace {

std::vector<const Census*> census_pointers(const std::vector<Census>& censuses) {
  std::vector<const Census*> out;
  out.reserve(censuses.size());
  for (const auto& c : censuses) out.push_back(&c);
  return out;
}

std::vector<Census> build_censuses(int n_lo, int n_hi, int jobs) {
  if (n_lo < 2 || n_lo > n_hi) throw Error(errc::invalid_params, "need 2 <= n_lo <= n_hi");
  if (n_hi > kTreeEnumerationLimit) {
    throw Error(errc::too_large, "verification range exceeds the tree enumeration budget");
  }
  std::vector<Census> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(census(n, jobs));
  return out;
}

TheoremReport match_lower_report(const std::vector<const Census*>& cs) {
  return detail::check_tree_classes(
      TheoremId::MatchLower, ClassKind::Matching, /*minimum_side=*/true,
      [](int n, int m) { return bound_matching_lower(n, m); },
      [](int n, int m) -> std::optional<Graph> { return make_A(n, m); },
      [](int, int) { return true; }, cs);
}

TheoremReport match_upper_report(const std::vector<const Census*>& cs) {
  return detail::check_tree_classes(
      TheoremId::MatchUpper, ClassKind::Matching, /*minimum_side=*/false,
      [](int n, int m) { return bound_matching_upper(n, m); },
      [](int n, int m) -> std::optional<Graph> {
        return make_dumbbell(n, (n + 2) / 2 - m, (n + 1) / 2 - m);
      },
      [](int n, int) { return n >= 4; }, cs);
}

TheoremReport dom_lower_report(const std::vector<const Census*>& cs) {
  return detail::check_tree_classes(
      TheoremId::DomLower, ClassKind::Domination, /*minimum_side=*/true,
      [](int n, int g) { return bound_domination_lower(n, g); },
      [](int n, int g) -> std::optional<Graph> { return make_A(n, g); },
      [](int, int) { return true; }, cs);
}

TheoremReport dom_upper_small_report(const std::vector<const Census*>& cs) {
  auto report = detail::check_tree_classes(
      TheoremId::DomUpperSmall, ClassKind::Domination, /*minimum_side=*/false,
      [](int n, int g) { return bound_domination_upper_small(n, g); },
      [](int n, int g) -> std::optional<Graph> {
        const int c = n - 3 * g + 2;
        return make_dumbbell(n, (c + 1) / 2, c / 2);
      },
      [](int n, int g) { return g < ceil_third(n); }, cs);
  // The gamma = ceil(n/3) band is outside both upper-bound theorems; record
  // the empirical maximum and require only the order bound.
  for (const Census* c : cs) {
    const int n = c->n;
    const int band = ceil_third(n);
    if (2 * band > n) continue;
    const ClassRecord* rec = find_class(*c, ClassKind::Domination, band);
    if (rec == nullptr) continue;
    std::string note = "band n=" + std::to_string(n) + " gamma=" + std::to_string(band) + ": " +
                       std::to_string(rec->population) + " trees, max status " +
                       std::to_string(rec->max_s);
    if (n >= 3) {
      const long long cap = bound_order(n);
      note += ", order bound " + std::to_string(cap);
      if (rec->max_s > cap) {
        Failure f;
        f.n = n;
        f.cls = class_label(ClassKind::Domination, band) + " (band)";
        f.expected = "<= " + std::to_string(cap);
        f.observed = std::to_string(rec->max_s);
        for (const auto& [code, g] : rec->argmax) f.witnesses.push_back(format_edge_list_flat(g));
        report.failures.push_back(std::move(f));
      }
    }
    report.notes.push_back(std::move(note));
  }
  return report;
}

TheoremReport dom_upper_large_report(const std::vector<const Census*>& cs) {
  return detail::check_tree_classes(
      TheoremId::DomUpperLarge, ClassKind::Domination, /*minimum_side=*/false,
      [](int n, int g) { return bound_domination_upper_large(n, g); },
      [](int n, int g) -> std::optional<Graph> {
        const int c = 3 * g - n;
        return make_caterpillar(n, (c + 1) / 2, c / 2);
      },
      [](int n, int g) { return g > ceil_third(n); }, cs);
}

TheoremReport order_bound_report(int n_lo, int n_hi) {
  TheoremReport report;
  report.id = TheoremId::OrderBound;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    const long long cap = bound_order(n);
    std::vector<const Graph*> equality;
    for (const auto& g : graphs) {
      const long long s = status_profile(g).min_status;
      if (s > cap) {
        Failure f;
        f.n = n;
        f.cls = "-";
        f.expected = "<= " + std::to_string(cap);
        f.observed = std::to_string(s);
        f.witnesses.push_back(format_edge_list_flat(g));
        report.failures.push_back(std::move(f));
      } else if (s == cap) {
        equality.push_back(&g);
      }
    }
    std::vector<std::uint32_t> observed_codes;
    for (const Graph* g : equality) observed_codes.push_back(canonical_graph_code(*g));
    std::sort(observed_codes.begin(), observed_codes.end());
    std::vector<std::uint32_t> expected_codes = {canonical_graph_code(make_path(n)),
                                                 canonical_graph_code(make_cycle(n))};
    std::sort(expected_codes.begin(), expected_codes.end());
    if (observed_codes != expected_codes) {
      Failure f;
      f.n = n;
      f.cls = "-";
      f.expected = "equality set {P_n, C_n}";
      f.observed = std::to_string(equality.size()) + " equality class(es)";
      for (const Graph* g : equality) f.witnesses.push_back(format_edge_list_flat(*g));
      report.failures.push_back(std::move(f));
    }
    report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(graphs.size()) +
                           " connected graphs, max status " + std::to_string(cap) +
                           ", equality classes " + std::to_string(equality.size()));
  }
  return report;
}

std::array<TheoremReport, 2> structural_reports(int n_hi, int jobs) {
  if (n_hi < 1) throw Error(errc::invalid_params, "need n_hi >= 1");
  if (n_hi > kTreeEnumerationLimit) {
    throw Error(errc::too_large, "verification range exceeds the tree enumeration budget");
  }
  TheoremReport diam;
  diam.id = TheoremId::DiameterLemma;
  diam.n_lo = 1;
  diam.n_hi = n_hi;
  TheoremReport med;
  med.id = TheoremId::MedianCentroid;
  med.n_lo = 1;
  med.n_hi = n_hi;
  for (int n = 1; n <= n_hi; ++n) {
    std::vector<Graph> trees;
    for_each_tree(n, [&](const Graph& g, const TreeCode&) { trees.push_back(g); });
    struct Item {
      bool diam_ok = true;
      bool med_ok = true;
      int gamma = 0;
      int diameter_value = 0;
    };
    std::vector<Item> items(trees.size());
    parallel_for(trees.size(), jobs, [&](std::size_t i) {
      const Graph& t = trees[i];
      auto& item = items[i];
      const auto sp = status_profile(t);
      const auto bp = branch_profile(t);
      item.med_ok = sp.median == bp.centroid;
      for (int x = 0; x < n && item.med_ok; ++x) {
        const bool by_weight = 2 * bp.weights[x] <= n;
        const bool by_status = sp.statuses[x] == sp.min_status;
        if (by_weight != by_status) item.med_ok = false;
      }
      item.gamma = domination_number_tree(t).size;
      if (3 * item.gamma > n) {
        item.diameter_value = diameter(t);
        item.diam_ok = item.diameter_value <= 2 * n - 3 * item.gamma + 1;
      }
    });
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!items[i].med_ok) {
        Failure f;
        f.n = n;
        f.cls = "-";
        f.expected = "median = centroid and w <= n/2 criterion";
        f.observed = "mismatch";
        f.witnesses.push_back(format_edge_list_flat(trees[i]));
        med.failures.push_back(std::move(f));
      }
      if (!items[i].diam_ok) {
        Failure f;
        f.n = n;
        f.cls = "gamma=" + std::to_string(items[i].gamma);
        f.expected = "diameter <= " + std::to_string(2 * n - 3 * items[i].gamma + 1);
        f.observed = std::to_string(items[i].diameter_value);
        f.witnesses.push_back(format_edge_list_flat(trees[i]));
        diam.failures.push_back(std::move(f));
      }
    }
  }
  return {std::move(diam), std::move(med)};
}

}  // namespace

std::array<TheoremReport, 2> verify_matching_theorems(int n_lo, int n_hi, int jobs) {
  const auto censuses = build_censuses(n_lo, n_hi, jobs);
  const auto cs = census_pointers(censuses);
  return {match_lower_report(cs), match_upper_report(cs)};
}

std::array<TheoremReport, 3> verify_domination_theorems(int n_lo, int n_hi, int jobs) {
  const auto censuses = build_censuses(n_lo, n_hi, jobs);
  const auto cs = census_pointers(censuses);
  return {dom_lower_report(cs), dom_upper_small_report(cs), dom_upper_large_report(cs)};
}

TheoremReport verify_order_bound(int n_lo, int n_hi) {
  if (n_lo < 3 || n_lo > n_hi) throw Error(errc::invalid_params, "need 3 <= n_lo <= n_hi");
  if (n_hi > kGraphEnumerationLimit) {
    throw Error(errc::too_large, "order bound limited to the n <= 7 graph budget");
  }
  return order_bound_report(n_lo, n_hi);
}

std::array<TheoremReport, 2> verify_structural_lemmas(int n_hi, int jobs) {
  return structural_reports(n_hi, jobs);
}

std::vector<TheoremReport> run_verification(const std::vector<TheoremId>& which, int n_lo,
                                            int n_hi, int jobs) {
  std::vector<TheoremId> wanted;
  for (TheoremId id : which) {
    if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) wanted.push_back(id);
  }
  const bool needs_census = std::any_of(wanted.begin(), wanted.end(), [](TheoremId id) {
    return id == TheoremId::MatchLower || id == TheoremId::MatchUpper ||
           id == TheoremId::DomLower || id == TheoremId::DomUpperSmall ||
           id == TheoremId::DomUpperLarge;
  });
  std::vector<Census> censuses;
  std::vector<const Census*> cs;
  if (needs_census) {
    censuses = build_censuses(std::max(2, n_lo), n_hi, jobs);
    cs = census_pointers(censuses);
  }

  std::vector<TheoremReport> out;
  for (TheoremId id : wanted) {
    switch (id) {
      case TheoremId::MatchLower: out.push_back(match_lower_report(cs)); break;
      case TheoremId::MatchUpper: out.push_back(match_upper_report(cs)); break;
      case TheoremId::DomLower: out.push_back(dom_lower_report(cs)); break;
      case TheoremId::DomUpperSmall: out.push_back(dom_upper_small_report(cs)); break;
      case TheoremId::DomUpperLarge: out.push_back(dom_upper_large_report(cs)); break;
      case TheoremId::OrderBound: {
        const int lo = std::max(3, n_lo);
        const int hi = std::min(kGraphEnumerationLimit, n_hi);
        if (lo > hi) {
          TheoremReport r;
          r.id = TheoremId::OrderBound;
          r.n_lo = lo;
          r.n_hi = hi;
          r.notes.push_back("requested range lies outside the connected-graph budget");
          out.push_back(std::move(r));
        } else {
          auto r = order_bound_report(lo, hi);
          if (lo != n_lo || hi != n_hi) {
            r.notes.push_back("range clamped to the n <= " +
                              std::to_string(kGraphEnumerationLimit) +
                              " connected-graph budget");
          }
          out.push_back(std::move(r));
        }
        break;
      }
      case TheoremId::DiameterLemma:
      case TheoremId::MedianCentroid: {
        auto pair = structural_reports(n_hi, jobs);
        out.push_back(id == TheoremId::DiameterLemma ? std::move(pair[0]) : std::move(pair[1]));
        break;
      }
    }
  }
  return out;
}

std::string reports_text(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << theorem_name(r.id) << " n=" << r.n_lo << ".." << r.n_hi << ": "
        << (r.passed() ? "Pass" : "Fail") << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    for (const auto& f : r.failures) {
      out << "  FAIL n=" << f.n << " " << f.cls << ": expected " << f.expected << ", observed "
          << f.observed << '\n';
      for (const auto& w : f.witnesses) out << "    witness: " << w << '\n';
    }
  }
  return out.str();
}

std::string reports_json(const std::vector<TheoremReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
      failures.push_back({{"n", f.n},
                          {"class", f.cls},
                          {"expected", f.expected},
                          {"observed", f.observed},
                          {"witnesses", f.witnesses}});
    }
    arr.push_back({{"theorem_id", theorem_name(r.id)},
                   {"n_range", {r.n_lo, r.n_hi}},
                   {"verdict", r.passed() ? "Pass" : "Fail"},
                   {"failures", failures}});
  }
  return arr.dump(2) + "\n";
}

std::string reports_csv(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  out << "theorem,n_lo,n_hi,verdict,n,class,expected,observed,witnesses\n";
  for (const auto& r : reports) {
    out << theorem_name(r.id) << ',' << r.n_lo << ',' << r.n_hi << ','
        << (r.passed() ? "Pass" : "Fail") << ",,,,,\n";
    for (const auto& f : r.failures) {
      out << theorem_name(r.id) << ',' << r.n_lo << ',' << r.n_hi << ",Fail," << f.n << ','
          << f.cls << ',' << f.expected << ',' << f.observed << ',';
      for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
        if (i) out << '|';
        out << f.witnesses[i];
      }
      out << '\n';
    }
  }
  return out.str();
}

int verification_exit_code(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return 2;
  }
  return 0;
}

}  // namespace statuslab
