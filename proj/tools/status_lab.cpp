#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "statuslab/enumerate.hpp"
#include "statuslab/families.hpp"
#include "statuslab/invariants.hpp"
#include "statuslab/transforms.hpp"
#include "statuslab/verify.hpp"

namespace sl = statuslab;

namespace {

sl::Graph read_input(const std::string& path) {
  if (path == "-") return sl::read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw sl::Error(sl::errc::parse_error, "cannot open " + path);
  return sl::read_edge_list(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sl::Error(sl::errc::parse_error, "cannot write " + path);
  out << text;
}

int env_cap(int fallback) {
  const char* env = std::getenv("STATUS_LAB_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoi(env);
  } catch (...) {
    throw sl::Error(sl::errc::invalid_params, "STATUS_LAB_MAX_N is not an integer");
  }
}

int run_compute(const std::string& in_path) {
  const sl::Graph g = read_input(in_path);
  const auto profile = sl::status_profile(g);
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  out << "min_status " << profile.min_status << '\n';
  out << "median";
  for (int v : profile.median) out << ' ' << v;
  out << '\n';
  char decimal[32];
  std::snprintf(decimal, sizeof(decimal), "%.6f",
                static_cast<double>(profile.proximity.num) /
                    static_cast<double>(profile.proximity.den));
  out << "proximity " << sl::to_string(profile.proximity) << ' ' << decimal << '\n';
  std::string matching = "n/a", domination = "n/a";
  if (g.is_tree()) {
    matching = std::to_string(sl::matching_number_tree(g).size);
    domination = std::to_string(sl::domination_number_tree(g).size);
  } else {
    if (g.edge_count() <= 24) {
      matching = std::to_string(sl::matching_number_bruteforce(g).size);
    }
    if (g.order() <= 20) {
      domination = std::to_string(sl::domination_number_bruteforce(g).size);
    }
  }
  out << "matching " << matching << '\n';
  out << "domination " << domination << '\n';
  out << "diameter " << sl::diameter(g) << '\n';
  std::cout << out.str();
  return 0;
}

int run_construct(const std::string& family, int n, const std::vector<int>& params,
                  const std::string& out_path) {
  sl::FamilySpec spec;
  spec.n = n;
  spec.params = params;
  if (family == "path") {
    spec.family = sl::Family::Path;
  } else if (family == "cycle") {
    spec.family = sl::Family::Cycle;
  } else if (family == "star") {
    spec.family = sl::Family::Star;
  } else if (family == "A" || family == "a") {
    spec.family = sl::Family::A;
  } else if (family == "dumbbell") {
    spec.family = sl::Family::Dumbbell;
  } else if (family == "caterpillar") {
    spec.family = sl::Family::Caterpillar;
  } else {
    throw sl::Error(sl::errc::invalid_params, "unknown family '" + family + "'");
  }
  write_output(out_path, sl::format_edge_list(sl::make_family(spec)));
  return 0;
}

int run_bound(const std::string& name, const std::vector<long long>& args) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw sl::Error(sl::errc::invalid_params, "bound '" + name + "' takes " +
                                                    std::to_string(count) + " argument(s)");
    }
  };
  long long value;
  if (name == "matching-lower") {
    need(2);
    value = sl::bound_matching_lower(args[0], args[1]);
  } else if (name == "matching-upper") {
    need(2);
    value = sl::bound_matching_upper(args[0], args[1]);
  } else if (name == "domination-lower") {
    need(2);
    value = sl::bound_domination_lower(args[0], args[1]);
  } else if (name == "domination-upper-small") {
    need(2);
    value = sl::bound_domination_upper_small(args[0], args[1]);
  } else if (name == "domination-upper-large") {
    need(2);
    value = sl::bound_domination_upper_large(args[0], args[1]);
  } else if (name == "order") {
    need(1);
    value = sl::bound_order(args[0]);
  } else {
    throw sl::Error(sl::errc::invalid_params, "unknown bound '" + name + "'");
  }
  std::cout << value << '\n';
  return 0;
}

int run_transform(const std::string& name, const std::vector<int>& args,
                  const std::string& in_path, const std::string& out_path) {
  auto min_status = [](const sl::Graph& g) { return sl::status_profile(g).min_status; };
  if (name == "contract") {
    if (args.size() != 2) {
      throw sl::Error(sl::errc::invalid_params, "contract takes: u v");
    }
    const sl::Graph g = read_input(in_path);
    const sl::Graph result = sl::contract_to_pendant(g, args[0], args[1]);
    if (min_status(g) <= min_status(result)) {
      std::cerr << "error: contraction did not decrease the minimum status\n";
      return 3;
    }
    write_output(out_path, sl::format_edge_list(result));
    return 0;
  }
  if (name == "move-branches") {
    if (args.size() < 3) {
      throw sl::Error(sl::errc::invalid_params, "move-branches takes: u w moved...");
    }
    const sl::Graph g = read_input(in_path);
    const std::vector<int> moved(args.begin() + 2, args.end());
    const sl::Graph result = sl::move_branches(g, args[0], args[1], moved);
    if (min_status(result) <= min_status(g)) {
      std::cerr << "error: branch move did not increase the minimum status\n";
      return 3;
    }
    write_output(out_path, sl::format_edge_list(result));
    return 0;
  }
  if (name == "dumbbell-shift" || name == "caterpillar-shift") {
    if (args.size() != 3) {
      throw sl::Error(sl::errc::invalid_params, name + " takes: n p q");
    }
    const auto [before, after] = name == "dumbbell-shift"
                                     ? sl::dumbbell_shift(args[0], args[1], args[2])
                                     : sl::caterpillar_shift(args[0], args[1], args[2]);
    if (min_status(before) <= min_status(after)) {
      std::cerr << "error: shift inequality violated\n";
      return 3;
    }
    write_output(out_path, sl::format_edge_list(after));
    return 0;
  }
  throw sl::Error(sl::errc::invalid_params, "unknown transform '" + name + "'");
}

int run_enumerate(const std::string& kind, int n, bool count_only, const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw sl::Error(sl::errc::parse_error, "cannot write " + out_path);
    out = &file;
  }
  if (kind == "trees") {
    const int cap = env_cap(sl::kTreeEnumerationLimit);
    if (n > cap) {
      throw sl::Error(sl::errc::too_large,
                      "n exceeds the enumeration cap (raise STATUS_LAB_MAX_N)");
    }
    long long count = 0;
    sl::for_each_tree(n, [&](const sl::Graph& g, const sl::TreeCode&) {
      if (count_only) {
        ++count;
      } else {
        *out << sl::format_edge_list_flat(g) << '\n';
      }
    });
    if (count_only) *out << count << '\n';
    return 0;
  }
  if (kind == "graphs") {
    const auto graphs = sl::enumerate_connected_graphs(n);
    if (count_only) {
      *out << graphs.size() << '\n';
    } else {
      for (const auto& g : graphs) *out << sl::format_edge_list_flat(g) << '\n';
    }
    return 0;
  }
  throw sl::Error(sl::errc::invalid_params, "enumerate kind must be 'trees' or 'graphs'");
}

int run_verify(const std::string& theorem, int n_lo, std::optional<int> n_hi_opt,
               const std::string& format, int jobs, const std::string& out_path, bool verbose) {
  const int cap = env_cap(12);
  const int n_hi = n_hi_opt.value_or(cap);
  if (n_hi > cap) {
    throw sl::Error(sl::errc::too_large,
                    "--n-hi exceeds the verification cap (raise STATUS_LAB_MAX_N)");
  }
  std::vector<sl::TheoremId> which;
  if (theorem == "all") {
    which = sl::all_theorems();
  } else if (auto id = sl::theorem_from_name(theorem)) {
    which = {*id};
  } else {
    throw sl::Error(sl::errc::invalid_params, "unknown theorem '" + theorem + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto reports = sl::run_verification(which, n_lo, n_hi, jobs);
  if (verbose) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "verify: %zu theorem(s), n=[%d,%d], jobs=%d, %.2fs\n", reports.size(),
                 n_lo, n_hi, jobs, secs);
  }
  std::string rendered;
  if (format == "text") {
    rendered = sl::reports_text(reports);
  } else if (format == "json") {
    rendered = sl::reports_json(reports);
  } else if (format == "csv") {
    rendered = sl::reports_csv(reports);
  } else {
    throw sl::Error(sl::errc::invalid_params, "format must be text, json or csv");
  }
  write_output(out_path, rendered);
  return sl::verification_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"status-lab: distance-based tree invariants, extremal families, and exhaustive "
               "certification of minimum-status bounds"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "invariants of an edge-list graph");
  std::string compute_in = "-";
  compute->add_option("--in", compute_in, "input edge list (default stdin)");

  auto* construct = app.add_subcommand("construct", "emit a named family as an edge list");
  std::string cons_family;
  int cons_n = 0;
  std::vector<int> cons_params;
  std::string cons_out = "-";
  construct->add_option("family", cons_family, "path|cycle|star|A|dumbbell|caterpillar")
      ->required();
  construct->add_option("n", cons_n, "order")->required();
  construct->add_option("params", cons_params, "A: m; dumbbell/caterpillar: p q");
  construct->add_option("--out", cons_out, "output path (default stdout)");

  auto* bound = app.add_subcommand("bound", "closed-form bound value");
  std::string bound_name;
  std::vector<long long> bound_args;
  bound
      ->add_option("name", bound_name,
                   "matching-lower|matching-upper|domination-lower|domination-upper-small|"
                   "domination-upper-large|order")
      ->required();
  bound->add_option("args", bound_args, "n [m|gamma]")->required();

  auto* transform = app.add_subcommand("transform", "apply a status-monotone surgery");
  std::string tr_name, tr_in = "-", tr_out = "-";
  std::vector<int> tr_args;
  transform
      ->add_option("name", tr_name, "contract|move-branches|dumbbell-shift|caterpillar-shift")
      ->required();
  transform->add_option("args", tr_args, "contract: u v; move-branches: u w moved...; shifts: n p q");
  transform->add_option("--in", tr_in, "input edge list (contract, move-branches)");
  transform->add_option("--out", tr_out, "output path (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "non-isomorphic trees or connected graphs");
  std::string enum_kind;
  int enum_n = 0;
  bool enum_count = false;
  std::string enum_out = "-";
  enumerate->add_option("kind", enum_kind, "trees|graphs")->required();
  enumerate->add_option("n", enum_n, "order")->required();
  enumerate->add_flag("--count-only", enum_count, "print only the class count");
  enumerate->add_option("--out", enum_out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "certify the bounds over the enumerated universe");
  std::string ver_theorem = "all", ver_format = "text", ver_out = "-";
  int ver_lo = 4, ver_jobs = 0;
  std::optional<int> ver_hi;
  verify->add_option("--theorem", ver_theorem, "theorem id or 'all'");
  verify->add_option("--n-lo", ver_lo, "smallest order (default 4)");
  verify->add_option("--n-hi", ver_hi, "largest order (default STATUS_LAB_MAX_N or 12)");
  verify->add_option("--format", ver_format, "text|json|csv");
  verify->add_option("--jobs", ver_jobs, "worker threads (default: hardware)");
  verify->add_option("--out", ver_out, "output path (default stdout)");
  bool ver_verbose = false;
  verify->add_flag("--verbose", ver_verbose, "run metadata on stderr");

  try {
    app.parse(argc, argv);
    if (*compute) return run_compute(compute_in);
    if (*construct) return run_construct(cons_family, cons_n, cons_params, cons_out);
    if (*bound) return run_bound(bound_name, bound_args);
    if (*transform) return run_transform(tr_name, tr_args, tr_in, tr_out);
    if (*enumerate) return run_enumerate(enum_kind, enum_n, enum_count, enum_out);
    if (*verify) {
      return run_verify(ver_theorem, ver_lo, ver_hi, ver_format, ver_jobs, ver_out, ver_verbose);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
