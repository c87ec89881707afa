// ellweyl: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap hit.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ellweyl/hurwitz.hpp"
#include "ellweyl/interval.hpp"
#include "ellweyl/serialize.hpp"
#include "ellweyl/verify.hpp"

using namespace ellweyl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Kind> parse_kinds(const std::string& name, bool allow_all) {
  if (name == "all") {
    if (!allow_all) throw UsageError("--type all is not supported by this command");
    return {kAllKinds.begin(), kAllKinds.end()};
  }
  auto k = parse_kind(name);
  if (!k) throw UsageError("unknown type '" + name + "' (expected D4, E6, E7, E8" + (allow_all ? " or all)" : ")"));
  return {*k};
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ELLWEYL_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("ELLWEYL_THREADS must be a positive integer");
  }
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return Json::parse(in);
}

Json roots_report(Kind kind) {
  const FiniteTypeData& d = finite_type_data(kind);
  Json basis = Json::array();
  for (const auto& r : elliptic_basis(kind).alpha) basis.push_back(to_json(r));
  Json diagram = Json::array();
  for (const auto& e : elliptic_diagram(kind))
    diagram.push_back({{"u", diagram_vertex_label(kind, e.u)},
                       {"v", diagram_vertex_label(kind, e.v)},
                       {"style", e.style == EdgeStyle::Single ? "single" : "dotted_double"}});
  return Json{{"kind", std::string(to_string(kind))},
              {"n", d.n},
              {"t", d.t},
              {"m_t", d.m_t},
              {"marks", d.marks},
              {"edges", d.edges},
              {"finite_roots", finite_roots(kind).size()},
              {"highest_root", to_json(highest_root(kind))},
              {"elliptic_basis", basis},
              {"diagram", diagram}};
}

void print_roots_human(const Json& r) {
  std::cout << r["kind"].get<std::string>() << ": n=" << r["n"] << " t=" << r["t"] << " m_t=" << r["m_t"]
            << " |Phi_fin|=" << r["finite_roots"] << "\n  marks " << r["marks"].dump() << "\n  diagram";
  for (const auto& e : r["diagram"])
    std::cout << ' ' << e["u"].get<std::string>() << (e["style"] == "single" ? "-" : "=") << e["v"].get<std::string>();
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tubular elliptic Weyl groups and their hyperbolic covers"};
  app.require_subcommand(1);

  std::string type = "D4";
  int bound = 0;
  std::size_t max_states = 1'000'000;
  int threads = 0;
  std::string format = "json";
  std::uint64_t seed = VerifyOptions{}.seed;
  std::string out_path;
  bool human = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", type, "D4, E6, E7, E8 or all");
    sub->add_option("--seed", seed, "seed for sampled checks");
    sub->add_option("--out", out_path, "output path (default: standard output)");
    sub->add_flag("--human", human, "human-readable tables instead of JSON");
  };

  auto* roots = app.add_subcommand("roots", "root-system report");
  add_common(roots);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify);
  bool paper = false;
  bool sabotage = false;
  VerifyOptions vopt;
  verify->add_flag("--paper", paper, "run every reproduced computation")->required();
  verify->add_option("--pairs", vopt.normal_form_pairs, "random pairs for the normal-form check");
  verify->add_option("--braid-words", vopt.braid_words, "random braid words for the Hurwitz check");
  verify->add_option("--central-samples", vopt.central_samples, "random elements tested against z");
  verify->add_option("--census-states", vopt.lambda_census_states, "census cap for the lambda_t check");
  verify->add_option("--connect-samples", vopt.connect_samples, "census states to connect");
  verify->add_option("--threads", threads, "worker threads for census construction");
  verify->add_flag("--sabotage-gram", sabotage, "test hook: corrupt the Gram matrices")->group("");

  auto* hurwitz = app.add_subcommand("hurwitz", "bounded Hurwitz orbit census");
  add_common(hurwitz);
  hurwitz->add_option("--bound", bound, "coefficient bound relative to the seed")->check(CLI::NonNegativeNumber);
  hurwitz->add_option("--max-states", max_states, "state cap")->check(CLI::PositiveNumber);
  hurwitz->add_option("--threads", threads, "worker threads (fallback: ELLWEYL_THREADS)");
  std::vector<std::string> connect;
  hurwitz->add_option("--connect", connect, "FROM.json TO.json: search for a braid word")->expected(2);

  auto* poset = app.add_subcommand("poset", "interval poset export");
  add_common(poset);
  poset->add_option("--bound", bound, "coefficient bound relative to the seed")->check(CLI::NonNegativeNumber);
  poset->add_option("--max-states", max_states, "state cap")->check(CLI::PositiveNumber);
  poset->add_option("--format", format, "json or dot");
  poset->add_option("--threads", threads, "worker threads (fallback: ELLWEYL_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*roots) {
      const auto kinds = parse_kinds(type, true);
      Json all = Json::array();
      for (Kind k : kinds) all.push_back(roots_report(k));
      if (human) {
        for (const auto& r : all) print_roots_human(r);
      } else {
        emit((kinds.size() == 1 ? all[0] : all).dump(2) + "\n", out_path);
      }
      return kExitOk;
    }

    if (*verify) {
      const auto kinds = parse_kinds(type, true);
      vopt.seed = seed;
      vopt.sabotage_gram = sabotage;
      vopt.threads = resolve_threads(threads);
      Json results = Json::array();
      bool all_passed = true;
      run_paper_suite(kinds, vopt, [&](const CheckResult& r) {
        all_passed = all_passed && r.passed;
        if (human) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.id << std::setw(4) << r.kind
                    << ' ' << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << ' ' << r.detail
                    << std::endl;
        }
        results.push_back({{"id", r.id}, {"kind", r.kind}, {"passed", r.passed}, {"detail", r.detail},
                           {"seconds", r.seconds}});
      });
      if (!human) emit(Json{{"seed", seed}, {"passed", all_passed}, {"results", results}}.dump(2) + "\n", out_path);
      return all_passed ? kExitOk : kExitFail;
    }

    if (*hurwitz) {
      const Kind kind = parse_kinds(type, false).front();
      if (!connect.empty()) {
        const ReflTuple from = tuple_from_json(read_json_file(connect[0]));
        const ReflTuple to = tuple_from_json(read_json_file(connect[1]));
        if (from.kind() != kind || to.kind() != kind) throw UsageError("tuple kinds do not match --type");
        ConnectResult r;
        try {
          r = connect_search(from, to, bound, max_states);
        } catch (const ProductMismatchError& e) {
          std::cerr << "error: " << e.what() << '\n';
          return kExitFail;
        }
        Json doc{{"kind", std::string(to_string(kind))}, {"bound", bound}, {"states", r.states}, {"seed", seed}};
        if (r.word) {
          doc["result"] = "found";
          doc["word"] = braid_to_json(*r.word);
        } else {
          doc["result"] = "inconclusive";
        }
        if (human)
          std::cout << (r.word ? "braid word: " + braid_to_json(*r.word).dump() : std::string("inconclusive")) << " ("
                    << r.states << " states)\n";
        else
          emit(doc.dump(2) + "\n", out_path);
        return r.overflow ? kExitCap : kExitOk;
      }
      const OrbitCensus census = orbit_explore(standard_tuple(kind), {bound, max_states, resolve_threads(threads)});
      const Json summary = census_summary(census, seed);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        write_census_lines(out, census);
      }
      if (human) {
        std::cout << "kind " << summary["kind"].get<std::string>() << ", bound " << bound << ": " << census.size()
                  << " states, " << census.truncations << " truncated expansions, depth "
                  << summary["max_depth"] << (census.overflow ? ", state cap reached" : "") << '\n';
      } else {
        std::cout << summary.dump() << '\n';
      }
      return census.overflow ? kExitCap : kExitOk;
    }

    if (*poset) {
      const Kind kind = parse_kinds(type, false).front();
      const auto fmt = parse_poset_format(format);
      if (!fmt) throw UsageError("unsupported format '" + format + "' (expected json or dot)");
      const OrbitCensus census = orbit_explore(standard_tuple(kind), {bound, max_states, resolve_threads(threads)});
      const IntervalPoset p = build_poset(census);
      if (human) {
        const PosetReport r = check_poset(p);
        std::cout << p.nodes.size() << " nodes, " << p.covers.size() << " covers, ranks";
        for (auto c : r.rank_sizes) std::cout << ' ' << c;
        std::cout << '\n';
        if (!out_path.empty()) emit(export_poset(p, *fmt), out_path);
      } else {
        emit(export_poset(p, *fmt), out_path);
      }
      return census.overflow ? kExitCap : kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
