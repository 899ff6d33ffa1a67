#include "seqlrc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "seqlrc/analysis.hpp"
#include "seqlrc/error.hpp"
#include "seqlrc/io.hpp"

namespace seqlrc {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  return out;
}

CodeInstance load_code(const std::string& path) {
  auto in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "'" + path + "' is not valid JSON: " + e.what());
  }
  return code_from_json(j);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return kExitBudget;
    case ErrorKind::InvalidGraph:
    case ErrorKind::RankDeficient:
    case ErrorKind::SearchExhausted:
    case ErrorKind::MalformedGraph: return kExitConstruction;
    default: return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary codes with sequential local recovery from four and five erasures"};
  app.require_subcommand(1);

  std::uint64_t budget = 500'000'000;
  std::string code_path;

  auto* gen = app.add_subcommand("gen-graph", "Generate an r-regular bipartite base graph of girth >= 6");
  std::uint64_t pg_q = 0;
  bool random = false;
  std::size_t gen_L = 0;
  std::size_t gen_r = 0;
  std::uint64_t seed = 1;
  std::size_t max_iters = 1000;
  std::string out_path;
  auto* pg_opt = gen->add_option("--pg", pg_q, "Incidence graph of PG(2,q), q prime");
  auto* random_opt = gen->add_flag("--random", random, "Seeded random search");
  pg_opt->excludes(random_opt);
  gen->add_option("--L", gen_L, "Nodes per side (random)");
  gen->add_option("--r", gen_r, "Degree (random)");
  gen->add_option("--seed", seed, "Seed (random)");
  gen->add_option("--max-iters", max_iters, "Restart limit (random)");
  gen->add_option("--out", out_path, "Output graph file (default: stdout)");

  auto* build = app.add_subcommand("build", "Build a code from a base graph");
  std::string graph_path;
  std::size_t build_t = 4;
  std::string alist_path;
  build->add_option("--graph", graph_path, "Graph file")->required();
  build->add_option("--t", build_t, "Erasures (4 or 5)")->check(CLI::IsMember({4, 5}));
  build->add_option("--out", out_path, "Output code JSON (default: stdout)");
  build->add_option("--alist", alist_path, "Also write H as alist");

  auto* decode = app.add_subcommand("decode", "Peel one erasure pattern (or a pattern file)");
  std::string pattern_text;
  std::string patterns_path;
  decode->add_option("--code", code_path, "Code JSON")->required();
  auto* pat_opt = decode->add_option("--pattern", pattern_text, "Space-separated 0-based indices");
  auto* file_opt = decode->add_option("--patterns", patterns_path, "Pattern file");
  pat_opt->excludes(file_opt);
  decode->require_option(2);

  auto* verify = app.add_subcommand("verify", "Exhaustively check every erasure pattern of size t");
  std::size_t verify_t = 4;
  std::string mode_name = "peel";
  std::size_t workers = 1;
  std::size_t failure_cap = 100;
  std::string failures_path;
  verify->add_option("--code", code_path, "Code JSON")->required();
  verify->add_option("--t", verify_t, "Pattern size")->required();
  verify->add_option("--mode", mode_name, "peel|ml|both")->check(CLI::IsMember({"peel", "ml", "both"}));
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--budget", budget, "Max patterns")->check(CLI::PositiveNumber);
  verify->add_option("--failure-cap", failure_cap, "Failures listed per oracle");
  verify->add_option("--failures-out", failures_path, "Write failing patterns here");

  auto* rate_cmd = app.add_subcommand("rate", "Print rate, bound and optimality");
  rate_cmd->add_option("--code", code_path, "Code JSON")->required();

  auto* audit = app.add_subcommand("audit", "Print the rate-bound audit as JSON");
  audit->add_option("--code", code_path, "Code JSON")->required();

  auto* mindist = app.add_subcommand("mindist", "Minimum distance if at most dmax");
  std::size_t dmax = 5;
  mindist->add_option("--code", code_path, "Code JSON")->required();
  mindist->add_option("--dmax", dmax, "Largest weight searched")->required();
  mindist->add_option("--budget", budget, "Max subsets")->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo peeling of random erasure patterns");
  std::uint64_t trials = 0;
  std::size_t max_erasures = 0;
  sim->add_option("--code", code_path, "Code JSON")->required();
  sim->add_option("--trials", trials, "Trials")->required();
  sim->add_option("--max-erasures", max_erasures, "Erasures per trial")->required();
  sim->add_option("--seed", seed, "Seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      BipartiteGraph g;
      if (*pg_opt) {
        g = projective_plane_incidence(pg_q);
      } else if (random) {
        g = random_girth6(gen_L, gen_r, seed, max_iters);
      } else {
        err << "gen-graph: pass --pg <q> or --random\n";
        return kExitUsage;
      }
      if (out_path.empty()) {
        write_graph(out, g);
      } else {
        auto f = open_out(out_path);
        write_graph(f, g);
      }
      const auto girth_value = girth(g);
      err << "L=" << g.L() << " r=" << g.r() << " edges=" << g.edges().size() << " girth="
          << (girth_value == kInfiniteGirth ? std::string("inf") : std::to_string(girth_value)) << '\n';
      return kExitOk;
    }

    if (build->parsed()) {
      auto in = open_in(graph_path);
      const CodeInstance code = build_code(read_graph(in), build_t);
      const auto j = code_to_json(code);
      if (out_path.empty()) {
        out << j.dump(2) << '\n';
      } else {
        auto f = open_out(out_path);
        f << j.dump(2) << '\n';
      }
      if (!alist_path.empty()) {
        auto f = open_out(alist_path);
        write_alist(f, code.H());
      }
      err << "n=" << code.n() << " k=" << code.k() << " rows=" << code.row_count() << '\n';
      return kExitOk;
    }

    if (decode->parsed()) {
      const CodeInstance code = load_code(code_path);
      if (!patterns_path.empty()) {
        auto in = open_in(patterns_path);
        nlohmann::json all = nlohmann::json::array();
        bool stuck = false;
        for (const auto& p : read_patterns(in)) {
          const auto result = peel(code, ErasurePattern(p, code.n()));
          stuck = stuck || std::holds_alternative<Stuck>(result);
          auto entry = schedule_to_json(code, result);
          entry["pattern"] = p;
          all.push_back(std::move(entry));
        }
        out << all.dump(2) << '\n';
        return stuck ? kExitFailures : kExitOk;
      }
      const auto result = peel(code, ErasurePattern(parse_pattern(pattern_text), code.n()));
      out << schedule_to_json(code, result).dump(2) << '\n';
      return std::holds_alternative<Stuck>(result) ? kExitFailures : kExitOk;
    }

    if (verify->parsed()) {
      const CodeInstance code = load_code(code_path);
      VerifyOptions options;
      options.mode = mode_name == "ml" ? VerifyMode::Ml : (mode_name == "both" ? VerifyMode::Both : VerifyMode::Peel);
      options.budget = budget;
      options.workers = workers;
      options.failure_cap = failure_cap;
      const VerifyReport report = verify_exhaustive(code, verify_t, options);
      out << verify_to_json(report).dump(2) << '\n';
      err << "checked " << report.patterns_total << " patterns in " << report.elapsed.count() << " s\n";
      if (!failures_path.empty()) {
        auto f = open_out(failures_path);
        write_labeled_patterns(f, "peel-stuck t=" + std::to_string(verify_t), report.peel_failures);
        write_labeled_patterns(f, "ml-dependent t=" + std::to_string(verify_t), report.ml_failures);
      }
      return report.verified() ? kExitOk : kExitFailures;
    }

    if (rate_cmd->parsed()) {
      const CodeInstance code = load_code(code_path);
      const Rational got = rate(code);
      const Rational bound = rate_bound(code.r());
      out << "rate " << got << ", bound " << bound << ", ";
      if (code.t() != 4) {
        out << "N/A (t=" << code.t() << ")\n";
        return kExitOk;
      }
      const bool optimal = optimality_check(code);
      out << (optimal ? "OPTIMAL" : "SUBOPTIMAL") << '\n';
      return optimal ? kExitOk : kExitFailures;
    }

    if (audit->parsed()) {
      const CodeInstance code = load_code(code_path);
      out << audit_to_json(bound_audit(code)).dump(2) << '\n';
      return kExitOk;
    }

    if (mindist->parsed()) {
      const CodeInstance code = load_code(code_path);
      const auto d = min_distance_upto(code, dmax, budget);
      nlohmann::json j{{"dmax", dmax}, {"min_distance", nullptr}, {"above_dmax", !d.has_value()}};
      if (d) j["min_distance"] = *d;
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    if (sim->parsed()) {
      const CodeInstance code = load_code(code_path);
      out << simulation_to_json(simulate(code, trials, max_erasures, seed)).dump(2) << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace seqlrc
