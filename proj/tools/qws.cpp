// qws analyze|census|repro
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qws/census.hpp"
#include "qws/error.hpp"
#include "qws/graph_io.hpp"
#include "qws/report.hpp"
#include "qws/repro.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

struct GlobalFlags {
  std::vector<std::string> tolerances;
  std::string hamiltonian = "adjacency";
  double t_max = 100.0;
  std::uint64_t seed = 1;
  int threads = 1;
};

qws::AnalysisConfig make_config(const GlobalFlags& f) {
  qws::AnalysisConfig cfg;
  for (const auto& t : f.tolerances) qws::set_tolerance(cfg.tol, t);
  cfg.hamiltonian = qws::parse_hamiltonian(f.hamiltonian);
  cfg.t_max = f.t_max;
  cfg.seed = f.seed;
  cfg.threads = f.threads;
  cfg.apply_environment();
  cfg.validate();
  return cfg;
}

void add_global_flags(CLI::App* app, GlobalFlags& f) {
  app->add_option("--tolerance", f.tolerances, "name=value, name in cluster|support|fidelity|flatness");
  app->add_option("--hamiltonian", f.hamiltonian, "adjacency or laplacian");
  app->add_option("--t-max", f.t_max, "time horizon for scans");
  app->add_option("--seed", f.seed, "seed for randomized checks");
  app->add_option("--threads", f.threads, "worker count (QWS_THREADS overrides)");
}

void print(const qws::Json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous quantum walk analysis"};
  app.require_subcommand(1);
  GlobalFlags flags;

  auto* analyze = app.add_subcommand("analyze", "analyze one graph expression");
  std::string expr;
  std::vector<int> pst, pgst, csv_fidelity;
  bool pst_all = false, periodic = false, mixing = false, average = false, round_trip = false, csv_flatness = false;
  double t0 = 0.0, t1 = 10.0;
  int samples = 1000;
  analyze->add_option("graph", expr, "graph expression or file:path")->required();
  analyze->add_option("--pst", pst, "u v")->expected(2);
  analyze->add_flag("--pst-all", pst_all);
  analyze->add_flag("--periodic", periodic);
  analyze->add_flag("--mixing", mixing);
  analyze->add_flag("--average-mixing", average);
  analyze->add_option("--pgst", pgst, "u v")->expected(2);
  analyze->add_flag("--round-trip", round_trip, "re-validate every certificate with the oracle exponential");
  analyze->add_option("--csv-fidelity", csv_fidelity, "u v: emit t,fidelity instead of JSON")->expected(2);
  analyze->add_flag("--csv-flatness", csv_flatness, "emit t,residual instead of JSON");
  analyze->add_option("--t0", t0);
  analyze->add_option("--t1", t1);
  analyze->add_option("--samples", samples);
  add_global_flags(analyze, flags);

  auto* census = app.add_subcommand("census", "enumerate a Cayley family");
  std::string family;
  int d = 0, n = 0, n_min = 0, n_max = 0;
  census->add_option("family", family, "cubelike or circulant")->required()->check(CLI::IsMember({"cubelike", "circulant"}));
  census->add_option("-d", d, "dimension (cubelike)");
  census->add_option("-n", n, "order (circulant)");
  census->add_option("--n-min", n_min);
  census->add_option("--n-max", n_max);
  bool dedup = false;
  census->add_flag("--dedup", dedup, "cubelike: one set per coordinate-permutation class");
  add_global_flags(census, flags);

  auto* repro = app.add_subcommand("repro", "run the acceptance checks");
  bool repro_json_out = false;
  std::vector<int> only;
  repro->add_flag("--json", repro_json_out);
  repro->add_option("--check", only, "run only these check ids");
  add_global_flags(repro, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    const qws::AnalysisConfig cfg = make_config(flags);
    if (*analyze) {
      qws::Graph g = qws::parse_graph_expr(expr);
      if (g.tag().empty()) g.set_tag(expr);
      if (!csv_fidelity.empty() || csv_flatness) {
        const auto dec = qws::decompose(g, cfg.hamiltonian, cfg.tol.cluster);
        if (!csv_fidelity.empty()) {
          std::cout << qws::fidelity_csv(dec, csv_fidelity[0], csv_fidelity[1], t0, t1, samples);
        } else {
          std::cout << qws::flatness_csv(dec, t0, t1, samples);
        }
        return 0;
      }
      qws::AnalyzeRequest req;
      if (!pst.empty()) req.pst = std::make_pair(pst[0], pst[1]);
      if (!pgst.empty()) req.pgst = std::make_pair(pgst[0], pgst[1]);
      req.pst_all = pst_all;
      req.periodic = periodic;
      req.mixing = mixing;
      req.average_mixing = average;
      req.round_trip = round_trip;
      print(qws::analyze(g, req, cfg));
    } else if (*census) {
      qws::CensusSummary s;
      if (family == "cubelike") {
        if (d == 0) throw qws::InvalidArgument("census cubelike needs -d");
        s = qws::cubelike_census(d, cfg, print, dedup);
      } else {
        if (n > 0) n_min = n_max = n;
        if (n_min <= 0 || n_max < n_min) throw qws::InvalidArgument("census circulant needs -n or --n-min/--n-max");
        for (int k = n_min; k <= n_max; ++k) {
          const qws::CensusSummary part = qws::circulant_census(k, cfg, print);
          s.specs += part.specs;
          s.pst += part.pst;
          s.disagreements += part.disagreements;
          s.integral += part.integral;
          s.integrality_mismatches += part.integrality_mismatches;
        }
      }
      print(qws::summary_json(family.c_str(), s));
    } else if (*repro) {
      std::vector<qws::CheckResult> results;
      auto show = [&](const qws::CheckResult& r) {
        if (!repro_json_out) std::cout << qws::format_check(r) << std::endl;
      };
      if (only.empty()) {
        results = qws::run_repro(cfg, show);
      } else {
        for (int id : only) {
          results.push_back(qws::run_check(id, cfg));
          show(results.back());
        }
      }
      int passed = 0;
      for (const auto& r : results) passed += r.passed ? 1 : 0;
      if (repro_json_out) {
        print(qws::repro_json(results));
      } else {
        std::cout << passed << "/" << results.size() << " checks passed" << std::endl;
      }
      return passed == static_cast<int>(results.size()) ? 0 : kExitNumeric;
    }
  } catch (const qws::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qws::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitParse;
  } catch (const qws::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
