#include "qws/report.hpp"

#include <cstdlib>
#include <sstream>

#include "qws/error.hpp"
#include "qws/graph_io.hpp"
#include "qws/mixing.hpp"

namespace qws {
namespace {

void check_tolerance(double v, const char* name) {
  if (!(v > 0.0 && v < 1e-2)) throw InvalidArgument(std::string("tolerance ") + name + " must lie in (0, 1e-2)");
}

Json graph_json(const Graph& g) {
  Json j;
  j["expr"] = g.tag();
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["connected"] = g.is_connected();
  j["bipartite"] = g.is_bipartite();
  j["regular"] = g.is_regular();
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

void AnalysisConfig::validate() const {
  check_tolerance(tol.cluster, "cluster");
  check_tolerance(tol.support, "support");
  check_tolerance(tol.fidelity, "fidelity");
  check_tolerance(tol.flatness, "flatness");
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  if (threads < 1) throw InvalidArgument("threads must be at least 1");
}

TransferOptions AnalysisConfig::transfer_options() const {
  TransferOptions o;
  o.hamiltonian = hamiltonian;
  o.cluster_tol = tol.cluster;
  o.support_tol = tol.support;
  o.fidelity_tol = tol.fidelity;
  return o;
}

void AnalysisConfig::apply_environment() {
  if (const char* env = std::getenv("QWS_THREADS")) {
    try {
      threads = std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("QWS_THREADS is not an integer: ") + env);
    }
  }
}

void set_tolerance(Tolerances& tol, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw InvalidArgument("tolerance must be name=value");
  const std::string name = assignment.substr(0, eq);
  double value = 0.0;
  try {
    value = std::stod(assignment.substr(eq + 1));
  } catch (const std::exception&) {
    throw InvalidArgument("bad tolerance value in " + assignment);
  }
  if (name == "cluster") tol.cluster = value;
  else if (name == "support") tol.support = value;
  else if (name == "fidelity") tol.fidelity = value;
  else if (name == "flatness") tol.flatness = value;
  else throw InvalidArgument("unknown tolerance " + name);
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json certificate_json(const PstCertificate& c) {
  Json j;
  j["u"] = c.u;
  j["v"] = c.v;
  j["tau"] = c.tau;
  j["gamma"] = complex_json(c.gamma);
  j["signs"] = c.signs;
  j["fidelity_residual"] = c.fidelity_residual;
  j["sigma_u"] = c.sigma_u ? Json(*c.sigma_u) : Json(nullptr);
  return j;
}

Json periodicity_json(const PeriodicityReport& p) {
  Json j;
  j["vertex"] = p.vertex ? Json(*p.vertex) : Json(nullptr);
  j["periodic"] = p.periodic;
  j["min_period"] = p.min_period ? Json(*p.min_period) : Json(nullptr);
  j["eigenvalueClass"] = describe(p.eigenvalue_class);
  j["ratio_condition"] = p.ratio_condition_holds;
  if (p.inconsistent) j["inconsistent"] = true;
  return j;
}

Json verdict_json(const Graph& g, const AnalysisConfig& cfg, const PstAnalysis& a) {
  Json j;
  j["graph"] = g.tag();
  j["hamiltonian"] = std::string(to_string(cfg.hamiltonian));
  j["u"] = a.u;
  if (a.certificate) {
    j["v"] = a.certificate->v;
  } else {
    j["v"] = a.v ? Json(*a.v) : Json(nullptr);
  }
  j["verdict"] = a.certificate ? "pst" : "none";
  if (a.certificate) {
    j["tau"] = a.certificate->tau;
    j["gamma"] = complex_json(a.certificate->gamma);
    j["signs"] = a.certificate->signs;
  } else {
    j["tau"] = nullptr;
    j["gamma"] = nullptr;
    j["signs"] = Json::array();
  }
  Json reasons = Json::array();
  for (Reason r : a.reasons) reasons.push_back(std::string(to_string(r)));
  j["reasons"] = reasons;
  j["sigma_u"] = a.periodicity.min_period ? Json(*a.periodicity.min_period) : Json(nullptr);
  j["eigenvalueClass"] = describe(a.periodicity.eigenvalue_class);
  return j;
}

Json analyze(const Graph& g, const AnalyzeRequest& req, const AnalysisConfig& cfg) {
  cfg.validate();
  const TransferOptions opts = cfg.transfer_options();
  const TransferContext ctx = make_context(g, opts);
  const SpectralDecomposition& d = ctx.decomposition;
  const int n = g.order();
  auto check_vertex = [n](int v) {
    if (v < 0 || v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  };

  Json out;
  out["schema"] = 1;
  out["graph"] = graph_json(g);
  out["hamiltonian"] = std::string(to_string(cfg.hamiltonian));
  out["spectrum"] = Json{{"thetas", d.thetas}, {"multiplicities", d.multiplicities}};

  if (req.pst) {
    check_vertex(req.pst->first);
    check_vertex(req.pst->second);
    out["pst"] = verdict_json(g, cfg, check_pst(ctx, req.pst->first, req.pst->second, opts));
  }
  if (req.pst_all) {
    Json certs = Json::array(), refs = Json::array();
    for (int u = 0; u < n; ++u) {
      const PstAnalysis a = find_pst(ctx, u, opts);
      if (a.certificate) {
        if (a.certificate->u < a.certificate->v) certs.push_back(verdict_json(g, cfg, a));
      } else {
        refs.push_back(verdict_json(g, cfg, a));
      }
    }
    out["pst_all"] = Json{{"certificates", certs}, {"refutations", refs}};
  }
  if (req.periodic) {
    Json vertices = Json::array();
    const std::vector<long long>* roots = ctx.exact_roots ? &*ctx.exact_roots : nullptr;
    for (int u = 0; u < n; ++u) vertices.push_back(periodicity_json(is_periodic_at(d, u, roots, opts)));
    out["periodic"] = Json{{"graph", periodicity_json(is_periodic_graph(d, opts))}, {"vertices", vertices}};
  }
  if (req.mixing) {
    const MixingScan s = uniform_mixing_scan(d, cfg.t_max, 20000, 1e-6);
    out["mixing"] = Json{{"t_max", s.t_max},
                         {"samples", s.samples},
                         {"flat_times", s.flat_times},
                         {"residual_floor", s.residual_floor},
                         {"floor_time", s.floor_time},
                         {"note", s.flat_times.empty() ? "none found up to t_max" : "sampled evidence only"}};
  }
  if (req.average_mixing) {
    const Matrix m = average_mixing(d);
    out["average_mixing"] = Json{{"matrix", matrix_json(m)}, {"uniform", is_average_uniform(m)}};
  }
  if (req.pgst) {
    check_vertex(req.pgst->first);
    check_vertex(req.pgst->second);
    const auto schedule = fibonacci_schedule(5);
    const PgstResult r = pgst_search(d, req.pgst->first, req.pgst->second, cfg.t_max, schedule);
    Json trace = Json::array();
    for (const auto& [t, f] : r.trace) trace.push_back(Json{{"t", t}, {"fidelity", f}});
    out["pgst"] = Json{{"u", req.pgst->first},
                       {"v", req.pgst->second},
                       {"filter_passed", r.filter_passed},
                       {"best_t", r.best_t},
                       {"best_fidelity", r.best_fidelity},
                       {"t_max", cfg.t_max},
                       {"trace", trace}};
  }
  if (req.round_trip) out["round_trip_checked"] = validate_report(out, g, cfg.hamiltonian);
  return out;
}

namespace {

void collect_certificates(const Json& j, std::vector<const Json*>& out) {
  if (j.is_object()) {
    if (j.contains("verdict") && j["verdict"] == "pst") out.push_back(&j);
    for (const auto& [k, v] : j.items()) collect_certificates(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_certificates(v, out);
  }
}

}  // namespace

int validate_report(const Json& report, const Graph& g, Hamiltonian h, double tol) {
  std::vector<const Json*> found;
  collect_certificates(report, found);
  for (const Json* c : found) {
    PstCertificate cert;
    cert.u = (*c)["u"].get<int>();
    cert.v = (*c)["v"].get<int>();
    cert.tau = (*c)["tau"].get<double>();
    cert.gamma = Complex((*c)["gamma"]["re"].get<double>(), (*c)["gamma"]["im"].get<double>());
    const double r = oracle_residual(g, cert, h);
    if (r > tol) {
      throw NumericError("certificate " + std::to_string(cert.u) + "->" + std::to_string(cert.v) +
                         " fails oracle re-validation (residual " + format_double(r) + ")");
    }
  }
  return static_cast<int>(found.size());
}

std::string fidelity_csv(const SpectralDecomposition& d, int u, int v, double t0, double t1, int samples) {
  std::ostringstream os;
  os << "t,fidelity\n";
  for (const auto& [t, f] : fidelity_curve(d, u, v, t0, t1, samples)) os << format_double(t) << "," << format_double(f) << "\n";
  return os.str();
}

std::string flatness_csv(const SpectralDecomposition& d, double t0, double t1, int samples) {
  if (samples < 2) throw InvalidArgument("curve needs at least two samples");
  std::ostringstream os;
  os << "t,residual\n";
  for (int k = 0; k < samples; ++k) {
    const double t = t0 + (t1 - t0) * k / (samples - 1);
    os << format_double(t) << "," << format_double(flatness_residual(transition(d, t))) << "\n";
  }
  return os.str();
}

}  // namespace qws
