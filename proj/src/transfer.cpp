#include "qws/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gmpxx.h>

#include "qws/automorphism.hpp"
#include "qws/diophantine.hpp"
#include "qws/error.hpp"
#include "qws/exact.hpp"
#include "qws/optimize.hpp"

namespace qws {

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::kNotCospectral: return "NotCospectral";
    case Reason::kSignConditionFails: return "SignConditionFails";
    case Reason::kSupportMismatch: return "SupportMismatch";
    case Reason::kRatioConditionFails: return "RatioConditionFails";
    case Reason::kNotPeriodicAtU: return "NotPeriodicAtU";
    case Reason::kControllablePair: return "ControllablePair";
    case Reason::kBipartiteRadiusNotSqrtInt: return "BipartiteRadiusNotSqrtInt";
    case Reason::kDistancePartitionMismatch: return "DistancePartitionMismatch";
    case Reason::kStabilizerMismatch: return "StabilizerMismatch";
    case Reason::kNumericFidelityBelowThreshold: return "NumericFidelityBelowThreshold";
    case Reason::kNoPartnerInComponent: return "NoPartnerInComponent";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

void add_reason(std::vector<Reason>& reasons, Reason r) {
  if (std::find(reasons.begin(), reasons.end(), r) == reasons.end()) reasons.push_back(r);
}

std::pair<double, double> support_range(const SpectralDecomposition& d, const std::vector<int>& support) {
  double hi = -1e300, lo = 1e300;
  for (int r : support) {
    hi = std::max(hi, d.thetas[r]);
    lo = std::min(lo, d.thetas[r]);
  }
  return {hi, lo};
}

bool matrix_is_integral(const Matrix& m) {
  return (m.array() == m.array().round()).all() && m.cwiseAbs().maxCoeff() < 1e15;
}

// Period predicted by the eigenvalue class, when it has a closed form.
std::optional<double> class_period(const EigenvalueClass& c) {
  if (const auto* ints = std::get_if<AllIntegers>(&c)) {
    if (ints->values.size() < 2) return std::nullopt;
    const long long top = *std::max_element(ints->values.begin(), ints->values.end());
    std::vector<long long> diffs;
    for (long long v : ints->values) diffs.push_back(top - v);
    const long long g = gcd_all(diffs);
    if (g == 0) return std::nullopt;
    return 2.0 * kPi / static_cast<double>(g);
  }
  if (const auto* q = std::get_if<QuadraticField>(&c)) {
    if (!q->common_a || q->halves.size() < 2) return std::nullopt;
    std::vector<long long> diffs;
    for (const auto& h : q->halves) diffs.push_back(q->halves.front().second - h.second);
    const long long g = gcd_all(diffs);
    if (g == 0) return std::nullopt;
    return 4.0 * kPi / (static_cast<double>(g) * std::sqrt(static_cast<double>(q->delta)));
  }
  return std::nullopt;
}

bool is_periodic_time(const SpectralDecomposition& d, int u, double t, double tol) {
  return std::abs(transition_entry(d, t, u, u)) >= 1.0 - tol;
}

}  // namespace

bool ratio_condition(const SpectralDecomposition& d, const std::vector<int>& support) {
  if (support.size() < 2) return true;
  const auto [hi, lo] = support_range(d, support);
  for (int r : support) {
    if (!rational_approximation((hi - d.thetas[r]) / (hi - lo))) return false;
  }
  return true;
}

std::optional<double> period_from_support(const SpectralDecomposition& d, const std::vector<int>& support) {
  if (support.size() < 2) return std::nullopt;
  const auto [hi, lo] = support_range(d, support);
  const double d0 = hi - lo;
  std::vector<Fraction> q;
  mpz_class l = 1;
  for (int r : support) {
    const auto f = rational_approximation((hi - d.thetas[r]) / d0);
    if (!f) return std::nullopt;
    q.push_back(*f);
    l = lcm(l, mpz_class(static_cast<long>(f->den)));
  }
  mpz_class g = 0;
  for (const auto& f : q) {
    const mpz_class c = mpz_class(static_cast<long>(f.num)) * (l / mpz_class(static_cast<long>(f.den)));
    g = gcd(g, c);
  }
  if (g == 0) return std::nullopt;
  const mpq_class ratio(l, g);
  return 2.0 * kPi * ratio.get_d() / d0;
}

PeriodicityReport is_periodic_at(const SpectralDecomposition& d, int u, const std::vector<long long>* exact_roots,
                                 const TransferOptions& opts) {
  PeriodicityReport rep;
  rep.vertex = u;
  rep.support = vertex_support(d, u, opts.support_tol);
  rep.eigenvalue_class = classify_eigenvalues(d, rep.support, exact_roots);
  if (rep.support.size() < 2) {
    // e_u is an eigenvector: |H(t)_uu| = 1 for every t.
    rep.periodic = true;
    rep.ratio_condition_holds = true;
    return rep;
  }
  rep.ratio_condition_holds = ratio_condition(d, rep.support);
  rep.inconsistent = rep.ratio_condition_holds && std::holds_alternative<Unclassified>(rep.eigenvalue_class);
  if (!rep.ratio_condition_holds) return rep;
  std::vector<double> candidates;
  if (auto s = class_period(rep.eigenvalue_class)) candidates.push_back(*s);
  if (auto s = period_from_support(d, rep.support)) candidates.push_back(*s);
  std::sort(candidates.begin(), candidates.end());
  for (double s : candidates) {
    if (is_periodic_time(d, u, s, opts.fidelity_tol)) {
      rep.periodic = true;
      rep.min_period = s;
      break;
    }
  }
  return rep;
}

PeriodicityReport is_periodic_at(const Graph& x, int u, const TransferOptions& opts) {
  const TransferContext ctx = make_context(x, opts);
  const std::vector<long long>* roots = ctx.exact_roots ? &*ctx.exact_roots : nullptr;
  return is_periodic_at(ctx.decomposition, u, roots, opts);
}

PeriodicityReport is_periodic_graph(const SpectralDecomposition& d, const TransferOptions& opts) {
  PeriodicityReport rep;
  for (int r = 0; r < d.size(); ++r) rep.support.push_back(r);
  rep.eigenvalue_class = classify_eigenvalues(d, rep.support);
  if (rep.support.size() < 2) {
    rep.periodic = true;
    rep.ratio_condition_holds = true;
    return rep;
  }
  rep.ratio_condition_holds = ratio_condition(d, rep.support);
  rep.inconsistent = rep.ratio_condition_holds && std::holds_alternative<Unclassified>(rep.eigenvalue_class);
  if (!rep.ratio_condition_holds) return rep;
  std::vector<double> candidates;
  if (auto s = class_period(rep.eigenvalue_class)) candidates.push_back(*s);
  if (auto s = period_from_support(d, rep.support)) candidates.push_back(*s);
  std::sort(candidates.begin(), candidates.end());
  for (double s : candidates) {
    const CMatrix h = transition(d, s);
    if ((h.diagonal().cwiseAbs().array() >= 1.0 - opts.fidelity_tol).all()) {
      rep.periodic = true;
      rep.min_period = s;
      break;
    }
  }
  return rep;
}

PeriodicityReport is_periodic_graph(const Graph& x, const TransferOptions& opts) {
  return is_periodic_graph(decompose(x, opts.hamiltonian, opts.cluster_tol), opts);
}

TransferContext make_context(const Graph& x, const TransferOptions& opts) {
  TransferContext ctx;
  ctx.graph = &x;
  ctx.decomposition = decompose(x, opts.hamiltonian, opts.cluster_tol);
  ctx.integer_matrix = matrix_is_integral(ctx.decomposition.matrix);
  if (opts.exact && ctx.integer_matrix && x.order() <= kMaxExactOrder) {
    ctx.exact_roots = integer_root_values(char_poly(x, opts.hamiltonian));
  }
  return ctx;
}

namespace {

std::optional<PstCertificate> build_certificate(const SpectralDecomposition& d, int u, int v, double tau,
                                                const std::vector<int>& support, const TransferOptions& opts) {
  const CVector col = transition_column(d, tau, u);
  const double mod = std::abs(col(v));
  if (mod < 1.0 - opts.fidelity_tol) return std::nullopt;
  PstCertificate c;
  c.u = u;
  c.v = v;
  c.tau = tau;
  c.gamma = col(v) / mod;
  c.support = support;
  CVector target = CVector::Zero(d.order());
  target(v) = c.gamma;
  c.fidelity_residual = (col - target).norm();
  if (c.fidelity_residual > opts.certificate_tol) return std::nullopt;
  for (int r : support) {
    const Vector eu = d.idempotents[r].col(u);
    const Vector ev = d.idempotents[r].col(v);
    const int s = eu.dot(ev) >= 0.0 ? 1 : -1;
    if ((eu - s * ev).norm() > opts.certificate_tol) return std::nullopt;
    // gamma s_r = exp(i tau theta_r)
    if (std::abs(c.gamma * static_cast<double>(s) - std::polar(1.0, tau * d.thetas[r])) > opts.certificate_tol) {
      return std::nullopt;
    }
    c.signs.push_back(s);
  }
  return c;
}

bool nonnegative_loopless(const Graph& x) {
  return (x.weights().array() >= 0.0).all() && (x.loops().array() == 0.0).all();
}

// A vertex v != u with {v} a cell of the equitable refinement of u's
// distance partition; PST from u can only reach such vertices.
bool has_singleton_partner_cell(const Graph& x, int u) {
  const VertexPartition p = equitable_distance_partition(x, u);
  for (const auto& cell : p.cells()) {
    if (cell.size() == 1 && cell.front() != u && x.distances_from(u)[cell.front()] >= 0) return true;
  }
  return false;
}

bool partition_filter_applies(const Graph& x, const TransferOptions& opts) {
  return opts.hamiltonian == Hamiltonian::kAdjacency || (x.loops().array() == 0.0).all();
}

}  // namespace

std::optional<PstCertificate> certify_at(const SpectralDecomposition& d, int u, double tau,
                                         const TransferOptions& opts) {
  const CVector col = transition_column(d, tau, u);
  int best = -1;
  for (int v = 0; v < d.order(); ++v) {
    if (v != u && (best < 0 || std::abs(col(v)) > std::abs(col(best)))) best = v;
  }
  if (best < 0) return std::nullopt;
  return build_certificate(d, u, best, tau, vertex_support(d, u, opts.support_tol), opts);
}

PstAnalysis find_pst(const TransferContext& ctx, int u, const TransferOptions& opts) {
  const Graph& x = *ctx.graph;
  const SpectralDecomposition& d = ctx.decomposition;
  if (u < 0 || u >= x.order()) throw InvalidArgument("vertex out of range");
  PstAnalysis out;
  out.u = u;
  const std::vector<long long>* roots = ctx.exact_roots ? &*ctx.exact_roots : nullptr;
  out.periodicity = is_periodic_at(d, u, roots, opts);
  const auto& support = out.periodicity.support;
  const auto component = x.component_of(u);

  if (component.size() < 2 || support.size() < 2) {
    add_reason(out.reasons, Reason::kNoPartnerInComponent);
    return out;
  }

  // Integrality: integers, or quadratic with one common a.
  if (ctx.integer_matrix && component.size() >= 3) {
    const auto& cls = out.periodicity.eigenvalue_class;
    const auto* q = std::get_if<QuadraticField>(&cls);
    const bool ok = std::holds_alternative<AllIntegers>(cls) || (q && q->common_a);
    if (!ok) add_reason(out.reasons, Reason::kRatioConditionFails);
  }
  if (opts.hamiltonian == Hamiltonian::kAdjacency && ctx.integer_matrix && nonnegative_loopless(x)) {
    const Graph comp = induced_subgraph(x, component);
    if (comp.is_bipartite()) {
      const double theta1 = support_range(d, support).first;
      if (!near_integer(theta1 * theta1)) add_reason(out.reasons, Reason::kBipartiteRadiusNotSqrtInt);
    }
  }
  if (partition_filter_applies(x, opts) && !has_singleton_partner_cell(x, u)) {
    add_reason(out.reasons, Reason::kDistancePartitionMismatch);
  }
  if (!out.periodicity.ratio_condition_holds) {
    add_reason(out.reasons, Reason::kRatioConditionFails);
    add_reason(out.reasons, Reason::kNotPeriodicAtU);
    return out;
  }
  if (!out.periodicity.periodic || !out.periodicity.min_period) {
    add_reason(out.reasons, Reason::kNotPeriodicAtU);
    return out;
  }

  const double sigma = *out.periodicity.min_period;
  const CVector col = transition_column(d, sigma / 2.0, u);
  int best = -1;
  for (int v = 0; v < x.order(); ++v) {
    if (v == u) continue;
    if (best < 0 || std::abs(col(v)) > std::abs(col(best))) best = v;
  }
  out.best_fidelity = std::abs(col(best));
  if (out.best_fidelity >= 1.0 - opts.fidelity_tol) {
    if (auto c = build_certificate(d, u, best, sigma / 2.0, support, opts)) {
      c->sigma_u = sigma;
      out.certificate = std::move(c);
      out.reasons.clear();
      return out;
    }
  }
  add_reason(out.reasons, Reason::kNumericFidelityBelowThreshold);
  return out;
}

PstAnalysis find_pst(const Graph& x, int u, const TransferOptions& opts) {
  return find_pst(make_context(x, opts), u, opts);
}

PstAnalysis check_pst(const TransferContext& ctx, int u, int v, const TransferOptions& opts) {
  const Graph& x = *ctx.graph;
  const SpectralDecomposition& d = ctx.decomposition;
  const int n = x.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("check_pst needs distinct vertices");
  std::vector<Reason> pre;

  if (x.distances_from(u)[v] < 0) add_reason(pre, Reason::kNoPartnerInComponent);

  const bool exact = opts.exact && ctx.integer_matrix && n <= kMaxExactOrder &&
                     opts.hamiltonian == Hamiltonian::kAdjacency;
  bool cospectral = true;
  if (exact) {
    cospectral = are_cospectral(x, u, v);
  } else {
    for (int r = 0; r < d.size(); ++r) {
      if (std::abs(d.idempotents[r](u, u) - d.idempotents[r](v, v)) > 1e-8) cospectral = false;
    }
  }
  if (!cospectral) add_reason(pre, Reason::kNotCospectral);

  const auto su = vertex_support(d, u, opts.support_tol);
  const auto sv = vertex_support(d, v, opts.support_tol);
  if (su != sv) add_reason(pre, Reason::kSupportMismatch);
  if (!pgst_filter(d, u, v)) add_reason(pre, Reason::kSignConditionFails);

  if (n >= 4 && x.is_connected()) {
    bool controllable = false;
    if (exact) {
      controllable = is_controllable(x, u) || is_controllable(x, v);
    } else {
      controllable = static_cast<int>(su.size()) == n || static_cast<int>(sv.size()) == n;
    }
    if (controllable) add_reason(pre, Reason::kControllablePair);
  }
  if (partition_filter_applies(x, opts) &&
      !equitable_distance_partition(x, u).same_cells(equitable_distance_partition(x, v))) {
    add_reason(pre, Reason::kDistancePartitionMismatch);
  }
  if (opts.automorphism_filters && n <= kMaxAutomorphismOrder && !stabilizers_equal(x, u, v)) {
    add_reason(pre, Reason::kStabilizerMismatch);
  }

  PstAnalysis out = find_pst(ctx, u, opts);
  out.v = v;
  if (out.certificate && out.certificate->v == v) return out;
  if (out.certificate) {
    // u has a different partner.
    out.best_fidelity = std::abs(transition_entry(d, out.certificate->tau, u, v));
    out.certificate.reset();
    out.reasons.clear();
    add_reason(out.reasons, Reason::kNumericFidelityBelowThreshold);
  }
  std::vector<Reason> merged = pre;
  for (Reason r : out.reasons) add_reason(merged, r);
  out.reasons = std::move(merged);
  return out;
}

PstAnalysis check_pst(const Graph& x, int u, int v, const TransferOptions& opts) {
  return check_pst(make_context(x, opts), u, v, opts);
}

double oracle_residual(const Graph& x, const PstCertificate& c, Hamiltonian h) {
  const CMatrix u = transition_oracle(x, c.tau, h);
  CVector target = CVector::Zero(x.order());
  target(c.v) = c.gamma;
  return (u.col(c.u) - target).norm();
}

bool quotient_pst_check(const Graph& x, const VertexPartition& p, const PstCertificate& c, double tol) {
  const int cu = p.cell_of(c.u);
  const int cv = p.cell_of(c.v);
  if (p.cell(cu).size() != p.cell(cv).size()) return false;
  const Matrix b = quotient(x, p);
  const SpectralDecomposition qd = decompose(b);
  return std::abs(transition_entry(qd, c.tau, cu, cv) - c.gamma) <= tol;
}

bool pgst_filter(const SpectralDecomposition& d, int u, int v, double tol) {
  for (int r = 0; r < d.size(); ++r) {
    const Vector eu = d.idempotents[r].col(u);
    const Vector ev = d.idempotents[r].col(v);
    if ((eu - ev).norm() > tol && (eu + ev).norm() > tol) return false;
  }
  return true;
}

PgstResult pgst_search(const SpectralDecomposition& d, int u, int v, double t_max,
                       const std::vector<double>& schedule, std::size_t trace_limit) {
  if (!(t_max > 0.0)) throw InvalidArgument("pgst search needs t_max > 0");
  PgstResult res;
  res.filter_passed = pgst_filter(d, u, v);
  auto fidelity = [&](double t) { return std::norm(transition_entry(d, t, u, v)); };
  if (!res.filter_passed) {
    // sum_r |(E_r)_vu| bounds |H(t)_vu| for every t.
    double bound = 0.0;
    for (const auto& e : d.idempotents) bound += std::abs(e(v, u));
    res.best_fidelity = std::min(1.0, bound * bound);
    return res;
  }
  std::vector<int> all(d.size());
  for (int r = 0; r < d.size(); ++r) all[r] = r;
  auto support = vertex_support(d, u);
  if (support.size() < 2) support = all;
  const auto [hi, lo] = support_range(d, support);
  const double spread = std::max(hi - lo, 1e-12);
  const double step = kPi / (64.0 * spread);
  const long long samples = static_cast<long long>(std::ceil(t_max / step));

  std::vector<std::pair<double, double>> peaks;
  double f2 = fidelity(0.0), f1 = fidelity(std::min(step, t_max));
  for (long long k = 2; k <= samples + 1; ++k) {
    const double t = std::min(k * step, t_max + step);
    const double f0 = fidelity(t);
    if (f1 >= f2 && f1 >= f0) {
      const double a = (k - 2) * step;
      const double b = std::min(k * step, t_max);
      if (b > a) {
        const auto [tm, fm] = golden_section_minimize([&](double s) { return -fidelity(s); }, a, b);
        peaks.emplace_back(tm, -fm);
      }
    }
    f2 = f1;
    f1 = f0;
  }
  for (double t : schedule) peaks.emplace_back(t, fidelity(t));
  for (const auto& [t, f] : peaks) {
    if (f > res.best_fidelity) {
      res.best_fidelity = f;
      res.best_t = t;
    }
  }
  // Keep the highest peaks and every schedule point.
  std::vector<std::pair<double, double>> grid(peaks.begin(), peaks.end() - static_cast<long>(schedule.size()));
  std::sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (grid.size() > trace_limit) grid.resize(trace_limit);
  for (std::size_t i = peaks.size() - schedule.size(); i < peaks.size(); ++i) grid.push_back(peaks[i]);
  std::sort(grid.begin(), grid.end());
  res.trace = std::move(grid);
  return res;
}

std::vector<double> fibonacci_schedule(int count) {
  std::vector<double> out;
  std::vector<double> f{1.0, 1.0};
  for (int m = 0; m < count; ++m) {
    const std::size_t idx = 4 * static_cast<std::size_t>(m) + 2;
    while (f.size() <= idx) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    out.push_back(f[idx] * kPi / 2.0);
  }
  return out;
}

std::vector<std::pair<double, double>> fidelity_curve(const SpectralDecomposition& d, int u, int v, double t0,
                                                      double t1, int samples) {
  if (samples < 2) throw InvalidArgument("fidelity curve needs at least two samples");
  std::vector<std::pair<double, double>> out;
  for (int k = 0; k < samples; ++k) {
    const double t = t0 + (t1 - t0) * k / (samples - 1);
    out.emplace_back(t, std::norm(transition_entry(d, t, u, v)));
  }
  return out;
}

}  // namespace qws
