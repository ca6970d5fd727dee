#include "qws/compose.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "qws/cayley.hpp"
#include "qws/diophantine.hpp"
#include "qws/error.hpp"
#include "qws/exact.hpp"

namespace qws {
namespace {

constexpr double kPi = std::numbers::pi;

bool same_phase(double x, double y, double tol = 1e-8) {
  return std::abs(std::polar(1.0, x) - std::polar(1.0, y)) <= tol;
}

// Certificate from u at tau whose partner must be v with phase `gamma`.
std::optional<PstCertificate> verify_at(const SpectralDecomposition& d, int u, int v, double tau,
                                        std::optional<Complex> gamma, const TransferOptions& opts) {
  auto c = certify_at(d, u, tau, opts);
  if (!c || c->v != v) return std::nullopt;
  if (gamma && std::abs(c->gamma - *gamma) > opts.certificate_tol) return std::nullopt;
  return c;
}

int regular_integer_valency(const Graph& x, const char* which) {
  const auto k = x.regular_degree();
  if (!k || *k != std::round(*k)) {
    throw InvalidArgument(std::string("join part ") + which + " must be regular with integer valency");
  }
  return static_cast<int>(std::lround(*k));
}

}  // namespace

CMatrix cartesian_transition(const CMatrix& hx, const CMatrix& hy) { return Eigen::kroneckerProduct(hx, hy); }

int diagonal_tuple_index(int v, int order, int d) {
  int idx = 0;
  for (int i = 0; i < d; ++i) idx = idx * order + v;
  return idx;
}

std::optional<PstCertificate> power_pst(const Graph& x, const PstCertificate& cert, int d,
                                        const TransferOptions& opts) {
  if (d < 1) throw InvalidArgument("power needs d >= 1");
  const Graph p = cartesian_power(x, d);
  const int u = diagonal_tuple_index(cert.u, x.order(), d);
  const int v = diagonal_tuple_index(cert.v, x.order(), d);
  const Complex gamma = std::pow(cert.gamma, d);
  auto c = verify_at(decompose(p, opts.hamiltonian, opts.cluster_tol), u, v, cert.tau, gamma, opts);
  if (c && cert.sigma_u) c->sigma_u = cert.sigma_u;
  return c;
}

CMatrix direct_transition(const SpectralDecomposition& dx, const SpectralDecomposition& dy, double t) {
  const int n = dx.order() * dy.order();
  CMatrix out = CMatrix::Zero(n, n);
  for (int r = 0; r < dx.size(); ++r) {
    out += Eigen::kroneckerProduct(dx.idempotents[r].cast<Complex>(), transition(dy, dx.thetas[r] * t)).eval();
  }
  return out;
}

DirectOddResult direct_odd_pst(const Graph& x, const Graph& y, const PstCertificate& cert_y, int x_vertex,
                               const TransferOptions& opts) {
  DirectOddResult res;
  const SpectralDecomposition dx = decompose(x);
  std::vector<int> all(dx.size());
  for (int r = 0; r < dx.size(); ++r) all[r] = r;
  std::optional<std::vector<long long>> roots;
  if (x.has_integer_weights() && x.order() <= kMaxExactOrder) roots = integer_root_values(char_poly(x));
  const EigenvalueClass cls = classify_eigenvalues(dx, all, roots ? &*roots : nullptr);
  const auto* ints = std::get_if<AllIntegers>(&cls);
  bool odd = ints != nullptr;
  if (ints) {
    for (long long v : ints->values) odd = odd && (v % 2 != 0);
  }
  const SpectralDecomposition dy = decompose(y);
  const CMatrix h2 = transition(dy, 2.0 * cert_y.tau);
  const CMatrix target = cert_y.gamma * cert_y.gamma * CMatrix::Identity(y.order(), y.order());
  const bool y_periodic = (h2 - target).cwiseAbs().maxCoeff() <= 1e-8;
  res.precondition = odd && y_periodic;
  if (!res.precondition) return res;

  const double phi = std::arg(cert_y.gamma);
  const CVector hx = transition_column(dx, phi, x_vertex);
  int partner = 0;
  for (int i = 1; i < x.order(); ++i)
    if (std::abs(hx(i)) > std::abs(hx(partner))) partner = i;
  if (std::abs(hx(partner)) < 1.0 - opts.fidelity_tol) return res;

  const Graph prod = direct_product(x, y);
  const int u = x_vertex * y.order() + cert_y.u;
  const int v = partner * y.order() + cert_y.v;
  // gamma^{-1} H_Y(tau)_{vu} = 1, so the product phase is H_X(phi)_{x'x}.
  res.certificate = verify_at(decompose(prod), u, v, cert_y.tau, hx(partner), opts);
  if (res.certificate) res.oracle_residual = oracle_residual(prod, *res.certificate);
  return res;
}

JoinSpectrum join_spectrum(const Graph& x, const Graph& y) {
  JoinSpectrum js;
  js.m = x.order();
  js.n = y.order();
  js.k = regular_integer_valency(x, "X");
  js.l = regular_integer_valency(y, "Y");
  const int total = js.m + js.n;
  Eigen::Matrix2d b;
  const double s = std::sqrt(static_cast<double>(js.m) * js.n);
  b << js.k, s, s, js.l;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(b);
  js.mu1 = solver.eigenvalues()(1);
  js.mu2 = solver.eigenvalues()(0);
  Matrix q = Matrix::Zero(total, 2);
  q.block(0, 0, js.m, 1).setConstant(1.0 / std::sqrt(static_cast<double>(js.m)));
  q.block(js.m, 1, js.n, 1).setConstant(1.0 / std::sqrt(static_cast<double>(js.n)));
  const Vector z1 = q * solver.eigenvectors().col(1);
  const Vector z2 = q * solver.eigenvectors().col(0);
  js.n1 = z1 * z1.transpose();
  js.n2 = z2 * z2.transpose();
  js.a = js.n1(0, 0);
  js.b = js.n1(0, js.m);
  js.c = js.n2(0, 0);
  js.d = js.n2(0, js.m);

  auto inherit = [&](const Graph& part, int offset, double valency, std::vector<std::pair<double, Matrix>>& out) {
    const SpectralDecomposition dp = decompose(part);
    const int size = part.order();
    for (int r = 0; r < dp.size(); ++r) {
      Matrix e = dp.idempotents[r];
      if (std::abs(dp.thetas[r] - valency) <= 1e-8 * (1.0 + std::abs(valency))) {
        e -= Matrix::Constant(size, size, 1.0 / size);
        if (e.trace() < 0.5) continue;
      }
      Matrix embedded = Matrix::Zero(total, total);
      embedded.block(offset, offset, size, size) = e;
      out.emplace_back(dp.thetas[r], std::move(embedded));
    }
  };
  inherit(x, 0, js.k, js.inherited_x);
  inherit(y, js.m, js.l, js.inherited_y);
  return js;
}

SpectralDecomposition join_decomposition(const JoinSpectrum& js, const Graph& joined) {
  std::vector<std::pair<double, Matrix>> pieces{{js.mu1, js.n1}, {js.mu2, js.n2}};
  for (const auto& p : js.inherited_x) pieces.push_back(p);
  for (const auto& p : js.inherited_y) pieces.push_back(p);
  return assemble(joined.weights(), std::move(pieces));
}

JoinTransport join_pst_transport(const Graph& x, const Graph& y, int u, int v, const TransferOptions& opts) {
  JoinTransport jt;
  jt.spectrum = join_spectrum(x, y);
  const auto& js = jt.spectrum;
  const long long disc = static_cast<long long>(std::llround((js.k - js.l) * (js.k - js.l) + 4.0 * js.m * js.n));
  jt.perfect_square = is_perfect_square(disc);
  const Graph z = join(x, y);
  TransferContext ctx;
  ctx.graph = &z;
  ctx.decomposition = join_decomposition(js, z);
  ctx.integer_matrix = z.has_integer_weights();
  if (opts.exact && ctx.integer_matrix && z.order() <= kMaxExactOrder) {
    ctx.exact_roots = integer_root_values(char_poly(z));
  }
  jt.analysis = check_pst(ctx, u, v, opts);
  if (jt.analysis.certificate) {
    const double tau = jt.analysis.certificate->tau;
    jt.phases_aligned = same_phase(js.mu1 * tau, js.mu2 * tau);
    jt.x_phase_matches = jt.phases_aligned && same_phase(js.k * tau, js.mu1 * tau);
    jt.oracle_residual = oracle_residual(z, *jt.analysis.certificate);
  }
  return jt;
}

std::optional<JoinInstance> find_join_instance(const Graph& x, int valency, int n_min, int n_max, int u, int v,
                                               const TransferOptions& opts) {
  const int k = regular_integer_valency(x, "X");
  const int m = x.order();
  for (int n = n_min + (n_min % 2); n <= n_max; n += 2) {
    const long long disc = static_cast<long long>(k - valency) * (k - valency) + 4LL * m * n;
    if (!is_perfect_square(disc)) continue;
    for (const auto& spec : all_circulants(n)) {
      if (static_cast<int>(spec.c.size()) != valency) continue;
      const Graph y = circulant_graph(spec);
      JoinTransport jt = join_pst_transport(x, y, u, v, opts);
      if (jt.analysis.certificate && jt.oracle_residual <= opts.certificate_tol) {
        return JoinInstance{y, spec.to_string(), std::move(jt)};
      }
    }
  }
  return std::nullopt;
}

ComplementTransport complement_transport(const Graph& x, const PstCertificate& cert, const TransferOptions& opts) {
  if (!x.is_regular()) throw InvalidArgument("complement transport needs a regular graph");
  ComplementTransport ct;
  const int n = x.order();
  ct.time_condition = near_integer(cert.tau * n / (2.0 * kPi), 1e-8).has_value();
  if (!ct.time_condition) return ct;
  // exp(i tau J) = I here, so H(tau) e_u = exp(-i tau) conj(gamma) e_v.
  const Complex gamma = std::polar(1.0, -cert.tau) * std::conj(cert.gamma);
  const Graph xc = complement(x);
  ct.certificate = verify_at(decompose(xc, opts.hamiltonian, opts.cluster_tol), cert.u, cert.v, cert.tau, gamma, opts);
  return ct;
}

}  // namespace qws
