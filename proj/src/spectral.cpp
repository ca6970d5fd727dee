#include "qws/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qws/diophantine.hpp"
#include "qws/error.hpp"
#include "qws/optimize.hpp"

namespace qws {

double SpectralDecomposition::spectral_radius() const {
  double r = 0.0;
  for (double t : thetas) r = std::max(r, std::abs(t));
  return r;
}

SpectralDecomposition decompose(const Matrix& h, double cluster_tol) {
  if (h.rows() == 0 || h.rows() != h.cols()) throw InvalidArgument("decompose needs a non-empty square matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
  const Vector& values = solver.eigenvalues();  // ascending
  const Matrix& vectors = solver.eigenvectors();
  const int n = static_cast<int>(h.rows());
  const double rho = std::max(std::abs(values(0)), std::abs(values(n - 1)));
  const double gap = cluster_tol * (1.0 + rho);

  SpectralDecomposition d;
  d.cluster_tolerance = cluster_tol;
  d.matrix = h;
  int hi = n - 1;
  while (hi >= 0) {
    int lo = hi;
    while (lo > 0 && values(lo) - values(lo - 1) <= gap) --lo;
    const Matrix v = vectors.middleCols(lo, hi - lo + 1);
    d.thetas.push_back(values.segment(lo, hi - lo + 1).mean());
    d.idempotents.push_back(v * v.transpose());
    d.multiplicities.push_back(hi - lo + 1);
    hi = lo - 1;
  }
  return d;
}

SpectralDecomposition decompose(const Graph& x, Hamiltonian h, double cluster_tol) {
  return decompose(hamiltonian_matrix(x, h), cluster_tol);
}

SpectralDecomposition assemble(const Matrix& h, std::vector<std::pair<double, Matrix>> pieces,
                               double cluster_tol) {
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  double rho = 0.0;
  for (const auto& p : pieces) rho = std::max(rho, std::abs(p.first));
  const double gap = cluster_tol * (1.0 + rho);
  SpectralDecomposition d;
  d.cluster_tolerance = cluster_tol;
  d.matrix = h;
  for (std::size_t i = 0; i < pieces.size();) {
    std::size_t j = i + 1;
    Matrix e = pieces[i].second;
    double sum = pieces[i].first;
    while (j < pieces.size() && pieces[j - 1].first - pieces[j].first <= gap) {
      e += pieces[j].second;
      sum += pieces[j].first;
      ++j;
    }
    d.thetas.push_back(sum / static_cast<double>(j - i));
    d.multiplicities.push_back(static_cast<int>(std::lround(e.trace())));
    d.idempotents.push_back(std::move(e));
    i = j;
  }
  return d;
}

std::vector<Matrix> idempotents_via_lagrange(const SpectralDecomposition& d) {
  const int n = d.order();
  std::vector<Matrix> out;
  for (int r = 0; r < d.size(); ++r) {
    Matrix p = Matrix::Identity(n, n);
    for (int s = 0; s < d.size(); ++s) {
      if (s == r) continue;
      p = p * (d.matrix - d.thetas[s] * Matrix::Identity(n, n)) / (d.thetas[r] - d.thetas[s]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

CMatrix transition(const SpectralDecomposition& d, double t) {
  const int n = d.order();
  CMatrix u = CMatrix::Zero(n, n);
  for (int r = 0; r < d.size(); ++r) u += std::polar(1.0, d.thetas[r] * t) * d.idempotents[r].cast<Complex>();
  return u;
}

CVector transition_column(const SpectralDecomposition& d, double t, int u) {
  CVector c = CVector::Zero(d.order());
  for (int r = 0; r < d.size(); ++r) c += std::polar(1.0, d.thetas[r] * t) * d.idempotents[r].col(u).cast<Complex>();
  return c;
}

Complex transition_entry(const SpectralDecomposition& d, double t, int u, int v) {
  Complex z = 0.0;
  for (int r = 0; r < d.size(); ++r) z += std::polar(1.0, d.thetas[r] * t) * d.idempotents[r](v, u);
  return z;
}

CMatrix transition_oracle(const Matrix& h, double t) {
  const int n = static_cast<int>(h.rows());
  const CMatrix m = Complex(0.0, t) * h.cast<Complex>();
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix b = m / std::ldexp(1.0, s);
  CMatrix result = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

CMatrix transition_oracle(const Graph& x, double t, Hamiltonian h) {
  return transition_oracle(hamiltonian_matrix(x, h), t);
}

std::vector<int> eigenvalue_support(const SpectralDecomposition& d, const Vector& x, double tol) {
  const double norm = x.norm();
  if (norm == 0.0) throw InvalidArgument("eigenvalue support of the zero vector");
  std::vector<int> out;
  for (int r = 0; r < d.size(); ++r) {
    if ((d.idempotents[r] * x).norm() > tol * norm) out.push_back(r);
  }
  return out;
}

std::vector<int> vertex_support(const SpectralDecomposition& d, int u, double tol) {
  if (u < 0 || u >= d.order()) throw InvalidArgument("vertex out of range");
  std::vector<int> out;
  for (int r = 0; r < d.size(); ++r) {
    if (d.idempotents[r].col(u).norm() > tol) out.push_back(r);
  }
  return out;
}

std::string describe(const EigenvalueClass& c) {
  std::ostringstream os;
  if (const auto* ints = std::get_if<AllIntegers>(&c)) {
    os << "integers(";
    for (std::size_t i = 0; i < ints->values.size(); ++i) os << (i ? "," : "") << ints->values[i];
    os << ")";
  } else if (const auto* q = std::get_if<QuadraticField>(&c)) {
    os << "quadratic(delta=" << q->delta;
    if (q->common_a) os << ",a=" << *q->common_a;
    os << ";";
    for (std::size_t i = 0; i < q->halves.size(); ++i) {
      os << (i ? "," : "") << "(" << q->halves[i].first << "," << q->halves[i].second << ")";
    }
    os << ")";
  } else {
    os << "unclassified";
  }
  return os.str();
}

EigenvalueClass classify_eigenvalues(const SpectralDecomposition& d, const std::vector<int>& support,
                                     const std::vector<long long>* exact_roots) {
  constexpr double kTol = 1e-7;
  std::vector<std::optional<long long>> rounded;
  bool all_integers = true;
  for (int r : support) {
    auto k = near_integer(d.thetas[r], kTol);
    if (k && exact_roots && std::find(exact_roots->begin(), exact_roots->end(), *k) == exact_roots->end()) {
      k.reset();
    }
    all_integers = all_integers && k.has_value();
    rounded.push_back(k);
  }
  if (all_integers) {
    AllIntegers out;
    for (const auto& k : rounded) out.values.push_back(*k);
    return out;
  }

  const long long bound = static_cast<long long>(std::ceil(2.0 * d.spectral_radius())) + 1;
  QuadraticField q;
  q.delta = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double theta = d.thetas[support[i]];
    if (rounded[i]) {
      q.halves.emplace_back(2 * *rounded[i], 0);
      continue;
    }
    bool matched = false;
    // a = 0, 1, -1, 2, -2, ...
    for (long long step = 0; step <= 2 * bound && !matched; ++step) {
      const long long a = (step % 2 == 0) ? -step / 2 : (step + 1) / 2;
      const double y = 2.0 * theta - static_cast<double>(a);
      const auto sq = near_integer(y * y, kTol);
      if (!sq || *sq <= 0) continue;
      const long long delta = squarefree_part(*sq);
      if (delta == 1) continue;
      const long long b2 = *sq / delta;
      long long b = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(b2))));
      if (b * b != b2) continue;
      if (y < 0) b = -b;
      const double value = (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(delta))) / 2.0;
      if (std::abs(value - theta) > kTol * (1.0 + std::abs(theta))) continue;
      if (q.delta != 0 && q.delta != delta) return Unclassified{};
      q.delta = delta;
      q.halves.emplace_back(a, b);
      matched = true;
    }
    if (!matched) return Unclassified{};
  }
  bool common = true;
  for (const auto& h : q.halves) common = common && h.first == q.halves.front().first;
  if (common) q.common_a = q.halves.front().first;
  return q;
}

PeriodBounds min_period_lower_bounds(const SpectralDecomposition& d, const std::vector<int>& support) {
  if (support.size() < 2) throw InvalidArgument("period bounds need at least two support eigenvalues");
  double hi = -1e300, lo = 1e300;
  for (int r : support) {
    hi = std::max(hi, d.thetas[r]);
    lo = std::min(lo, d.thetas[r]);
  }
  return {std::numbers::pi / (hi - lo), 2.0 * std::numbers::pi / (hi - lo)};
}

std::optional<double> first_zero_time(const SpectralDecomposition& d, int u, double t_max, int samples) {
  auto f = [&](double t) { return std::abs(transition_entry(d, t, u, u)); };
  const double h = t_max / samples;
  double prev2 = f(0.0), prev1 = f(h);
  for (int k = 2; k <= samples; ++k) {
    const double cur = f(k * h);
    if (prev1 <= prev2 && prev1 <= cur && prev1 < 1e-2) {
      const auto [t, value] = golden_section_minimize(f, (k - 2) * h, k * h);
      if (value < 1e-7) return t;
    }
    prev2 = prev1;
    prev1 = cur;
  }
  return std::nullopt;
}

}  // namespace qws
