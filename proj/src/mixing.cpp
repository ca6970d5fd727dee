#include "qws/mixing.hpp"

#include <algorithm>
#include <cmath>

#include "qws/error.hpp"
#include "qws/optimize.hpp"

namespace qws {
namespace {

bool multiple_of_j(const Matrix& m, double tol) {
  return (m.array() - m(0, 0)).abs().maxCoeff() <= tol;
}

}  // namespace

double flatness_residual(const CMatrix& u) {
  const double target = 1.0 / std::sqrt(static_cast<double>(u.rows()));
  return (u.cwiseAbs().array() - target).abs().maxCoeff();
}

bool is_flat(const CMatrix& u, double tol) { return flatness_residual(u) <= tol; }

MixingScan uniform_mixing_scan(const SpectralDecomposition& d, double t_max, int samples, double threshold) {
  if (!(t_max > 0.0) || samples < 3) throw InvalidArgument("mixing scan needs t_max > 0 and samples >= 3");
  MixingScan scan;
  scan.t_max = t_max;
  scan.samples = samples;
  auto f = [&](double t) { return flatness_residual(transition(d, t)); };
  const double h = t_max / samples;
  std::vector<double> r(samples + 1);
  for (int k = 1; k <= samples; ++k) r[k] = f(k * h);
  r[0] = f(0.0);
  for (int k = 1; k <= samples; ++k) {
    if (r[k] < scan.residual_floor) {
      scan.residual_floor = r[k];
      scan.floor_time = k * h;
    }
    const double right = k < samples ? r[k + 1] : r[k];
    if (!(r[k] <= r[k - 1] && r[k] <= right)) continue;
    // Only minima that could plausibly reach zero are worth refining.
    if (r[k] > 0.05) continue;
    const auto [t, value] = golden_section_minimize(f, (k - 1) * h, std::min((k + 1) * h, t_max));
    if (value < scan.residual_floor) {
      scan.residual_floor = value;
      scan.floor_time = t;
    }
    if (value < threshold &&
        (scan.flat_times.empty() || std::abs(scan.flat_times.back() - t) > 1e-6)) {
      scan.flat_times.push_back(t);
    }
  }
  return scan;
}

K2ProductRelation k2_product_flatness_relation(const Graph& x, double t, double tol) {
  K2ProductRelation rel;
  const SpectralDecomposition dx = decompose(x);
  rel.x_flat = is_flat(transition(dx, t), tol);
  const CMatrix h2 = transition(dx, 2.0 * t);
  const CMatrix id = CMatrix::Identity(x.order(), x.order());
  const Complex i(0.0, 1.0);
  rel.h2t_minus_i = (h2 + i * id).cwiseAbs().maxCoeff() <= tol;
  rel.h2t_scalar_i = rel.h2t_minus_i || (h2 - i * id).cwiseAbs().maxCoeff() <= tol;
  rel.predicted_flat = rel.x_flat && rel.h2t_scalar_i;
  rel.product_flat = is_flat(transition(decompose(direct_product(path_graph(2), x)), t), tol);
  return rel;
}

Matrix average_mixing(const SpectralDecomposition& d) {
  Matrix m = Matrix::Zero(d.order(), d.order());
  for (const auto& e : d.idempotents) m += e.cwiseProduct(e);
  return m;
}

bool is_average_uniform(const Matrix& m, double tol) {
  const double target = 1.0 / static_cast<double>(m.rows());
  return (m.array() - target).abs().maxCoeff() <= tol;
}

Matrix empirical_average_mixing(const SpectralDecomposition& d, double t_end, int steps) {
  if (steps < 1 || !(t_end > 0.0)) throw InvalidArgument("empirical average needs steps >= 1 and T > 0");
  Matrix acc = Matrix::Zero(d.order(), d.order());
  const double h = t_end / steps;
  for (int k = 0; k <= steps; ++k) {
    const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
    // H(t) o H(-t) = |H(t)|^2 entrywise for real symmetric A.
    acc += w * transition(d, k * h).cwiseAbs2();
  }
  return acc / steps;
}

bool psd_sum_multiple_of_J_check(const std::vector<Matrix>& f, double tol) {
  if (f.empty()) throw InvalidArgument("empty matrix list");
  Matrix sum = Matrix::Zero(f.front().rows(), f.front().cols());
  for (const auto& m : f) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.eigenvalues().minCoeff() < -tol) throw InvalidArgument("matrix is not positive semidefinite");
    sum += m;
  }
  if (!multiple_of_j(sum, tol)) throw InvalidArgument("sum is not a multiple of J");
  return std::all_of(f.begin(), f.end(), [&](const Matrix& m) { return multiple_of_j(m, tol); });
}

}  // namespace qws
