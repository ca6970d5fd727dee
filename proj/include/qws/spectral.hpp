#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qws/graph.hpp"

namespace qws {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kClusterTolerance = 1e-8;
inline constexpr double kSupportTolerance = 1e-8;

// Distinct eigenvalues (descending) with their orthogonal projections.
struct SpectralDecomposition {
  std::vector<double> thetas;
  std::vector<Matrix> idempotents;
  std::vector<int> multiplicities;
  double cluster_tolerance = kClusterTolerance;
  Matrix matrix;  // the decomposed Hamiltonian

  int order() const { return static_cast<int>(matrix.rows()); }
  int size() const { return static_cast<int>(thetas.size()); }
  double spectral_radius() const;
};

// Eigenvalues merge when consecutive sorted values differ by at most
// tol (1 + spectral radius). Throws NumericError if the solver fails.
SpectralDecomposition decompose(const Matrix& h, double cluster_tol = kClusterTolerance);
SpectralDecomposition decompose(const Graph& x, Hamiltonian h = Hamiltonian::kAdjacency,
                                double cluster_tol = kClusterTolerance);

// Builds a decomposition from (eigenvalue, projection) pieces, merging
// eigenvalues that fall in one cluster.
SpectralDecomposition assemble(const Matrix& h, std::vector<std::pair<double, Matrix>> pieces,
                               double cluster_tol = kClusterTolerance);

// p_r(A) = prod_{s != r} (A - theta_s I) / (theta_r - theta_s).
std::vector<Matrix> idempotents_via_lagrange(const SpectralDecomposition& d);

// H(t) = sum_r exp(i theta_r t) E_r.
CMatrix transition(const SpectralDecomposition& d, double t);
// H(t) e_u without forming the whole matrix.
CVector transition_column(const SpectralDecomposition& d, double t, int u);
Complex transition_entry(const SpectralDecomposition& d, double t, int u, int v);

// Independent exp(itH) by scaling and squaring of a Taylor series.
CMatrix transition_oracle(const Matrix& h, double t);
CMatrix transition_oracle(const Graph& x, double t, Hamiltonian h = Hamiltonian::kAdjacency);

// {r : ||E_r x|| > tol ||x||}. Throws InvalidArgument for the zero vector.
std::vector<int> eigenvalue_support(const SpectralDecomposition& d, const Vector& x,
                                    double tol = kSupportTolerance);
std::vector<int> vertex_support(const SpectralDecomposition& d, int u, double tol = kSupportTolerance);

struct AllIntegers {
  std::vector<long long> values;
};
// theta_r = (a_r + b_r sqrt(delta)) / 2 for every support eigenvalue.
struct QuadraticField {
  long long delta = 1;
  std::vector<std::pair<long long, long long>> halves;
  // Set when every a_r agrees, the form PST requires.
  std::optional<long long> common_a;
};
struct Unclassified {};
using EigenvalueClass = std::variant<AllIntegers, QuadraticField, Unclassified>;

std::string describe(const EigenvalueClass& c);

// Integers when every support eigenvalue rounds within 1e-7; if
// `exact_roots` is given the rounded values must be among them. Otherwise
// a quadratic form (a + b sqrt(delta)) / 2 with one squarefree delta > 1.
EigenvalueClass classify_eigenvalues(const SpectralDecomposition& d, const std::vector<int>& support,
                                     const std::vector<long long>* exact_roots = nullptr);

struct PeriodBounds {
  double zero_bound;    // pi / (theta_max - theta_min)
  double period_bound;  // 2 pi / (theta_max - theta_min)
};
// Over the eigenvalues in `support`. Throws InvalidArgument when the
// support has fewer than two eigenvalues.
PeriodBounds min_period_lower_bounds(const SpectralDecomposition& d, const std::vector<int>& support);

// First t in (0, t_max] with x^T H(t) x = 0 (x = e_u), located by sampling
// |H(t)_uu| and golden-section refinement; nullopt if none is found.
std::optional<double> first_zero_time(const SpectralDecomposition& d, int u, double t_max,
                                      int samples = 20000);

}  // namespace qws
