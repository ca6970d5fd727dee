#pragma once

#include <vector>

#include "qws/graph.hpp"
#include "qws/spectral.hpp"

namespace qws {

inline constexpr double kFlatTolerance = 1e-8;

// max_{u,v} | |U_uv| - 1/sqrt(n) |.
double flatness_residual(const CMatrix& u);
bool is_flat(const CMatrix& u, double tol = kFlatTolerance);

struct MixingScan {
  std::vector<double> flat_times;  // refined times with residual below the threshold
  double residual_floor = 1.0;     // smallest residual seen anywhere
  double floor_time = 0.0;
  double t_max = 0.0;
  int samples = 0;
};

// Samples the flatness residual on (0, t_max] and refines every local
// minimum by golden-section search (the residual has a kink at its
// minima). Only reports what it finds.
MixingScan uniform_mixing_scan(const SpectralDecomposition& d, double t_max, int samples = 20000,
                               double threshold = 1e-6);

struct K2ProductRelation {
  bool x_flat = false;
  bool h2t_scalar_i = false;      // H_X(2t) = +-i I
  bool predicted_flat = false;    // x_flat && h2t_scalar_i
  bool product_flat = false;      // K2 x X evaluated directly
  bool h2t_minus_i = false;       // the -i case specifically
};

K2ProductRelation k2_product_flatness_relation(const Graph& x, double t, double tol = kFlatTolerance);

// sum_r E_r o E_r.
Matrix average_mixing(const SpectralDecomposition& d);
// || M - J/n ||_max <= tol.
bool is_average_uniform(const Matrix& m, double tol = 1e-8);

// Trapezoid average of H(t) o H(-t) over [0, T].
Matrix empirical_average_mixing(const SpectralDecomposition& d, double t_end, int steps);

// Given PSD matrices whose sum is a multiple of J, true when each one is a
// multiple of J. Throws InvalidArgument when the premise fails.
bool psd_sum_multiple_of_J_check(const std::vector<Matrix>& f, double tol = 1e-8);

}  // namespace qws
