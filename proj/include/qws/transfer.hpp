#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qws/graph.hpp"
#include "qws/partition.hpp"
#include "qws/spectral.hpp"

namespace qws {

enum class Reason {
  kNotCospectral,
  kSignConditionFails,
  kSupportMismatch,
  kRatioConditionFails,
  kNotPeriodicAtU,
  kControllablePair,
  kBipartiteRadiusNotSqrtInt,
  kDistancePartitionMismatch,
  kStabilizerMismatch,
  kNumericFidelityBelowThreshold,
  kNoPartnerInComponent,
};

std::string_view to_string(Reason r);

struct TransferOptions {
  Hamiltonian hamiltonian = Hamiltonian::kAdjacency;
  double cluster_tol = kClusterTolerance;
  double support_tol = kSupportTolerance;
  double fidelity_tol = 1e-8;     // PST accepted when |H(tau)_vu| >= 1 - fidelity_tol
  double certificate_tol = 1e-7;  // re-verification of the phase equations
  // Exact char-poly checks for integer matrices with n <= 24.
  bool exact = true;
  // Automorphism filters (n <= 16).
  bool automorphism_filters = true;
};

struct PeriodicityReport {
  std::optional<int> vertex;
  bool periodic = false;
  std::optional<double> min_period;
  EigenvalueClass eigenvalue_class = Unclassified{};
  bool ratio_condition_holds = false;
  // Ratio condition holds although the eigenvalues were not classified.
  bool inconsistent = false;
  std::vector<int> support;
};

struct PstCertificate {
  int u = 0;
  int v = 0;
  double tau = 0.0;
  Complex gamma = 1.0;
  std::vector<int> support;  // indices into the decomposition
  std::vector<int> signs;    // E_r e_u = signs[i] E_r e_v over the support
  double fidelity_residual = 0.0;  // ||H(tau) e_u - gamma e_v||
  std::optional<double> sigma_u;
};

struct PstAnalysis {
  int u = 0;
  std::optional<int> v;  // the queried partner, for check_pst
  std::optional<PstCertificate> certificate;
  std::vector<Reason> reasons;  // empty when a certificate exists
  PeriodicityReport periodicity;
  double best_fidelity = 0.0;  // max_{v != u} |H(sigma/2)_{vu}| when a period exists
};

// All pairwise difference ratios over the support are rational.
bool ratio_condition(const SpectralDecomposition& d, const std::vector<int>& support);

// Minimum period from the difference ratios: q_r = (theta_max - theta_r) / (theta_max -
// theta_min) = p_r / s_r, sigma = 2 pi L / ((theta_max - theta_min) G) with L = lcm s_r and
// G = gcd p_r L / s_r.
std::optional<double> period_from_support(const SpectralDecomposition& d, const std::vector<int>& support);

PeriodicityReport is_periodic_at(const SpectralDecomposition& d, int u,
                                 const std::vector<long long>* exact_roots = nullptr,
                                 const TransferOptions& opts = {});
PeriodicityReport is_periodic_at(const Graph& x, int u, const TransferOptions& opts = {});
PeriodicityReport is_periodic_graph(const SpectralDecomposition& d, const TransferOptions& opts = {});
PeriodicityReport is_periodic_graph(const Graph& x, const TransferOptions& opts = {});

// Shared per-graph state for repeated queries.
struct TransferContext {
  const Graph* graph = nullptr;
  SpectralDecomposition decomposition;
  // Hamiltonian has integer entries.
  bool integer_matrix = false;
  // Integer roots of the characteristic polynomial, when computed exactly.
  std::optional<std::vector<long long>> exact_roots;
};

// The graph must outlive the context.
TransferContext make_context(const Graph& x, const TransferOptions& opts = {});

// Searches for the (unique) partner of u at half the minimum period.
PstAnalysis find_pst(const TransferContext& ctx, int u, const TransferOptions& opts = {});
PstAnalysis find_pst(const Graph& x, int u, const TransferOptions& opts = {});

// find_pst plus pair-specific filters; the numeric evaluation decides.
PstAnalysis check_pst(const TransferContext& ctx, int u, int v, const TransferOptions& opts = {});
PstAnalysis check_pst(const Graph& x, int u, int v, const TransferOptions& opts = {});

// Certificate for u at a given time when some v != u has |H(tau)_vu| >= 1 - fidelity_tol.
std::optional<PstCertificate> certify_at(const SpectralDecomposition& d, int u, double tau,
                                         const TransferOptions& opts = {});

// Re-evaluates a certificate with the oracle exponential; returns ||H(tau) e_u - gamma e_v||.
double oracle_residual(const Graph& x, const PstCertificate& c, Hamiltonian h = Hamiltonian::kAdjacency);

// The quotient walk on an equitable partition moves u's cell to v's cell at
// tau with the same phase, and the two cells have equal size.
bool quotient_pst_check(const Graph& x, const VertexPartition& p, const PstCertificate& c,
                        double tol = 1e-7);

// E_r e_u = +-E_r e_v for every r.
bool pgst_filter(const SpectralDecomposition& d, int u, int v, double tol = 1e-8);

struct PgstResult {
  bool filter_passed = false;
  double best_t = 0.0;
  double best_fidelity = 0.0;  // |H(t)_vu|^2
  // (t, fidelity) at refined local maxima and schedule points, by time.
  std::vector<std::pair<double, double>> trace;
};

// Grid of step pi / (64 (theta_max - theta_min)) on (0, t_max] with
// golden-section refinement of local maxima, plus the explicit schedule.
// Reports only what was sampled. Throws InvalidArgument for t_max <= 0.
PgstResult pgst_search(const SpectralDecomposition& d, int u, int v, double t_max,
                       const std::vector<double>& schedule = {}, std::size_t trace_limit = 64);

// b pi / 2 for b = f_{4m+2}, m = 0..count-1, with f_0 = f_1 = 1.
std::vector<double> fibonacci_schedule(int count);

// (t, |H(t)_vu|^2) at `samples` evenly spaced times in [t0, t1].
std::vector<std::pair<double, double>> fidelity_curve(const SpectralDecomposition& d, int u, int v,
                                                      double t0, double t1, int samples);

}  // namespace qws
