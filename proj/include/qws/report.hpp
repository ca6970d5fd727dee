#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "qws/graph.hpp"
#include "qws/spectral.hpp"
#include "qws/transfer.hpp"

namespace qws {

using Json = nlohmann::ordered_json;

struct Tolerances {
  double cluster = kClusterTolerance;
  double support = kSupportTolerance;
  double fidelity = 1e-8;
  double flatness = 1e-8;
};

struct AnalysisConfig {
  Tolerances tol;
  Hamiltonian hamiltonian = Hamiltonian::kAdjacency;
  double t_max = 100.0;
  std::uint64_t seed = 1;
  int threads = 1;

  // Throws InvalidArgument unless every tolerance is in (0, 1e-2), t_max > 0
  // and threads >= 1.
  void validate() const;
  TransferOptions transfer_options() const;
  // Applies QWS_THREADS when set.
  void apply_environment();
};

// `name=value` with name in cluster|support|fidelity|flatness.
void set_tolerance(Tolerances& tol, const std::string& assignment);

struct AnalyzeRequest {
  std::optional<std::pair<int, int>> pst;
  bool pst_all = false;
  bool periodic = false;
  bool mixing = false;
  bool average_mixing = false;
  std::optional<std::pair<int, int>> pgst;
  bool round_trip = false;
};

Json complex_json(Complex z);
Json certificate_json(const PstCertificate& c);
Json verdict_json(const Graph& g, const AnalysisConfig& cfg, const PstAnalysis& a);
Json periodicity_json(const PeriodicityReport& p);

// Deterministic report for one graph.
Json analyze(const Graph& g, const AnalyzeRequest& req, const AnalysisConfig& cfg);

// Re-checks every certificate in a report against the oracle exponential.
// Returns the number of certificates checked; throws NumericError on a
// residual above `tol`.
int validate_report(const Json& report, const Graph& g, Hamiltonian h, double tol = 1e-7);

// Dense CSV curves.
std::string fidelity_csv(const SpectralDecomposition& d, int u, int v, double t0, double t1, int samples);
std::string flatness_csv(const SpectralDecomposition& d, double t0, double t1, int samples);

}  // namespace qws
