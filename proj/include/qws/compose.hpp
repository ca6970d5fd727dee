#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qws/graph.hpp"
#include "qws/spectral.hpp"
#include "qws/transfer.hpp"

namespace qws {

// H_{X box Y}(t) = H_X(t) (x) H_Y(t).
CMatrix cartesian_transition(const CMatrix& hx, const CMatrix& hy);

// Index of the d-tuple (v, ..., v) in X^{box d}.
int diagonal_tuple_index(int v, int order, int d);

// Transports a certificate on X to the d-th Cartesian power: (u, ..., u) to
// (v, ..., v) at the same time with phase gamma^d. Re-verified on the power
// graph; nullopt when verification fails.
std::optional<PstCertificate> power_pst(const Graph& x, const PstCertificate& cert, int d,
                                        const TransferOptions& opts = {});

// H_{X x Y}(t) = sum_r E_r (x) H_Y(theta_r t).
CMatrix direct_transition(const SpectralDecomposition& dx, const SpectralDecomposition& dy, double t);

struct DirectOddResult {
  bool precondition = false;  // X has only odd integer eigenvalues and H_Y(2 tau) = gamma^2 I
  std::optional<PstCertificate> certificate;  // on X x Y, vertex index x |Y| + y
  double oracle_residual = 0.0;
};

// H_{X x Y}(tau) = H_X(phi) (x) gamma^{-1} H_Y(tau) with gamma = exp(i phi).
// The partner of (x, u) is (x', v) with |H_X(phi)_{x'x}| = 1.
DirectOddResult direct_odd_pst(const Graph& x, const Graph& y, const PstCertificate& cert_y, int x_vertex = 0,
                               const TransferOptions& opts = {});

struct JoinSpectrum {
  int m = 0, n = 0;     // |V(X)|, |V(Y)|
  double k = 0, l = 0;  // valencies
  double mu1 = 0, mu2 = 0;
  Matrix n1, n2;  // rank-one projections on V(X) + V(Y)
  // Block constants: N1 = [[a, b], [b, .]], N2 = [[c, d], [d, .]] on (X, Y).
  double a = 0, b = 0, c = 0, d = 0;
  std::vector<std::pair<double, Matrix>> inherited_x;  // embedded, J/m removed from theta = k
  std::vector<std::pair<double, Matrix>> inherited_y;
};

// Throws InvalidArgument unless both parts are regular with integer valency.
JoinSpectrum join_spectrum(const Graph& x, const Graph& y);
// Spectral decomposition of the join assembled from the pieces.
SpectralDecomposition join_decomposition(const JoinSpectrum& js, const Graph& joined);

struct JoinTransport {
  JoinSpectrum spectrum;
  bool perfect_square = false;  // (k - l)^2 + 4mn is a square
  // At the found tau: exp(i mu1 tau) = exp(i mu2 tau), so N1 + N2 acts as one phase.
  bool phases_aligned = false;
  // ... and that phase is exp(i k tau), i.e. a certificate on X carries over unchanged.
  bool x_phase_matches = false;
  PstAnalysis analysis;         // u -> v on the join, from the assembled decomposition
  double oracle_residual = 0.0;
};

// PST between u and v of X inside X + Y.
JoinTransport join_pst_transport(const Graph& x, const Graph& y, int u, int v, const TransferOptions& opts = {});

struct JoinInstance {
  Graph y;
  std::string y_spec;
  JoinTransport transport;
};

// First circulant Y of the given valency and even order in [n_min, n_max]
// passing the perfect-square precheck whose join with X has PST u -> v.
std::optional<JoinInstance> find_join_instance(const Graph& x, int valency, int n_min, int n_max, int u, int v,
                                               const TransferOptions& opts = {});

struct ComplementTransport {
  bool time_condition = false;  // tau n / (2 pi) is an integer
  std::optional<PstCertificate> certificate;  // on the complement, verified numerically
};

// For regular X: H_{complement}(t) = exp(it(J - I)) H_X(-t).
ComplementTransport complement_transport(const Graph& x, const PstCertificate& cert, const TransferOptions& opts = {});

}  // namespace qws
