#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qws/graph.hpp"
#include "qws/transfer.hpp"

namespace qws {

// Cayley graph of Z_2^d. Bit i of an element is coordinate i; `c` holds the
// connection set as integers below 2^d.
struct CubelikeSpec {
  int d = 0;
  std::vector<std::uint32_t> c;

  std::uint32_t sigma() const;
  // Throws InvalidArgument for d outside [1, 20], zero or repeated elements.
  void validate() const;
  // `cubelike:d=3;C=100,010,001`, strings read left to right as coordinates 0..d-1.
  std::string to_string() const;
};

std::string bit_string(std::uint32_t x, int d);

// The d x |C| GF(2) matrix whose columns are the connection set.
class BinaryCode {
 public:
  explicit BinaryCode(const CubelikeSpec& spec);

  int d() const { return d_; }
  int length() const { return static_cast<int>(columns_.size()); }
  // Weight of the row-space word a^T M.
  int weight(std::uint32_t a) const;

  // M 1 = 0.
  bool even() const;
  // M M^T = 0.
  bool self_orthogonal() const;
  // Every row-space word has weight divisible by 4 (row space enumerated).
  bool doubly_even() const;

 private:
  int d_;
  std::vector<std::uint32_t> columns_;
};

Graph cubelike_graph(const CubelikeSpec& spec);
// lambda_a = sum_{c in C} (-1)^{a.c} for a = 0..2^d - 1.
std::vector<int> cubelike_eigenvalues(const CubelikeSpec& spec);
// H(t)_{x,0} from the characters: 2^-d sum_a exp(i lambda_a t) (-1)^{a.x}.
Complex cubelike_transition_entry(const CubelikeSpec& spec, double t, std::uint32_t x);

enum class CubelikeRoute { kSumNonzero, kCodePiOver4, kFallback };
std::string_view to_string(CubelikeRoute r);

struct CubelikeVerdict {
  CubelikeRoute route = CubelikeRoute::kFallback;
  std::uint32_t sigma = 0;
  bool code_even = false;
  bool code_self_orthogonal = false;
  bool code_doubly_even = false;
  std::optional<PstCertificate> certificate;  // from vertex 0
  std::vector<Reason> reasons;
  // Dense evaluation agrees with the closed form.
  bool numeric_agrees = true;
};

// sigma != 0: PST 0 -> sigma at pi/2. sigma == 0 with an even, self-orthogonal
// code that is not doubly even: PST at pi/4. Otherwise find_pst on the
// graph. Closed-form claims are checked on the dense walk.
CubelikeVerdict cubelike_pst(const CubelikeSpec& spec, const TransferOptions& opts = {});

struct CodeSearchResult {
  std::optional<CubelikeSpec> spec;
  PstCertificate certificate;
  // Sets satisfying the code conditions that were rejected numerically.
  int rejected = 0;
  // Dimensions searched exhaustively without a hit.
  std::vector<int> exhausted;
};

// Exhaustive over connection sets for d <= 4, seeded random sampling for
// larger d, up to d_max. The first set whose code is even, self-orthogonal
// and not doubly even and whose walk has PST at pi/4 is returned.
CodeSearchResult find_pi4_code_instance(int d_max = 8, std::uint64_t seed = 1, long long samples_per_d = 2'000'000);

// Cayley graph of Z_n with an inverse-closed connection set.
struct CirculantSpec {
  int n = 0;
  std::vector<int> c;

  // Sorts C; throws InvalidArgument unless 0 < x < n and C = -C.
  void normalize();
  std::string to_string() const;
};

Graph circulant_graph(CirculantSpec spec);
// lambda_s = sum_{x in C} cos(2 pi s x / n), s = 0..n-1.
std::vector<double> circulant_eigenvalues(const CirculantSpec& spec);
// C is a union of classes {x : gcd(x, n) = g}.
bool circulant_is_integral(const CirculantSpec& spec);
bool circulant_numerically_integral(const CirculantSpec& spec, double tol = 1e-7);
bool circulant_connected(const CirculantSpec& spec);

struct CirculantVerdict {
  bool fast_refutation = false;  // odd n, or a connected graph with n = 2 mod 4, n > 2
  std::optional<std::pair<int, int>> pair;  // (0, n/2) when PST holds
  std::optional<PstCertificate> certificate;
  std::vector<Reason> reasons;
  // Numeric check on (0, n/2) agrees with the fast refutation.
  bool numeric_agrees = true;
};

CirculantVerdict circulant_pst_pair(CirculantSpec spec, const TransferOptions& opts = {});

// Inverse-closed connection sets of Z_n, in lexicographic order of the
// chosen pair representatives {x, n - x}, x <= n/2.
std::vector<CirculantSpec> all_circulants(int n);

}  // namespace qws
