#include "qws/cayley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "qws/error.hpp"

namespace qws {
namespace {

constexpr double kPi = std::numbers::pi;

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

Complex i_power(int k) {
  static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[((k % 4) + 4) % 4];
}

}  // namespace

std::string bit_string(std::uint32_t x, int d) {
  std::string s(d, '0');
  for (int i = 0; i < d; ++i)
    if (x >> i & 1u) s[i] = '1';
  return s;
}

std::uint32_t CubelikeSpec::sigma() const {
  std::uint32_t s = 0;
  for (auto x : c) s ^= x;
  return s;
}

void CubelikeSpec::validate() const {
  if (d < 1 || d > 20) throw InvalidArgument("cubelike dimension must be in [1, 20]");
  std::vector<std::uint32_t> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("cubelike connection set has repeated elements");
  }
  for (auto x : c) {
    if (x == 0) throw InvalidArgument("cubelike connection set contains 0");
    if (x >> d) throw InvalidArgument("cubelike element has more than d bits");
  }
}

std::string CubelikeSpec::to_string() const {
  std::ostringstream os;
  os << "cubelike:d=" << d << ";C=";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << bit_string(c[i], d);
  return os.str();
}

BinaryCode::BinaryCode(const CubelikeSpec& spec) : d_(spec.d), columns_(spec.c) { spec.validate(); }

int BinaryCode::weight(std::uint32_t a) const {
  int w = 0;
  for (auto c : columns_) w += parity(a & c);
  return w;
}

bool BinaryCode::even() const {
  std::uint32_t s = 0;
  for (auto c : columns_) s ^= c;
  return s == 0;
}

bool BinaryCode::self_orthogonal() const {
  for (int i = 0; i < d_; ++i)
    for (int j = i; j < d_; ++j) {
      int overlap = 0;
      for (auto c : columns_) overlap += (c >> i & 1u) & (c >> j & 1u);
      if (overlap % 2) return false;
    }
  return true;
}

bool BinaryCode::doubly_even() const {
  for (std::uint32_t a = 0; a < (1u << d_); ++a) {
    if (weight(a) % 4) return false;
  }
  return true;
}

Graph cubelike_graph(const CubelikeSpec& spec) {
  spec.validate();
  const int n = 1 << spec.d;
  Matrix w = Matrix::Zero(n, n);
  for (int g = 0; g < n; ++g)
    for (auto c : spec.c) w(g, g ^ static_cast<int>(c)) = 1.0;
  return Graph(w, spec.to_string());
}

std::vector<int> cubelike_eigenvalues(const CubelikeSpec& spec) {
  spec.validate();
  std::vector<int> out(1u << spec.d);
  for (std::uint32_t a = 0; a < out.size(); ++a) {
    int s = 0;
    for (auto c : spec.c) s += parity(a & c) ? -1 : 1;
    out[a] = s;
  }
  return out;
}

Complex cubelike_transition_entry(const CubelikeSpec& spec, double t, std::uint32_t x) {
  const auto lambda = cubelike_eigenvalues(spec);
  Complex z = 0.0;
  for (std::uint32_t a = 0; a < lambda.size(); ++a) {
    z += std::polar(1.0, lambda[a] * t) * (parity(a & x) ? -1.0 : 1.0);
  }
  return z / static_cast<double>(lambda.size());
}

std::string_view to_string(CubelikeRoute r) {
  switch (r) {
    case CubelikeRoute::kSumNonzero: return "sigma-nonzero";
    case CubelikeRoute::kCodePiOver4: return "code-pi/4";
    case CubelikeRoute::kFallback: return "fallback";
  }
  return "?";
}

CubelikeVerdict cubelike_pst(const CubelikeSpec& spec, const TransferOptions& opts) {
  spec.validate();
  CubelikeVerdict v;
  v.sigma = spec.sigma();
  const BinaryCode code(spec);
  v.code_even = code.even();
  v.code_self_orthogonal = code.self_orthogonal();
  v.code_doubly_even = v.code_self_orthogonal && code.doubly_even();

  const Graph x = cubelike_graph(spec);
  const TransferContext ctx = make_context(x, opts);
  const PstAnalysis numeric = find_pst(ctx, 0, opts);

  if (v.sigma != 0) {
    v.route = CubelikeRoute::kSumNonzero;
    auto cert = certify_at(ctx.decomposition, 0, kPi / 2.0, opts);
    const Complex expected = i_power(static_cast<int>(spec.c.size()));
    const bool closed_ok = cert && cert->v == static_cast<int>(v.sigma) && std::abs(cert->gamma - expected) <= 1e-7;
    v.numeric_agrees = closed_ok && numeric.certificate && numeric.certificate->v == static_cast<int>(v.sigma) &&
                       std::abs(numeric.certificate->tau - kPi / 2.0) <= 1e-9;
    if (closed_ok) {
      cert->sigma_u = kPi;
      v.certificate = cert;
    } else {
      v.reasons = numeric.reasons;
    }
    return v;
  }
  if (v.code_even && v.code_self_orthogonal && !v.code_doubly_even) {
    v.route = CubelikeRoute::kCodePiOver4;
    auto cert = certify_at(ctx.decomposition, 0, kPi / 4.0, opts);
    v.numeric_agrees = cert.has_value() && numeric.certificate && numeric.certificate->v == cert->v;
    if (cert) {
      cert->sigma_u = numeric.periodicity.min_period;
      v.certificate = cert;
    } else {
      v.reasons = numeric.reasons;
    }
    return v;
  }
  v.route = CubelikeRoute::kFallback;
  v.certificate = numeric.certificate;
  v.reasons = numeric.reasons;
  return v;
}

CodeSearchResult find_pi4_code_instance(int d_max, std::uint64_t seed, long long samples_per_d) {
  CodeSearchResult res;
  std::mt19937_64 rng(seed);
  auto try_set = [&](const CubelikeSpec& spec) {
    const BinaryCode code(spec);
    if (!code.even() || !code.self_orthogonal() || code.doubly_even()) return false;
    const Graph x = cubelike_graph(spec);
    const auto cert = certify_at(decompose(x), 0, kPi / 4.0);
    if (!cert) {
      ++res.rejected;
      return false;
    }
    res.spec = spec;
    res.certificate = *cert;
    return true;
  };
  for (int d = 2; d <= d_max; ++d) {
    const std::uint32_t elements = (1u << d) - 1;  // nonzero vectors 1..2^d-1
    if (d <= 4) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << elements); ++mask) {
        CubelikeSpec spec{d, {}};
        for (std::uint32_t e = 0; e < elements; ++e)
          if (mask >> e & 1u) spec.c.push_back(e + 1);
        if (try_set(spec)) return res;
      }
      res.exhausted.push_back(d);
      continue;
    }
    for (long long k = 0; k < samples_per_d; ++k) {
      CubelikeSpec spec{d, {}};
      std::uint32_t s = 0;
      for (std::uint32_t e = 1; e <= elements; ++e) {
        if (rng() & 1u) {
          spec.c.push_back(e);
          s ^= e;
        }
      }
      if (s != 0 || spec.c.empty()) continue;  // cheap even test first
      if (try_set(spec)) return res;
    }
  }
  return res;
}

void CirculantSpec::normalize() {
  if (n < 1) throw InvalidArgument("circulant order must be positive");
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (int x : c) {
    if (x <= 0 || x >= n) throw InvalidArgument("circulant connection set must lie in 1..n-1");
    if (!std::binary_search(c.begin(), c.end(), n - x)) {
      throw InvalidArgument("circulant connection set must be inverse-closed");
    }
  }
}

std::string CirculantSpec::to_string() const {
  std::ostringstream os;
  os << "circulant:n=" << n << ";C=";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

Graph circulant_graph(CirculantSpec spec) {
  spec.normalize();
  Matrix w = Matrix::Zero(spec.n, spec.n);
  for (int g = 0; g < spec.n; ++g)
    for (int x : spec.c) w(g, (g + x) % spec.n) = 1.0;
  return Graph(w, spec.to_string());
}

std::vector<double> circulant_eigenvalues(const CirculantSpec& spec) {
  std::vector<double> out(spec.n);
  for (int s = 0; s < spec.n; ++s) {
    double re = 0.0, im = 0.0;
    for (int x : spec.c) {
      const double angle = 2.0 * kPi * static_cast<double>((static_cast<long long>(s) * x) % spec.n) / spec.n;
      re += std::cos(angle);
      im += std::sin(angle);
    }
    if (std::abs(im) > 1e-10) throw NumericError("circulant eigenvalue has an imaginary part");
    out[s] = re;
  }
  return out;
}

bool circulant_is_integral(const CirculantSpec& spec) {
  std::vector<bool> in(spec.n, false);
  for (int x : spec.c) in[x] = true;
  for (int x : spec.c) {
    const int g = std::gcd(x, spec.n);
    for (int y = 1; y < spec.n; ++y) {
      if (std::gcd(y, spec.n) == g && !in[y]) return false;
    }
  }
  return true;
}

bool circulant_numerically_integral(const CirculantSpec& spec, double tol) {
  for (double l : circulant_eigenvalues(spec)) {
    if (std::abs(l - std::round(l)) > tol) return false;
  }
  return true;
}

bool circulant_connected(const CirculantSpec& spec) {
  int g = spec.n;
  for (int x : spec.c) g = std::gcd(g, x);
  return g == 1;
}

CirculantVerdict circulant_pst_pair(CirculantSpec spec, const TransferOptions& opts) {
  spec.normalize();
  CirculantVerdict v;
  const int n = spec.n;
  v.fast_refutation = n % 2 == 1 || (n % 4 == 2 && n > 2 && circulant_connected(spec));
  const Graph x = circulant_graph(spec);
  if (n == 1) {
    v.reasons.push_back(Reason::kNoPartnerInComponent);
    return v;
  }
  const TransferContext ctx = make_context(x, opts);
  // A partner of 0 must be the element of order two.
  const PstAnalysis a = n % 2 == 0 ? check_pst(ctx, 0, n / 2, opts) : find_pst(ctx, 0, opts);
  v.numeric_agrees = !(v.fast_refutation && a.certificate);
  if (a.certificate && !v.fast_refutation) {
    v.pair = std::make_pair(0, n / 2);
    v.certificate = a.certificate;
  } else {
    v.reasons = a.reasons;
  }
  return v;
}

std::vector<CirculantSpec> all_circulants(int n) {
  if (n < 1 || n > 40) throw InvalidArgument("circulant enumeration needs 1 <= n <= 40");
  const int reps = n / 2;
  std::vector<CirculantSpec> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps); ++mask) {
    CirculantSpec s{n, {}};
    for (int i = 0; i < reps; ++i) {
      if (mask >> i & 1u) {
        s.c.push_back(i + 1);
        if (n - (i + 1) != i + 1) s.c.push_back(n - (i + 1));
      }
    }
    s.normalize();
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qws
