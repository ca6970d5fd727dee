#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qws {

struct Fraction {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Fraction&) const = default;
};

inline constexpr long long kMaxDenominator = 1'000'000;
inline constexpr double kRationalTolerance = 1e-8;
// Convergents farther than this from x, measured as |x - p/q| q^2, are treated
// as generic approximations of an irrational.
inline constexpr double kBestApproximationSlack = 1e-4;

// First continued-fraction convergent p/q of x with q <= max_den,
// |x - p/q| <= tol (1 + |x|) and |x - p/q| q^2 <= slack.
std::optional<Fraction> rational_approximation(double x, long long max_den = kMaxDenominator,
                                               double tol = kRationalTolerance,
                                               double slack = kBestApproximationSlack);

// The squarefree s with n = s k^2 (n > 0), by trial division up to 10^6.
// Throws InvalidArgument outside (0, 10^12].
long long squarefree_part(long long n);

// Nearest integer when |x - round(x)| <= tol (1 + |x|).
std::optional<long long> near_integer(double x, double tol = 1e-7);

// r = n^2 for an integer n >= 0.
bool is_perfect_square(long long r);

long long gcd_all(const std::vector<long long>& v);

}  // namespace qws
