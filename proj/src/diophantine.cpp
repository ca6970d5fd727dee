#include "qws/diophantine.hpp"

#include <cmath>
#include <numeric>

#include "qws/error.hpp"

namespace qws {

std::optional<Fraction> rational_approximation(double x, long long max_den, double tol, double slack) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k from the recurrence h_n = a_n h_{n-1} + h_{n-2}.
  long double h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double rest = x;
  for (int step = 0; step < 64; ++step) {
    const long double a = std::floor(rest);
    const long double h = a * h0 + h1;
    const long double k = a * k0 + k1;
    if (k > static_cast<long double>(max_den)) break;
    const double err = std::abs(x - static_cast<double>(h / k));
    if (err <= tol * (1.0 + std::abs(x)) && err * static_cast<double>(k * k) <= slack) {
      return Fraction{static_cast<long long>(h), static_cast<long long>(k)};
    }
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    const long double frac = rest - a;
    if (frac < 1e-18L) break;
    rest = 1.0L / frac;
  }
  return std::nullopt;
}

long long squarefree_part(long long n) {
  if (n <= 0 || n > 1'000'000'000'000LL) throw InvalidArgument("squarefree part needs 0 < n <= 10^12");
  long long s = 1;
  for (long long p = 2; p * p <= n && p <= 1'000'000; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) s *= p;
  }
  return s * n;
}

std::optional<long long> near_integer(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) <= tol * (1.0 + std::abs(x)) && std::abs(r) < 9e15) return static_cast<long long>(r);
  return std::nullopt;
}

bool is_perfect_square(long long r) {
  if (r < 0) return false;
  long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(r))));
  while (s * s > r) --s;
  while ((s + 1) * (s + 1) <= r) ++s;
  return s * s == r;
}

long long gcd_all(const std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace qws
