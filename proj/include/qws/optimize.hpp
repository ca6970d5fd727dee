#pragma once

#include <cmath>
#include <utility>

namespace qws {

// Minimizes a unimodal f on [a, b]; returns (argmin, min).
template <typename F>
std::pair<double, double> golden_section_minimize(F&& f, double a, double b, int iterations = 120) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), e = a + g * (b - a);
  double fc = f(c), fe = f(e);
  for (int it = 0; it < iterations && b - a > 1e-15 * (1.0 + std::abs(b)); ++it) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + g * (b - a);
      fe = f(e);
    }
  }
  const double t = (a + b) / 2.0;
  return {t, f(t)};
}

}  // namespace qws
