#include "qws/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qws/error.hpp"

namespace qws {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  return divide_exact(g);
}

IntPolynomial IntPolynomial::divide_exact(const mpz_class& d) const {
  if (d == 0) throw NumericError("polynomial division by zero");
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), d.get_mpz_t())) {
      throw NumericError("inexact polynomial division");
    }
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class c = c_[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    const bool unit = i > 0 && (c == 1 || c == -1);
    if (unit) {
      if (c < 0) os << "-";
    } else {
      os << c.get_str();
      if (i > 0) os << " ";
    }
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by the zero polynomial");
  IntPolynomial r = a;
  int e = a.degree() - b.degree() + 1;
  if (e <= 0) return r;
  const IntPolynomial lc = IntPolynomial::constant(b.leading());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const IntPolynomial s = IntPolynomial::monomial(r.degree() - b.degree(), r.leading());
    r = lc * r - s * b;
    --e;
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(e));
  return IntPolynomial::constant(scale) * r;
}

namespace {

IntPolynomial positive(const IntPolynomial& p) {
  if (!p.is_zero() && p.leading() < 0) return IntPolynomial::constant(-1) * p;
  return p;
}

mpz_class power(const mpz_class& b, int e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

}  // namespace

// Knuth's subresultant variant; the returned gcd keeps gcd(content a, content b).
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  IntPolynomial u = a.degree() >= b.degree() ? a : b;
  IntPolynomial v = a.degree() >= b.degree() ? b : a;
  const mpz_class d = gcd(u.content(), v.content());
  u = u.primitive_part();
  v = v.primitive_part();
  mpz_class g = 1;
  mpz_class h = 1;
  while (true) {
    const int delta = u.degree() - v.degree();
    IntPolynomial r = pseudo_remainder(u, v);
    if (r.is_zero()) return positive(IntPolynomial::constant(d) * v.primitive_part());
    if (r.degree() == 0) return IntPolynomial::constant(d);
    u = v;
    v = r.divide_exact(g * power(h, delta));
    g = u.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      mpz_class num = power(g, delta);
      const mpz_class den = power(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

IntMatrix integer_matrix(const Graph& x, Hamiltonian h) {
  const int n = x.order();
  if (n > kMaxExactOrder) {
    throw InvalidArgument("exact arithmetic is limited to n <= " + std::to_string(kMaxExactOrder));
  }
  const Matrix m = hamiltonian_matrix(x, h);
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = m(i, j);
      if (w != std::round(w) || std::abs(w) > 1e15) {
        throw InvalidArgument("exact arithmetic needs integer weights");
      }
      out(i, j) = static_cast<long>(std::llround(w));
    }
  return out;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix am(n, n);  // A * M_{k-1}; M_0 = 0
  for (int k = 1; k <= n; ++k) {
    IntMatrix m = am;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw NumericError("Faddeev-LeVerrier step was not exact");
    }
    mpz_class q = tr / k;
    c[n - k] = -q;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const Graph& x, Hamiltonian h) { return char_poly(integer_matrix(x, h)); }

IntPolynomial vertex_deleted_char_poly(const Graph& x, int u) {
  const IntMatrix a = integer_matrix(x);
  const int n = a.rows();
  if (u < 0 || u >= n) throw InvalidArgument("vertex out of range");
  IntMatrix d(n - 1, n - 1);
  for (int i = 0, ii = 0; i < n; ++i) {
    if (i == u) continue;
    for (int j = 0, jj = 0; j < n; ++j) {
      if (j == u) continue;
      d(ii, jj++) = a(i, j);
    }
    ++ii;
  }
  return char_poly(d);
}

IntPolynomial path_char_poly(int n) {
  if (n < 0) throw InvalidArgument("path order must be non-negative");
  IntPolynomial prev{1};  // P_0
  if (n == 0) return prev;
  IntPolynomial cur{0, 1};  // P_1
  const IntPolynomial x{0, 1};
  for (int k = 2; k <= n; ++k) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial path_char_poly_gcd(int m, int n) { return polynomial_gcd(path_char_poly(m), path_char_poly(n)); }

IntMatrix walk_matrix(const Graph& x, const std::vector<int>& s) {
  if (s.empty()) throw InvalidArgument("walk matrix needs a non-empty vertex set");
  const IntMatrix a = integer_matrix(x);
  const int n = a.rows();
  IntMatrix w(n, n);
  std::vector<mpz_class> col(n);
  for (int v : s) {
    if (v < 0 || v >= n) throw InvalidArgument("vertex out of range");
    col[v] += 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) w(i, k) = col[i];
    std::vector<mpz_class> next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a(i, j) != 0) next[i] += a(i, j) * col[j];
    col = std::move(next);
  }
  return w;
}

// Fraction-free (Bareiss) elimination; each division is checked.
int exact_rank(const IntMatrix& in) {
  IntMatrix m = in;
  const int rows = m.rows();
  const int cols = m.cols();
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
          throw NumericError("Bareiss step was not exact");
        }
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

int walk_rank(const Graph& x, int u) { return exact_rank(walk_matrix(x, {u})); }

bool is_controllable(const Graph& x, int u) { return walk_rank(x, u) == x.order(); }

int poles_count(const Graph& x, int u) {
  const IntPolynomial g = polynomial_gcd(vertex_deleted_char_poly(x, u), char_poly(x));
  return x.order() - g.degree();
}

bool cospectral_by_deletion(const Graph& x, int u, int v) {
  return vertex_deleted_char_poly(x, u) == vertex_deleted_char_poly(x, v);
}

bool cospectral_by_walk_gram(const Graph& x, int u, int v) {
  const IntMatrix wu = walk_matrix(x, {u});
  const IntMatrix wv = walk_matrix(x, {v});
  return wu.transpose() * wu == wv.transpose() * wv;
}

bool are_cospectral(const Graph& x, int u, int v) { return cospectral_by_deletion(x, u, v); }

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

RationalMatrix inverse(const RationalMatrix& in) {
  const int n = in.rows();
  if (n != in.cols()) throw InvalidArgument("inverse of a non-square matrix");
  RationalMatrix a = in;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw InvalidArgument("matrix is singular");
    if (p != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const mpq_class piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const mpq_class f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RationalMatrix transfer_orthogonal(const Graph& x, int u, int v) {
  const IntMatrix wu = walk_matrix(x, {u});
  if (exact_rank(wu) != x.order()) throw InvalidArgument("vertex is not controllable");
  return to_rational(walk_matrix(x, {v})) * inverse(to_rational(wu));
}

namespace {

// Peels off integer roots in descending order; `found` counts them with multiplicity.
std::vector<std::pair<long long, int>> peel_integer_roots(const IntPolynomial& p, int& found) {
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  std::vector<std::pair<long long, int>> roots;
  found = 0;
  if (p.degree() <= 0) return roots;
  // Fujiwara's bound on |root|.
  const double lead = std::abs(p.leading().get_d());
  double bound = 0.0;
  for (int k = 1; k <= p.degree(); ++k) {
    const double c = std::abs(p.coeff(p.degree() - k).get_d()) / lead;
    if (c > 0) bound = std::max(bound, std::pow(c, 1.0 / k));
  }
  const long long b = static_cast<long long>(std::ceil(2.0 * bound)) + 1;
  if (b > 10'000'000) throw NumericError("root bound too large for integer search");
  IntPolynomial rest = p;
  for (long long k = b; k >= -b && rest.degree() > 0; --k) {
    int mult = 0;
    const mpz_class z = static_cast<long>(k);
    while (rest.degree() > 0 && rest.evaluate(z) == 0) {
      // Synthetic division by (x - k).
      const auto& c = rest.coefficients();
      const int d = rest.degree();
      std::vector<mpz_class> q(d);
      mpz_class carry = 0;
      for (int i = d; i >= 1; --i) {
        carry = c[i] + carry * z;
        q[i - 1] = carry;
      }
      rest = IntPolynomial(std::move(q));
      ++mult;
    }
    if (mult > 0) {
      roots.emplace_back(k, mult);
      found += mult;
    }
  }
  return roots;
}

}  // namespace

std::optional<std::vector<std::pair<long long, int>>> integer_roots(const IntPolynomial& p) {
  int found = 0;
  auto roots = peel_integer_roots(p, found);
  if (found != std::max(p.degree(), 0)) return std::nullopt;
  return roots;
}

std::vector<long long> integer_root_values(const IntPolynomial& p) {
  int found = 0;
  std::vector<long long> out;
  for (const auto& [k, m] : peel_integer_roots(p, found)) out.push_back(k);
  return out;
}

RationalMatrix average_mixing_exact(const Graph& x) {
  const IntMatrix a = integer_matrix(x);
  const int n = a.rows();
  const auto roots = integer_roots(char_poly(a));
  if (!roots) throw InvalidArgument("average mixing matrix needs an integral spectrum");
  const int m = static_cast<int>(roots->size());
  RationalMatrix out(n, n);
  for (int r = 0; r < m; ++r) {
    const mpz_class theta = static_cast<long>((*roots)[r].first);
    IntMatrix num = IntMatrix::identity(n);
    mpz_class den = 1;
    for (int s = 0; s < m; ++s) {
      if (s == r) continue;
      const mpz_class mu = static_cast<long>((*roots)[s].first);
      IntMatrix shifted = a;
      for (int i = 0; i < n; ++i) shifted(i, i) -= mu;
      num = num * shifted;
      den *= theta - mu;
    }
    const mpz_class den2 = den * den;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += mpq_class(num(i, j) * num(i, j), den2);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j).canonicalize();
  return out;
}

}  // namespace qws
