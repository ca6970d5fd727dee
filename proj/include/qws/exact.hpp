#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qws/graph.hpp"

namespace qws {

// Integer polynomial, coefficients in ascending degree; never carries
// trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(int degree, const mpz_class& c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  mpz_class coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }

  mpz_class evaluate(const mpz_class& x) const;
  double evaluate(double x) const;

  mpz_class content() const;
  IntPolynomial primitive_part() const;
  // Exact division of every coefficient; throws NumericError if inexact.
  IntPolynomial divide_exact(const mpz_class& d) const;

  // `a0 + a1 x + a2 x^2 ...`, zero terms omitted.
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Greatest common divisor by the subresultant PRS, normalised to a positive
// leading coefficient. gcd(0, 0) = 0.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Dense row-major matrices over Z and Q.
template <typename T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = ExactMatrix<mpz_class>;
using RationalMatrix = ExactMatrix<mpq_class>;

inline constexpr int kMaxExactOrder = 24;

// Integer matrix of X's weights (or of the chosen Hamiltonian). Throws
// InvalidArgument for non-integral weights and for n > 24.
IntMatrix integer_matrix(const Graph& x, Hamiltonian h = Hamiltonian::kAdjacency);

// det(xI - M) by Faddeev-LeVerrier; every step divides exactly.
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly(const Graph& x, Hamiltonian h = Hamiltonian::kAdjacency);
IntPolynomial vertex_deleted_char_poly(const Graph& x, int u);
// phi(P_n) from the three-term recurrence; phi(P_0) = 1.
IntPolynomial path_char_poly(int n);
IntPolynomial path_char_poly_gcd(int m, int n);

// Columns e_S, A e_S, ..., A^{n-1} e_S. Throws InvalidArgument for empty S.
IntMatrix walk_matrix(const Graph& x, const std::vector<int>& s);
int exact_rank(const IntMatrix& m);
int walk_rank(const Graph& x, int u);
bool is_controllable(const Graph& x, int u);
// Distinct poles of phi(X\u, x) / phi(X, x): n - deg gcd.
int poles_count(const Graph& x, int u);

bool cospectral_by_deletion(const Graph& x, int u, int v);
bool cospectral_by_walk_gram(const Graph& x, int u, int v);
// Deleted characteristic polynomials agree; see cospectral_by_walk_gram for
// the second route.
bool are_cospectral(const Graph& x, int u, int v);

// Gauss-Jordan over Q. Throws InvalidArgument when singular.
RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix to_rational(const IntMatrix& m);

// Q = W_v W_u^{-1}. Throws InvalidArgument when u is not controllable.
RationalMatrix transfer_orthogonal(const Graph& x, int u, int v);

// Distinct integer roots with multiplicities, descending, when p splits into
// integer linear factors; nullopt otherwise.
std::optional<std::vector<std::pair<long long, int>>> integer_roots(const IntPolynomial& p);
// Distinct integer roots, descending, whether or not p splits.
std::vector<long long> integer_root_values(const IntPolynomial& p);

// Sum over r of E_r o E_r with E_r from Lagrange polynomials over exact
// integer eigenvalues. Throws InvalidArgument when the spectrum is not
// integral.
RationalMatrix average_mixing_exact(const Graph& x);

}  // namespace qws
