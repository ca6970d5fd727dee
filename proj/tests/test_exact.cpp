#include <gtest/gtest.h>

#include <numeric>

#include "qws/error.hpp"
#include "qws/exact.hpp"
#include "qws/graph.hpp"

using namespace qws;

namespace {
IntPolynomial poly(std::initializer_list<long> c) { return IntPolynomial(c); }
}  // namespace

TEST(IntPolynomial, ArithmeticAndTrim) {
  const IntPolynomial a = poly({-1, 0, 1});
  const IntPolynomial b = poly({1, 1});
  EXPECT_EQ((a * b).coefficients().size(), 4u);
  EXPECT_EQ(a - a, IntPolynomial());
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(a.evaluate(mpz_class(3)), 8);
  EXPECT_EQ(poly({2, 4, 6}).content(), 2);
  EXPECT_THROW(poly({2, 3}).divide_exact(2), NumericError);
}

TEST(IntPolynomial, SubresultantGcd) {
  // (x - 1)(x + 2) and (x - 1)(x - 3).
  const IntPolynomial g = polynomial_gcd(poly({-2, 1, 1}), poly({3, -4, 1}));
  EXPECT_EQ(g, poly({-1, 1}));
  EXPECT_EQ(polynomial_gcd(poly({1, 1}), poly({1, -1})), poly({1}));
  EXPECT_EQ(polynomial_gcd(IntPolynomial(), IntPolynomial()), IntPolynomial());
  // Content is kept: the gcd lives in Z[x].
  EXPECT_EQ(polynomial_gcd(poly({0, 2}), IntPolynomial()), poly({0, 2}));
}

TEST(CharPoly, SmallGraphs) {
  EXPECT_EQ(char_poly(path_graph(2)), poly({-1, 0, 1}));
  EXPECT_EQ(char_poly(path_graph(5)), poly({0, 3, 0, -4, 0, 1}));
  // Frozen from an independent symbolic computation.
  EXPECT_EQ(char_poly(petersen_graph()), poly({48, -160, 120, 120, -165, -24, 75, 0, -15, 0, 1}));
  EXPECT_EQ(char_poly(complete_bipartite_graph(3, 3)), poly({0, 0, 0, 0, -9, 0, 1}));
  EXPECT_EQ(char_poly(cycle_graph(6)), poly({-4, 0, 9, 0, -6, 0, 1}));
}

TEST(CharPoly, WeightedWithLoops) {
  Matrix w(3, 3);
  w << 1, 2, 0, 2, 0, -3, 0, -3, 2;
  EXPECT_EQ(char_poly(Graph(w)), poly({17, -11, -3, 1}));
}

TEST(CharPoly, RejectsNonIntegerAndLarge) {
  Matrix w(2, 2);
  w << 0, 0.5, 0.5, 0;
  EXPECT_THROW(char_poly(Graph(w)), InvalidArgument);
  EXPECT_THROW(char_poly(path_graph(25)), InvalidArgument);
}

TEST(CharPoly, PathRecurrenceMatchesMatrix) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(path_char_poly(n), char_poly(path_graph(n))) << n;
  EXPECT_EQ(path_char_poly(0), poly({1}));
}

TEST(CharPoly, PathSumIdentity) {
  // phi(P_{m+n}) = phi(P_m) phi(P_n) - phi(P_{m-1}) phi(P_{n-1}).
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      EXPECT_EQ(path_char_poly(m + n),
                path_char_poly(m) * path_char_poly(n) - path_char_poly(m - 1) * path_char_poly(n - 1));
}

TEST(CharPoly, PathGcd) {
  EXPECT_EQ(path_char_poly_gcd(2, 5), poly({-1, 0, 1}));
  // gcd(4, 6) = 2, so the common factor is phi(P_1) = x.
  EXPECT_EQ(path_char_poly_gcd(3, 5), poly({0, 1}));
  EXPECT_EQ(path_char_poly_gcd(2, 4), poly({1}));
  EXPECT_EQ(path_char_poly_gcd(6, 6), path_char_poly(6));
  // Nontrivial exactly when gcd(m + 1, n + 1) > 1.
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; n <= 9; ++n)
      EXPECT_EQ(path_char_poly_gcd(m, n).degree() > 0, std::gcd(m + 1, n + 1) > 1) << m << "," << n;
}

TEST(CharPoly, VertexDeleted) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(vertex_deleted_char_poly(p3, 0), poly({-1, 0, 1}));
  EXPECT_EQ(vertex_deleted_char_poly(p3, 1), poly({0, 0, 1}));
}

TEST(Cospectral, Examples) {
  EXPECT_TRUE(are_cospectral(path_graph(3), 0, 2));
  EXPECT_TRUE(are_cospectral(path_graph(4), 0, 3));
  EXPECT_FALSE(are_cospectral(path_graph(4), 0, 1));
  EXPECT_TRUE(are_cospectral(path_graph(4), 2, 2));
}

TEST(Cospectral, TwoRoutesAgree) {
  for (const Graph& g : {path_graph(6), cycle_graph(5), petersen_graph(), complete_bipartite_graph(2, 3)})
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(cospectral_by_deletion(g, u, v), cospectral_by_walk_gram(g, u, v));
}

TEST(Walk, Controllability) {
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(is_controllable(path_graph(n), 0)) << n;
  for (int u = 0; u < 3; ++u) EXPECT_FALSE(is_controllable(complete_graph(3), u));
  EXPECT_EQ(walk_rank(path_graph(3), 1), 2);
  EXPECT_THROW(walk_matrix(path_graph(3), {}), InvalidArgument);
}

TEST(Walk, PolesCount) {
  EXPECT_EQ(poles_count(path_graph(3), 0), 3);
  EXPECT_EQ(poles_count(path_graph(3), 1), 2);
  for (const Graph& g : {cycle_graph(6), petersen_graph(), hypercube_graph(3)})
    for (int u = 0; u < g.order(); ++u) EXPECT_EQ(poles_count(g, u), walk_rank(g, u));
}

TEST(Transfer, OrthogonalMatrix) {
  const RationalMatrix q2 = transfer_orthogonal(path_graph(2), 0, 1);
  EXPECT_EQ(q2(0, 1), 1);
  EXPECT_EQ(q2(0, 0), 0);
  EXPECT_EQ(transfer_orthogonal(path_graph(3), 0, 0), RationalMatrix::identity(3));

  const Graph p4 = path_graph(4);
  const RationalMatrix q = transfer_orthogonal(p4, 0, 3);
  const RationalMatrix a = to_rational(integer_matrix(p4));
  EXPECT_EQ(q * q.transpose(), RationalMatrix::identity(4));
  EXPECT_EQ(q, q.transpose());
  EXPECT_EQ(q * a, a * q);
  EXPECT_EQ(q(0, 3), 1);
  EXPECT_THROW(transfer_orthogonal(complete_graph(3), 0, 1), InvalidArgument);
}

TEST(Roots, IntegerRoots) {
  const auto r = integer_roots(char_poly(petersen_graph()));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, (std::vector<std::pair<long long, int>>{{3, 1}, {1, 5}, {-2, 4}}));
  EXPECT_FALSE(integer_roots(char_poly(path_graph(3))).has_value());
  EXPECT_EQ(integer_root_values(char_poly(path_graph(3))), std::vector<long long>{0});
}

TEST(AverageMixingExact, K3) {
  const RationalMatrix m = average_mixing_exact(complete_graph(3));
  EXPECT_EQ(m(0, 0), mpq_class(5, 9));
  EXPECT_EQ(m(0, 1), mpq_class(2, 9));
  EXPECT_THROW(average_mixing_exact(path_graph(3)), InvalidArgument);
}
