#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qws/automorphism.hpp"
#include "qws/cayley.hpp"
#include "qws/compose.hpp"
#include "qws/error.hpp"

using namespace qws;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0, 1);
double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

CMatrix kron(const Matrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}
}  // namespace

TEST(Cartesian, KroneckerFactorisation) {
  const auto k2 = decompose(complete_graph(2));
  const CMatrix h = cartesian_transition(transition(k2, kPi / 2), transition(k2, kPi / 2));
  EXPECT_NEAR(std::abs(h(3, 0)), 1.0, 1e-12);
  EXPECT_LT(max_abs(cartesian_transition(transition(k2, 0), transition(k2, 0)) - CMatrix::Identity(4, 4)), 1e-12);
  const Graph grid = cartesian_product(path_graph(3), path_graph(3));
  const double t = kPi / std::sqrt(2.0);
  const CMatrix p3 = transition(decompose(path_graph(3)), t);
  EXPECT_LT(max_abs(cartesian_transition(p3, p3) - transition_oracle(grid, t)), 1e-9);
  EXPECT_NEAR(std::abs(transition_oracle(grid, t)(8, 0)), 1.0, 1e-9);
}

TEST(Cartesian, PowerTransport) {
  const auto k2 = find_pst(complete_graph(2), 0).certificate;
  const auto q3 = power_pst(complete_graph(2), *k2, 3);
  ASSERT_TRUE(q3);
  EXPECT_EQ(q3->v, 7);
  EXPECT_LT(std::abs(q3->gamma - kI * kI * kI), 1e-9);
  const auto p3 = find_pst(path_graph(3), 0).certificate;
  const auto r2 = power_pst(path_graph(3), *p3, 2);
  ASSERT_TRUE(r2);
  EXPECT_EQ(r2->v, diagonal_tuple_index(2, 3, 2));
  EXPECT_NEAR(r2->tau, kPi / std::sqrt(2.0), 1e-12);
  const auto same = power_pst(path_graph(3), *p3, 1);
  ASSERT_TRUE(same);
  EXPECT_EQ(same->v, 2);
}

TEST(Direct, FormulaMatchesOracle) {
  const Graph x = complete_graph(2), y = cycle_graph(3);
  const auto dx = decompose(x), dy = decompose(y);
  const Matrix j = Matrix::Ones(2, 2);
  for (double t : {0.0, 0.4, 1.3, 7.0}) {
    const CMatrix h = direct_transition(dx, dy, t);
    EXPECT_LT(max_abs(h - transition_oracle(direct_product(x, y), t)), 1e-9);
    const CMatrix alt = 0.5 * kron(j, transition(dy, t)) + 0.5 * kron(2 * Matrix::Identity(2, 2) - j, transition(dy, -t));
    EXPECT_LT(max_abs(h - alt), 1e-9);
  }
  EXPECT_LT(max_abs(direct_transition(dx, dy, 0.0) - CMatrix::Identity(6, 6)), 1e-12);
}

TEST(Direct, OddEigenvalueTransport) {
  const auto q2 = find_pst(hypercube_graph(2), 0).certificate;
  const auto a = direct_odd_pst(complete_graph(2), hypercube_graph(2), *q2);
  EXPECT_TRUE(a.precondition);
  ASSERT_TRUE(a.certificate);
  EXPECT_NEAR(a.certificate->tau, kPi / 2, 1e-12);
  EXPECT_LT(a.oracle_residual, 1e-9);

  const auto p3 = find_pst(path_graph(3), 0).certificate;
  const auto b = direct_odd_pst(complete_graph(2), path_graph(3), *p3);
  ASSERT_TRUE(b.certificate);
  EXPECT_LT(b.oracle_residual, 1e-9);

  // C4 has the even eigenvalue 2.
  EXPECT_FALSE(direct_odd_pst(cycle_graph(4), path_graph(3), *p3).precondition);
}

TEST(Join, SpectrumFormula) {
  const auto c4 = join_spectrum(empty_graph(2), empty_graph(2));
  EXPECT_NEAR(c4.mu1, 2, 1e-12);
  EXPECT_NEAR(c4.mu2, -2, 1e-12);
  const auto k4 = join_spectrum(complete_graph(2), complete_graph(2));
  EXPECT_NEAR(k4.mu1, 3, 1e-12);
  EXPECT_NEAR(k4.mu2, -1, 1e-12);
  EXPECT_NEAR(k4.a + k4.c, 0.5, 1e-12);
  EXPECT_THROW(join_spectrum(path_graph(3), complete_graph(2)), InvalidArgument);
}

TEST(Join, AssembledDecompositionIsExact) {
  const Graph x = cycle_graph(5), y = complete_graph(3);
  const Graph g = join(x, y);
  const auto d = join_decomposition(join_spectrum(x, y), g);
  const auto ref = decompose(g);
  ASSERT_EQ(d.size(), ref.size());
  for (int r = 0; r < d.size(); ++r) {
    EXPECT_NEAR(d.thetas[r], ref.thetas[r], 1e-9);
    EXPECT_LT((d.idempotents[r] - ref.idempotents[r]).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Join, TransportOnEmptyPair) {
  // Y 4-regular on 6 vertices: mu = 6, -2 and PST between the two X vertices at pi/2.
  const Graph y = circulant_graph(CirculantSpec{6, {1, 2, 4, 5}});
  const auto t = join_pst_transport(empty_graph(2), y, 0, 1);
  EXPECT_TRUE(t.perfect_square);
  EXPECT_NEAR(t.spectrum.mu1, 6, 1e-12);
  EXPECT_NEAR(t.spectrum.mu2, -2, 1e-12);
  ASSERT_TRUE(t.analysis.certificate);
  EXPECT_NEAR(t.analysis.certificate->tau, kPi / 2, 1e-9);
  EXPECT_LT(t.oracle_residual, 1e-8);
}

TEST(Join, SearchForK2Partner) {
  const auto found = find_join_instance(complete_graph(2), 9, 24, 24, 0, 1);
  ASSERT_TRUE(found);
  EXPECT_NEAR(found->transport.spectrum.mu1, 13, 1e-9);
  EXPECT_NEAR(found->transport.spectrum.mu2, -3, 1e-9);
  ASSERT_TRUE(found->transport.analysis.certificate);
  EXPECT_NEAR(found->transport.analysis.certificate->tau, kPi / 2, 1e-9);
}

TEST(Join, C4PlusC4) {
  const auto t = join_pst_transport(cycle_graph(4), cycle_graph(4), 0, 2);
  ASSERT_TRUE(t.analysis.certificate);
  EXPECT_NEAR(t.analysis.certificate->tau, kPi / 2, 1e-9);
}

TEST(Complement, Transport) {
  for (int n : {2, 4}) {
    const Graph x = copies(complete_graph(2), n);
    const auto cert = find_pst(x, 0).certificate;
    const auto t = complement_transport(x, *cert);
    EXPECT_TRUE(t.time_condition);
    ASSERT_TRUE(t.certificate) << n;
    EXPECT_LT(oracle_residual(complement(x), *t.certificate), 1e-9);
  }
  EXPECT_TRUE(are_isomorphic(complement(copies(complete_graph(2), 2)), cycle_graph(4)));
  for (int n : {1, 2}) {
    const Graph x = copies(cycle_graph(4), n);
    const auto t = complement_transport(x, *find_pst(x, 0).certificate);
    ASSERT_TRUE(t.certificate) << n;
  }
}

TEST(Complement, ThreeMatchingsFail) {
  // Cocktail party on 6 vertices: the time condition fails and the walk peaks below 1.
  const Graph x = copies(complete_graph(2), 3);
  const auto t = complement_transport(x, *find_pst(x, 0).certificate);
  EXPECT_FALSE(t.time_condition);
  EXPECT_FALSE(t.certificate);
  for (int u = 0; u < 6; ++u) EXPECT_FALSE(find_pst(complement(x), u).certificate);
}
