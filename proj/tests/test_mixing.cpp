#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qws/error.hpp"
#include "qws/exact.hpp"
#include "qws/mixing.hpp"
#include "qws/repro.hpp"

using namespace qws;

namespace {
constexpr double kPi = std::numbers::pi;

bool near_any(const std::vector<double>& ts, double t) {
  for (double s : ts)
    if (std::abs(s - t) < 1e-6) return true;
  return false;
}
}  // namespace

TEST(Flat, Examples) {
  EXPECT_TRUE(is_flat(transition(decompose(complete_graph(2)), kPi / 4)));
  EXPECT_TRUE(is_flat(transition(decompose(complete_graph(4)), kPi / 4)));
  EXPECT_FALSE(is_flat(CMatrix::Identity(3, 3)));
  EXPECT_NEAR(flatness_residual(CMatrix::Identity(4, 4)), 0.5, 1e-12);
}

TEST(Scan, K3) {
  const auto s = uniform_mixing_scan(decompose(complete_graph(3)), 3.0);
  EXPECT_TRUE(near_any(s.flat_times, 2 * kPi / 9));
  EXPECT_TRUE(near_any(s.flat_times, 4 * kPi / 9));
  EXPECT_TRUE(near_any(s.flat_times, 8 * kPi / 9));
}

TEST(Scan, Cubes) {
  for (int d = 1; d <= 4; ++d) EXPECT_TRUE(near_any(uniform_mixing_scan(decompose(hypercube_graph(d)), 1.0).flat_times, kPi / 4));
}

TEST(Scan, Clebsch) {
  const auto s = uniform_mixing_scan(decompose(folded_cube_graph(5)), 4.0);
  ASSERT_FALSE(s.flat_times.empty());
  EXPECT_LT(flatness_residual(transition_oracle(folded_cube_graph(5), s.flat_times[0])), 1e-6);
}

TEST(Scan, C5NoneFound) {
  const auto s = uniform_mixing_scan(decompose(cycle_graph(5)), 40.0);
  EXPECT_TRUE(s.flat_times.empty());
  EXPECT_GT(s.residual_floor, 1e-3);
}

TEST(Scan, SymmetricUnderReflection) {
  // K3 is periodic with period 2 pi / 3: flat times come in pairs t, 2pi/3 - t.
  const auto s = uniform_mixing_scan(decompose(complete_graph(3)), 2 * kPi / 3 - 1e-3);
  for (double t : s.flat_times) EXPECT_TRUE(near_any(s.flat_times, 2 * kPi / 3 - t)) << t;
}

TEST(K2Product, C3Relation) {
  const auto r = k2_product_flatness_relation(complete_graph(3), 4 * kPi / 9);
  EXPECT_TRUE(r.x_flat);
  EXPECT_FALSE(r.h2t_scalar_i);
  EXPECT_FALSE(r.product_flat);
  const auto zero = k2_product_flatness_relation(complete_graph(3), 0.0);
  EXPECT_FALSE(zero.x_flat);
  EXPECT_FALSE(zero.product_flat);
}

TEST(K2Product, AgreesOnCubes) {
  const auto s = uniform_mixing_scan(decompose(hypercube_graph(2)), 3.0);
  ASSERT_FALSE(s.flat_times.empty());
  for (double t : s.flat_times) {
    const auto r = k2_product_flatness_relation(hypercube_graph(2), t);
    EXPECT_EQ(r.predicted_flat, r.product_flat) << t;
  }
}

TEST(Average, PathsFormula) {
  for (int n = 2; n <= 10; ++n) {
    Matrix want = 2 * Matrix::Ones(n, n) + Matrix::Identity(n, n);
    for (int i = 0; i < n; ++i) want(i, n - 1 - i) += 1;
    want /= 2.0 * n + 2;
    EXPECT_LT((average_mixing(decompose(path_graph(n))) - want).cwiseAbs().maxCoeff(), 1e-10) << n;
  }
}

TEST(Average, DoublyStochasticPsd) {
  for (const Graph& g : corpus_graphs()) {
    const Matrix m = average_mixing(decompose(g));
    EXPECT_LT((m.rowwise().sum() - Vector::Ones(g.order())).cwiseAbs().maxCoeff(), 1e-9) << g.tag();
    EXPECT_GE(m.minCoeff(), -1e-12);
    EXPECT_LT((m - m.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
    if (g.order() >= 3 && g.is_connected()) EXPECT_FALSE(is_average_uniform(m)) << g.tag();
  }
}

TEST(Average, SmallCases) {
  EXPECT_TRUE(is_average_uniform(average_mixing(decompose(complete_graph(2)))));
  const Matrix k3 = average_mixing(decompose(complete_graph(3)));
  EXPECT_NEAR(k3(0, 0), 5.0 / 9, 1e-12);
  EXPECT_NEAR(k3(0, 1), 2.0 / 9, 1e-12);
  const Matrix split = average_mixing(decompose(disjoint_union(complete_graph(2), empty_graph(1))));
  EXPECT_NEAR(split(0, 1), 0.5, 1e-12);
  EXPECT_NEAR(split(2, 2), 1.0, 1e-12);
  EXPECT_NEAR(split(0, 2), 0.0, 1e-12);
}

TEST(Average, ExactAgreesWithFloat) {
  for (const Graph& g : {complete_graph(4), hypercube_graph(3), petersen_graph(), cycle_graph(6)}) {
    const RationalMatrix e = average_mixing_exact(g);
    const Matrix m = average_mixing(decompose(g));
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j) EXPECT_NEAR(e(i, j).get_d(), m(i, j), 1e-12);
  }
}

TEST(Average, EmpiricalTimeAverage) {
  const auto d = decompose(path_graph(4));
  const double span = d.thetas.front() - d.thetas.back();
  const Matrix emp = empirical_average_mixing(d, 200 * 2 * kPi / span, 200000);
  EXPECT_LT((emp - average_mixing(d)).cwiseAbs().maxCoeff(), 1e-2);
}

TEST(Densities, RowsAreProbabilities) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> time(-20, 20);
  const auto d = decompose(petersen_graph());
  for (int i = 0; i < 20; ++i) {
    const CMatrix h = transition(d, time(rng));
    const Matrix p = h.cwiseAbs2();
    EXPECT_GE(p.minCoeff(), -1e-12);
    EXPECT_LT((p.rowwise().sum() - Vector::Ones(10)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(PsdLemma, MultiplesOfJ) {
  const Matrix j = Matrix::Ones(3, 3);
  EXPECT_TRUE(psd_sum_multiple_of_J_check({0.5 * j, 0.5 * j}));
  EXPECT_TRUE(psd_sum_multiple_of_J_check({0.3 * j / 3, 0.7 * j / 3}));
  EXPECT_THROW(psd_sum_multiple_of_J_check({Matrix::Identity(3, 3)}), InvalidArgument);
}

TEST(PsdLemma, RandomSearchFindsNoCounterexample) {
  // F1 = B B^T random PSD, F2 = cJ - F1: whenever F2 is PSD the lemma must hold.
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::bernoulli_distribution perturb(0.5);
  int admissible = 0;
  for (int i = 0; i < 2000; ++i) {
    Matrix b(3, 1);
    const bool p = perturb(rng);
    for (int k = 0; k < 3; ++k) b(k) = 1.0 + (p ? 0.05 * g(rng) : 0.0);
    const Matrix f1 = b * b.transpose();
    const Matrix f2 = 4.0 * Matrix::Ones(3, 3) - f1;
    Eigen::SelfAdjointEigenSolver<Matrix> es(f2);
    if (es.eigenvalues().minCoeff() < -1e-12) continue;
    ++admissible;
    EXPECT_TRUE(psd_sum_multiple_of_J_check({f1, f2}, 1e-6));
  }
  EXPECT_GT(admissible, 0);
}
