#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qws/automorphism.hpp"
#include "qws/cayley.hpp"
#include "qws/error.hpp"

using namespace qws;

namespace {
constexpr double kPi = std::numbers::pi;

CubelikeSpec spec(int d, std::vector<std::uint32_t> c) { return CubelikeSpec{d, std::move(c)}; }
}  // namespace

TEST(Cubelike, Graphs) {
  EXPECT_TRUE(are_isomorphic(cubelike_graph(spec(3, {1, 2, 4})), hypercube_graph(3)));
  EXPECT_TRUE(are_isomorphic(cubelike_graph(spec(2, {1, 2, 3})), complete_graph(4)));
  EXPECT_THROW(spec(3, {0, 1}).validate(), InvalidArgument);
  EXPECT_THROW(spec(3, {1, 1}).validate(), InvalidArgument);
  EXPECT_THROW(spec(3, {8}).validate(), InvalidArgument);
}

TEST(Cubelike, SpecStrings) {
  EXPECT_EQ(spec(3, {1, 2, 4}).to_string(), "cubelike:d=3;C=100,010,001");
  EXPECT_EQ(bit_string(6, 3), "011");
}

TEST(Cubelike, EigenvaluesMatchDense) {
  const CubelikeSpec s = spec(4, {1, 3, 6, 12, 15});
  auto chars = cubelike_eigenvalues(s);
  std::sort(chars.begin(), chars.end());
  Eigen::SelfAdjointEigenSolver<Matrix> es(cubelike_graph(s).weights());
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(es.eigenvalues()(i), chars[i], 1e-10);
}

TEST(Cubelike, TransitionEntryMatchesDense) {
  const CubelikeSpec s = spec(3, {1, 3, 6});
  const CMatrix h = transition(decompose(cubelike_graph(s)), 0.77);
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_LT(std::abs(cubelike_transition_entry(s, 0.77, x) - h(x, 0)), 1e-12);
}

TEST(Cubelike, CubeVerdict) {
  const auto v = cubelike_pst(spec(3, {1, 2, 4}));
  EXPECT_EQ(v.route, CubelikeRoute::kSumNonzero);
  EXPECT_EQ(v.sigma, 7u);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(v.certificate->v, 7);
  EXPECT_NEAR(v.certificate->tau, kPi / 2, 1e-12);
  EXPECT_TRUE(v.numeric_agrees);
}

TEST(Cubelike, K4HasNoPst) {
  const auto v = cubelike_pst(spec(2, {1, 2, 3}));
  EXPECT_EQ(v.sigma, 0u);
  EXPECT_FALSE(v.certificate);
  EXPECT_TRUE(v.numeric_agrees);
}

TEST(Cubelike, CodeProperties) {
  // Columns 100, 010, 110: rows 101, 011 span {000, 101, 011, 110}.
  const CubelikeSpec s = spec(3, {1, 2, 3});
  const BinaryCode code(s);
  EXPECT_TRUE(code.even());
  EXPECT_FALSE(code.self_orthogonal());
  EXPECT_EQ(cubelike_pst(s).route, CubelikeRoute::kFallback);
  EXPECT_EQ(code.weight(1), 2);
  EXPECT_EQ(code.weight(4), 0);
}

TEST(Cubelike, Pi4InstanceFromSearch) {
  const auto found = find_pi4_code_instance(8, 1);
  ASSERT_TRUE(found.spec);
  // Exhaustive search finds nothing for d <= 4.
  EXPECT_EQ(found.exhausted, (std::vector<int>{2, 3, 4}));
  EXPECT_GE(found.spec->d, 5);
  const BinaryCode code(*found.spec);
  EXPECT_TRUE(code.even());
  EXPECT_TRUE(code.self_orthogonal());
  EXPECT_FALSE(code.doubly_even());
  const CMatrix h = transition_oracle(cubelike_graph(*found.spec), kPi / 4);
  EXPECT_GE(std::abs(h(found.certificate.v, 0)), 1 - 1e-8);
  const auto v = cubelike_pst(*found.spec);
  EXPECT_EQ(v.route, CubelikeRoute::kCodePiOver4);
  EXPECT_TRUE(v.certificate);
}

TEST(Circulant, Eigenvalues) {
  const auto c4 = circulant_eigenvalues(CirculantSpec{4, {1, 3}});
  ASSERT_EQ(c4.size(), 4u);
  EXPECT_NEAR(c4[0], 2, 1e-12);
  EXPECT_NEAR(c4[1], 0, 1e-12);
  EXPECT_NEAR(c4[2], -2, 1e-12);
  EXPECT_NEAR(c4[3], 0, 1e-12);
  const auto c5 = circulant_eigenvalues(CirculantSpec{5, {1, 4}});
  EXPECT_NEAR(c5[1], 2 * std::cos(2 * kPi / 5), 1e-12);
  for (double x : circulant_eigenvalues(CirculantSpec{7, {}})) EXPECT_EQ(x, 0.0);
}

TEST(Circulant, Integrality) {
  EXPECT_TRUE(circulant_is_integral(CirculantSpec{4, {1, 3}}));
  EXPECT_FALSE(circulant_is_integral(CirculantSpec{5, {1, 4}}));
  EXPECT_TRUE(circulant_is_integral(CirculantSpec{5, {1, 2, 3, 4}}));
  EXPECT_TRUE(circulant_is_integral(CirculantSpec{12, {2, 10, 3, 9}}) == circulant_numerically_integral(CirculantSpec{12, {2, 10, 3, 9}}));
  for (int n = 1; n <= 16; ++n)
    for (const auto& s : all_circulants(n)) EXPECT_EQ(circulant_is_integral(s), circulant_numerically_integral(s)) << s.to_string();
}

TEST(Circulant, GraphsAndValidation) {
  EXPECT_EQ(circulant_graph(CirculantSpec{6, {1, 5}}), cycle_graph(6));
  CirculantSpec bad{6, {1}};
  EXPECT_THROW(bad.normalize(), InvalidArgument);
  EXPECT_EQ(all_circulants(6).size(), 8u);
}

TEST(Circulant, PstPairs) {
  const auto c4 = circulant_pst_pair(CirculantSpec{4, {1, 3}});
  ASSERT_TRUE(c4.pair);
  EXPECT_EQ(c4.pair->second, 2);
  EXPECT_NEAR(c4.certificate->tau, kPi / 2, 1e-12);
  for (const auto& s : all_circulants(5)) EXPECT_FALSE(circulant_pst_pair(s).pair);
  for (const auto& s : all_circulants(6)) {
    const auto v = circulant_pst_pair(s);
    // Only the disconnected matching 3K2 escapes.
    if (circulant_connected(s)) EXPECT_FALSE(v.pair) << s.to_string();
    EXPECT_TRUE(v.numeric_agrees);
  }
}

TEST(Circulant, CensusCountsByOrder) {
  const std::map<int, int> want{{2, 1}, {4, 2}, {6, 1}, {8, 4}, {10, 1}, {12, 4}};
  for (const auto& [n, count] : want) {
    int found = 0;
    for (const auto& s : all_circulants(n)) found += circulant_pst_pair(s).pair ? 1 : 0;
    EXPECT_EQ(found, count) << n;
  }
}
