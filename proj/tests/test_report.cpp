#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qws/census.hpp"
#include "qws/error.hpp"
#include "qws/graph_io.hpp"
#include "qws/report.hpp"
#include "qws/repro.hpp"

using namespace qws;

namespace {
constexpr double kPi = std::numbers::pi;

Json run(const std::string& expr, AnalyzeRequest req) {
  Graph g = parse_graph_expr(expr);
  g.set_tag(expr);
  return analyze(g, req, AnalysisConfig{});
}
}  // namespace

TEST(Config, ToleranceBounds) {
  AnalysisConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  set_tolerance(cfg.tol, "fidelity=1e-12");
  EXPECT_NO_THROW(cfg.validate());
  set_tolerance(cfg.tol, "cluster=0.5");
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  EXPECT_THROW(set_tolerance(cfg.tol, "speed=1"), InvalidArgument);
  EXPECT_THROW(set_tolerance(cfg.tol, "fidelity"), InvalidArgument);
  cfg = AnalysisConfig{};
  cfg.threads = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Analyze, P3Certificate) {
  AnalyzeRequest req;
  req.pst_all = true;
  req.round_trip = true;
  const Json j = run("path:3", req);
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["pst_all"]["certificates"].size(), 1u);
  const Json& c = j["pst_all"]["certificates"][0];
  EXPECT_EQ(c["u"], 0);
  EXPECT_EQ(c["v"], 2);
  EXPECT_NEAR(c["tau"].get<double>(), kPi / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(j["round_trip_checked"], 1);
}

TEST(Analyze, CubePair) {
  AnalyzeRequest req;
  req.pst = std::make_pair(0, 7);
  const Json j = run("cube:3", req);
  EXPECT_EQ(j["pst"]["verdict"], "pst");
  EXPECT_NEAR(j["pst"]["tau"].get<double>(), kPi / 2, 1e-12);
  EXPECT_EQ(j["pst"]["eigenvalueClass"], "integers(3,1,-1,-3)");
}

TEST(Analyze, P4Refutations) {
  AnalyzeRequest req;
  req.pst_all = true;
  const Json j = run("path:4", req);
  EXPECT_TRUE(j["pst_all"]["certificates"].empty());
  EXPECT_EQ(j["pst_all"]["refutations"].size(), 4u);
  EXPECT_EQ(j["pst_all"]["refutations"][0]["reasons"][0], "RatioConditionFails");
}

TEST(Analyze, Deterministic) {
  AnalyzeRequest req;
  req.pst_all = req.periodic = req.average_mixing = true;
  req.pgst = std::make_pair(0, 3);
  EXPECT_EQ(run("path:4", req).dump(), run("path:4", req).dump());
}

TEST(Analyze, VertexRange) {
  AnalyzeRequest req;
  req.pst = std::make_pair(0, 9);
  EXPECT_THROW(run("path:3", req), InvalidArgument);
}

TEST(Analyze, RoundTripCatchesTampering) {
  AnalyzeRequest req;
  req.pst_all = true;
  Json j = run("cube:2", req);
  EXPECT_EQ(validate_report(j, hypercube_graph(2), Hamiltonian::kAdjacency), 2);
  j["pst_all"]["certificates"][0]["tau"] = 1.0;
  EXPECT_THROW(validate_report(j, hypercube_graph(2), Hamiltonian::kAdjacency), NumericError);
}

TEST(Csv, Curves) {
  const auto d = decompose(complete_graph(2));
  const std::string f = fidelity_csv(d, 0, 1, 0, kPi / 2, 3);
  EXPECT_EQ(f.rfind("t,fidelity\n0,0\n", 0), 0u);
  EXPECT_EQ(flatness_csv(d, 0, 1, 5).substr(0, 11), "t,residual\n");
  EXPECT_THROW(flatness_csv(d, 0, 1, 1), InvalidArgument);
}

TEST(Census, OrderedParallelMatchesSerial) {
  std::vector<long long> serial, parallel;
  auto work = [](long long i) { return Json(i * i); };
  ordered_parallel(500, 1, work, [&](const Json& j) { serial.push_back(j.get<long long>()); });
  ordered_parallel(500, 4, work, [&](const Json& j) { parallel.push_back(j.get<long long>()); });
  EXPECT_EQ(serial, parallel);
  EXPECT_THROW(ordered_parallel(10, 3, [](long long i) -> Json { if (i == 7) throw NumericError("x"); return Json(i); }, [](const Json&) {}),
               NumericError);
}

TEST(Census, CubelikeD3) {
  AnalysisConfig cfg;
  cfg.threads = 2;
  std::vector<std::string> rows;
  const auto s = cubelike_census(3, cfg, [&](const Json& j) { rows.push_back(j.dump()); });
  EXPECT_EQ(s.specs, 128);
  EXPECT_EQ(s.disagreements, 0);
  EXPECT_EQ(rows.size(), 128u);
  cfg.threads = 1;
  std::vector<std::string> again;
  cubelike_census(3, cfg, [&](const Json& j) { again.push_back(j.dump()); });
  EXPECT_EQ(rows, again);
}

TEST(Census, CubelikeDedup) {
  // {100, 110} and {010, 110} differ by swapping the first two coordinates.
  EXPECT_EQ(canonical_cubelike_mask(3, 0b101), canonical_cubelike_mask(3, 0b110));
  EXPECT_NE(canonical_cubelike_mask(3, 0b1011), canonical_cubelike_mask(3, 0b10011));
  AnalysisConfig cfg;
  long long pst = 0;
  const auto s = cubelike_census(3, cfg, [&](const Json& j) { pst += j["verdict"] == "pst"; }, true);
  EXPECT_LT(s.specs, 128);
  EXPECT_EQ(s.pst, pst);
  EXPECT_EQ(s.disagreements, 0);
}

TEST(Census, CirculantOrders) {
  AnalysisConfig cfg;
  EXPECT_EQ(circulant_census(5, cfg, [](const Json&) {}).pst, 0);
  const auto s12 = circulant_census(12, cfg, [](const Json&) {});
  EXPECT_EQ(s12.integrality_mismatches, 0);
  EXPECT_EQ(s12.pst, 4);
}

TEST(Repro, ChecksRunIndividually) {
  EXPECT_TRUE(run_check(1, AnalysisConfig{}).passed);
  EXPECT_TRUE(run_check(2, AnalysisConfig{}).passed);
  EXPECT_THROW(run_check(15, AnalysisConfig{}), InvalidArgument);
  AnalysisConfig lap;
  lap.hamiltonian = Hamiltonian::kLaplacian;
  const CheckResult r = run_check(1, lap);
  EXPECT_TRUE(r.passed);
  EXPECT_NE(r.detail.find("laplacian"), std::string::npos);
}

TEST(Repro, PgstNoteUnderTightFidelity) {
  AnalysisConfig cfg;
  set_tolerance(cfg.tol, "fidelity=1e-12");
  const CheckResult r = run_check(12, cfg);
  EXPECT_NE(r.detail.find("schedule approximation only"), std::string::npos);
}
