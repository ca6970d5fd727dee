#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

#include "qws/cayley.hpp"
#include "qws/report.hpp"

namespace qws {

struct CensusSummary {
  long long specs = 0;
  long long pst = 0;
  // Closed-form or fast verdict disagreed with the dense check.
  long long disagreements = 0;
  // Circulants only: order-class integrality vs numeric integrality.
  long long integrality_mismatches = 0;
  long long integral = 0;
};

using LineSink = std::function<void(const Json&)>;

// Runs work(i) for i < count on `threads` workers; sink sees results in index order.
void ordered_parallel(long long count, int threads, const std::function<Json(long long)>& work,
                      const LineSink& sink);

// Every connection set of Z_2^d (all 2^(2^d - 1) subsets of the nonzero
// elements, empty set included), in increasing bitmask order. With `dedup`
// only the smallest mask of each coordinate-permutation class is analysed.
CensusSummary cubelike_census(int d, const AnalysisConfig& cfg, const LineSink& sink, bool dedup = false);
// Smallest subset mask (bit b = element b + 1) equivalent to `mask` under permutations of the d coordinates.
std::uint64_t canonical_cubelike_mask(int d, std::uint64_t mask);
// Every inverse-closed connection set of Z_n.
CensusSummary circulant_census(int n, const AnalysisConfig& cfg, const LineSink& sink);

Json cubelike_row(const CubelikeSpec& spec, const TransferOptions& opts);
Json circulant_row(const CirculantSpec& spec, const TransferOptions& opts);

Json summary_json(const char* family, const CensusSummary& s);

}  // namespace qws
