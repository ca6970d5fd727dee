#include "qws/census.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "qws/error.hpp"

namespace qws {
namespace {

TransferOptions census_options(const AnalysisConfig& cfg) {
  TransferOptions o = cfg.transfer_options();
  // Dense numerics decide; the exact and automorphism filters only slow a census down.
  o.exact = false;
  o.automorphism_filters = false;
  return o;
}

Json reasons_json(const std::vector<Reason>& reasons) {
  Json j = Json::array();
  for (Reason r : reasons) j.push_back(std::string(to_string(r)));
  return j;
}

}  // namespace

void ordered_parallel(long long count, int threads, const std::function<Json(long long)>& work,
                      const LineSink& sink) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (long long i = 0; i < count; ++i) sink(work(i));
    return;
  }
  // Bounded window so memory stays flat on long runs.
  const long long window = 4096;
  std::vector<std::optional<Json>> slots(window);
  std::mutex mu;
  std::condition_variable produced, consumed;
  std::atomic<long long> next{0};
  long long emitted = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const long long i = next.fetch_add(1);
      if (i >= count) return;
      {
        std::unique_lock lock(mu);
        consumed.wait(lock, [&] { return i < emitted + window || failure; });
        if (failure) return;
      }
      Json row;
      try {
        row = work(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        produced.notify_all();
        consumed.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      slots[i % window] = std::move(row);
      produced.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  {
    std::unique_lock lock(mu);
    while (emitted < count && !failure) {
      produced.wait(lock, [&] { return slots[emitted % window].has_value() || failure; });
      if (failure) break;
      Json row = std::move(*slots[emitted % window]);
      slots[emitted % window].reset();
      ++emitted;
      consumed.notify_all();
      lock.unlock();
      sink(row);
      lock.lock();
    }
  }
  consumed.notify_all();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Json cubelike_row(const CubelikeSpec& spec, const TransferOptions& opts) {
  const CubelikeVerdict v = cubelike_pst(spec, opts);
  const BinaryCode code(spec);
  Json j;
  j["spec"] = spec.to_string();
  j["route"] = std::string(to_string(v.route));
  j["sigma"] = bit_string(v.sigma, spec.d);
  j["code"] = Json{{"even", v.code_even}, {"self_orthogonal", v.code_self_orthogonal}, {"doubly_even", v.code_doubly_even}};
  j["verdict"] = v.certificate ? "pst" : "none";
  if (v.certificate) {
    j["u"] = v.certificate->u;
    j["v"] = v.certificate->v;
    j["tau"] = v.certificate->tau;
    j["gamma"] = complex_json(v.certificate->gamma);
  }
  j["reasons"] = reasons_json(v.reasons);
  j["numeric_agrees"] = v.numeric_agrees;
  return j;
}

Json circulant_row(const CirculantSpec& spec, const TransferOptions& opts) {
  const CirculantVerdict v = circulant_pst_pair(spec, opts);
  const bool integral = circulant_is_integral(spec);
  const bool numeric = circulant_numerically_integral(spec);
  Json j;
  j["spec"] = spec.to_string();
  j["connected"] = circulant_connected(spec);
  j["integral"] = integral;
  j["integrality_agrees"] = integral == numeric;
  j["fast_refutation"] = v.fast_refutation;
  j["verdict"] = v.certificate ? "pst" : "none";
  if (v.certificate) {
    j["u"] = v.certificate->u;
    j["v"] = v.certificate->v;
    j["tau"] = v.certificate->tau;
    j["gamma"] = complex_json(v.certificate->gamma);
  }
  j["reasons"] = reasons_json(v.reasons);
  j["numeric_agrees"] = v.numeric_agrees;
  return j;
}

std::uint64_t canonical_cubelike_mask(int d, std::uint64_t mask) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const int nonzero = (1 << d) - 1;
  std::uint64_t best = mask;
  do {
    std::uint64_t image = 0;
    for (int b = 0; b < nonzero; ++b) {
      if (!(mask >> b & 1)) continue;
      const int x = b + 1;
      int y = 0;
      for (int i = 0; i < d; ++i)
        if (x >> i & 1) y |= 1 << perm[i];
      image |= std::uint64_t{1} << (y - 1);
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CensusSummary cubelike_census(int d, const AnalysisConfig& cfg, const LineSink& sink, bool dedup) {
  cfg.validate();
  if (d < 1 || d > 4) throw InvalidArgument("cubelike census covers 1 <= d <= 4");
  const TransferOptions opts = census_options(cfg);
  const int nonzero = (1 << d) - 1;
  std::vector<long long> masks;
  for (long long mask = 0; mask < (1LL << nonzero); ++mask) {
    if (!dedup || canonical_cubelike_mask(d, static_cast<std::uint64_t>(mask)) == static_cast<std::uint64_t>(mask))
      masks.push_back(mask);
  }
  CensusSummary s;
  ordered_parallel(
      static_cast<long long>(masks.size()), cfg.threads,
      [&](long long i) {
        const long long mask = masks[i];
        CubelikeSpec spec;
        spec.d = d;
        for (int b = 0; b < nonzero; ++b) {
          if (mask >> b & 1) spec.c.push_back(static_cast<std::uint32_t>(b + 1));
        }
        return cubelike_row(spec, opts);
      },
      [&](const Json& row) {
        ++s.specs;
        if (row["verdict"] == "pst") ++s.pst;
        if (!row["numeric_agrees"].get<bool>()) ++s.disagreements;
        sink(row);
      });
  return s;
}

CensusSummary circulant_census(int n, const AnalysisConfig& cfg, const LineSink& sink) {
  cfg.validate();
  const std::vector<CirculantSpec> specs = all_circulants(n);
  const TransferOptions opts = census_options(cfg);
  CensusSummary s;
  ordered_parallel(
      static_cast<long long>(specs.size()), cfg.threads, [&](long long i) { return circulant_row(specs[i], opts); },
      [&](const Json& row) {
        ++s.specs;
        if (row["verdict"] == "pst") ++s.pst;
        if (!row["numeric_agrees"].get<bool>()) ++s.disagreements;
        if (!row["integrality_agrees"].get<bool>()) ++s.integrality_mismatches;
        if (row["integral"].get<bool>()) ++s.integral;
        sink(row);
      });
  return s;
}

Json summary_json(const char* family, const CensusSummary& s) {
  Json body{{"schema", 1}, {"family", family}, {"specs", s.specs}, {"pst", s.pst}, {"disagreements", s.disagreements}};
  if (std::string_view(family) == "circulant") {
    body["integral"] = s.integral;
    body["integrality_mismatches"] = s.integrality_mismatches;
  }
  return Json{{"summary", body}};
}

}  // namespace qws
