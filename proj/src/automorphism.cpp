#include "qws/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "qws/error.hpp"

namespace qws {
namespace {

struct VertexInvariant {
  double loop;
  std::vector<double> row;
  std::vector<int> distances;
  bool operator==(const VertexInvariant&) const = default;
};

std::vector<VertexInvariant> invariants(const Graph& g, const std::vector<std::vector<int>>& dist) {
  std::vector<VertexInvariant> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    out[v].loop = g.weight(v, v);
    for (int y = 0; y < g.order(); ++y) {
      if (y != v) out[v].row.push_back(g.weight(v, y));
    }
    std::sort(out[v].row.begin(), out[v].row.end());
    out[v].distances = dist[v];
    std::sort(out[v].distances.begin(), out[v].distances.end());
  }
  return out;
}

// Backtracking search for weight- and distance-preserving bijections a -> b.
class Matcher {
 public:
  using Allowed = std::function<bool(int, int)>;
  using Visit = std::function<bool(const Permutation&)>;

  Matcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), da_(a.distance_matrix()), db_(b.distance_matrix()) {
    ia_ = invariants(a, da_);
    ib_ = invariants(b, db_);
    // BFS order keeps each new vertex adjacent to something already mapped.
    std::vector<bool> seen(a.order(), false);
    for (int s = 0; s < a.order(); ++s) {
      if (seen[s]) continue;
      std::deque<int> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        order_.push_back(x);
        for (int y : a.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
  }

  // Calls `visit` on every complete match respecting `allowed`; stops when
  // `visit` returns false.
  void run(const Allowed& allowed, const Visit& visit) {
    if (a_.order() != b_.order()) return;
    image_.assign(a_.order(), -1);
    used_.assign(b_.order(), false);
    allowed_ = &allowed;
    visit_ = &visit;
    extend(0);
  }

 private:
  bool consistent(int x, int y) const {
    if (!(ia_[x] == ib_[y])) return false;
    for (int k = 0; k < a_.order(); ++k) {
      const int fk = image_[k];
      if (fk < 0) continue;
      if (a_.weight(x, k) != b_.weight(y, fk) || da_[x][k] != db_[y][fk]) return false;
    }
    return true;
  }

  // Returns false when the search should stop.
  bool extend(int depth) {
    if (depth == a_.order()) return (*visit_)(image_);
    const int x = order_[depth];
    for (int y = 0; y < b_.order(); ++y) {
      if (used_[y] || !(*allowed_)(x, y) || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      const bool go_on = extend(depth + 1);
      image_[x] = -1;
      used_[y] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::vector<int>> da_, db_;
  std::vector<VertexInvariant> ia_, ib_;
  std::vector<int> order_;
  Permutation image_;
  std::vector<bool> used_;
  const Allowed* allowed_ = nullptr;
  const Visit* visit_ = nullptr;
};

void check_size(const Graph& x) {
  if (x.order() > kMaxAutomorphismOrder) {
    throw InvalidArgument("automorphism search is limited to n <= " +
                          std::to_string(kMaxAutomorphismOrder));
  }
}

std::vector<Permutation> collect(const Graph& x, const Matcher::Allowed& allowed,
                                 std::size_t max_count) {
  check_size(x);
  std::vector<Permutation> out;
  Matcher m(x, x);
  m.run(allowed, [&](const Permutation& p) {
    out.push_back(p);
    if (out.size() > max_count) {
      throw NumericError("automorphism group exceeds " + std::to_string(max_count) + " elements");
    }
    return true;
  });
  return out;
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& x, std::size_t max_count) {
  return collect(x, [](int, int) { return true; }, max_count);
}

std::vector<Permutation> automorphisms_fixing(const Graph& x, int u, std::size_t max_count) {
  return collect(
      x, [u](int a, int b) { return a != u || b == u; }, max_count);
}

std::optional<Permutation> automorphism_fixing_moving(const Graph& x, int u, int v) {
  check_size(x);
  std::optional<Permutation> found;
  Matcher m(x, x);
  m.run([u, v](int a, int b) { return (a != u || b == u) && (a != v || b != v); },
        [&](const Permutation& p) {
          found = p;
          return false;
        });
  return found;
}

bool stabilizers_equal(const Graph& x, int u, int v) {
  if (u == v) return true;
  return !automorphism_fixing_moving(x, u, v) && !automorphism_fixing_moving(x, v, u);
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::optional<Permutation> found;
  Matcher m(a, b);
  m.run([](int, int) { return true; },
        [&](const Permutation& p) {
          found = p;
          return false;
        });
  return found;
}

}  // namespace qws
