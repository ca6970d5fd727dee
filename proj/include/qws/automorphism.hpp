#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qws/graph.hpp"

namespace qws {

// perm[v] is the image of v.
using Permutation = std::vector<int>;

inline constexpr int kMaxAutomorphismOrder = 16;

// Every weight-preserving permutation of V(X), found by backtracking with
// degree and distance invariants. Throws InvalidArgument when n > 16 and
// NumericError when the group has more than `max_count` elements.
std::vector<Permutation> automorphisms(const Graph& x, std::size_t max_count = 1'000'000);
std::vector<Permutation> automorphisms_fixing(const Graph& x, int u,
                                              std::size_t max_count = 1'000'000);

// Some automorphism fixing u but moving v, if one exists.
std::optional<Permutation> automorphism_fixing_moving(const Graph& x, int u, int v);

// Aut(X)_u == Aut(X)_v.
bool stabilizers_equal(const Graph& x, int u, int v);

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace qws
