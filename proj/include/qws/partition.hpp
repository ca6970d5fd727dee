#pragma once

#include <vector>

#include "qws/graph.hpp"

namespace qws {

// Ordered disjoint cells covering V(X).
class VertexPartition {
 public:
  VertexPartition() = default;
  // Throws InvalidArgument unless the cells are non-empty, disjoint and
  // cover {0, ..., n-1}.
  VertexPartition(int n, std::vector<std::vector<int>> cells);

  static VertexPartition trivial(int n);
  static VertexPartition discrete(int n);
  // Cells given by equal labels, ordered by first occurrence.
  static VertexPartition from_labels(const std::vector<int>& labels);

  int order() const { return n_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& cell(int i) const { return cells_[i]; }
  int cell_of(int v) const { return cell_of_[v]; }
  bool is_singleton(int v) const { return cells_[cell_of_[v]].size() == 1; }

  // n x |cells| matrix whose columns are unit characteristic vectors.
  Matrix normalized_characteristic() const;

  // Same cells regardless of order.
  bool same_cells(const VertexPartition& other) const;
  bool refines(const VertexPartition& coarser) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_;
};

// Iterated cell splitting on weight-sums-into-each-cell signatures; the
// result is the coarsest equitable partition refining `seed`.
VertexPartition coarsest_equitable_refinement(const Graph& x, const VertexPartition& seed);

// Cell i holds the vertices at support distance i from u; unreachable
// vertices form a final cell.
VertexPartition distance_partition(const Graph& x, int u);

// Coarsest equitable refinement of the distance partition from u. This is
// the partition for which PST from u to v forces {v} to be a cell.
VertexPartition equitable_distance_partition(const Graph& x, int u);

inline constexpr double kEquitableTolerance = 1e-10;

// || A Q Q^T - Q Q^T A ||_max <= tol.
bool is_equitable(const Graph& x, const VertexPartition& p, double tol = kEquitableTolerance);

// B = Q^T A Q for an equitable partition. Throws InvalidArgument otherwise.
Matrix quotient(const Graph& x, const VertexPartition& p, double tol = kEquitableTolerance);

// Entry (i, j): total weight from any vertex of cell i into cell j.
Matrix quotient_counts(const Graph& x, const VertexPartition& p, double tol = kEquitableTolerance);

// Regular with every distance partition equitable.
bool is_distance_regular(const Graph& x);

// Orbits of the group generated by `perms`.
VertexPartition orbit_partition(int n, const std::vector<std::vector<int>>& perms);

}  // namespace qws
