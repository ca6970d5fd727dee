#include "qws/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "qws/error.hpp"

namespace qws {

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> cells)
    : n_(n), cells_(std::move(cells)), cell_of_(n, -1) {
  for (int i = 0; i < size(); ++i) {
    if (cells_[i].empty()) throw InvalidArgument("partition cells must be non-empty");
    for (int v : cells_[i]) {
      if (v < 0 || v >= n || cell_of_[v] >= 0) {
        throw InvalidArgument("partition cells must be disjoint vertex sets");
      }
      cell_of_[v] = i;
    }
  }
  if (std::find(cell_of_.begin(), cell_of_.end(), -1) != cell_of_.end()) {
    throw InvalidArgument("partition cells must cover every vertex");
  }
}

VertexPartition VertexPartition::trivial(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return VertexPartition(n, {all});
}

VertexPartition VertexPartition::discrete(int n) {
  std::vector<std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells.push_back({v});
  return VertexPartition(n, std::move(cells));
}

VertexPartition VertexPartition::from_labels(const std::vector<int>& labels) {
  std::map<int, int> index;
  std::vector<std::vector<int>> cells;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    auto [it, inserted] = index.emplace(labels[v], static_cast<int>(cells.size()));
    if (inserted) cells.emplace_back();
    cells[it->second].push_back(v);
  }
  return VertexPartition(static_cast<int>(labels.size()), std::move(cells));
}

Matrix VertexPartition::normalized_characteristic() const {
  Matrix q = Matrix::Zero(n_, size());
  for (int i = 0; i < size(); ++i) {
    const double s = 1.0 / std::sqrt(static_cast<double>(cells_[i].size()));
    for (int v : cells_[i]) q(v, i) = s;
  }
  return q;
}

bool VertexPartition::same_cells(const VertexPartition& other) const {
  return n_ == other.n_ && size() == other.size() && refines(other);
}

bool VertexPartition::refines(const VertexPartition& coarser) const {
  if (n_ != coarser.n_) return false;
  for (const auto& c : cells_) {
    for (int v : c) {
      if (coarser.cell_of(v) != coarser.cell_of(c.front())) return false;
    }
  }
  return true;
}

VertexPartition coarsest_equitable_refinement(const Graph& x, const VertexPartition& seed) {
  const int n = x.order();
  if (seed.order() != n) throw InvalidArgument("seed partition has wrong order");
  const Matrix& w = x.weights();
  const double scale = 1.0 + w.cwiseAbs().maxCoeff();
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = seed.cell_of(v);
  int cell_count = seed.size();

  while (true) {
    // Signature: own cell, then the (quantized) weight sum into every cell.
    std::vector<std::vector<long long>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<double> into(cell_count, 0.0);
      for (int y = 0; y < n; ++y) into[label[y]] += w(v, y);
      sig[v].push_back(label[v]);
      for (double s : into) sig[v].push_back(std::llround(s / scale * 1e9));
    }
    // New labels ordered by (old label, first occurrence).
    std::map<std::vector<long long>, int> first_seen;
    std::vector<std::pair<std::vector<long long>, int>> order;
    for (int v = 0; v < n; ++v) {
      if (first_seen.emplace(sig[v], v).second) order.emplace_back(sig[v], v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first[0] < b.first[0]; });
    std::map<std::vector<long long>, int> relabel;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) relabel[order[i].first] = i;
    for (int v = 0; v < n; ++v) label[v] = relabel[sig[v]];
    const int new_count = static_cast<int>(order.size());
    if (new_count == cell_count) break;
    cell_count = new_count;
  }
  std::vector<std::vector<int>> cells(cell_count);
  for (int v = 0; v < n; ++v) cells[label[v]].push_back(v);
  return VertexPartition(n, std::move(cells));
}

VertexPartition distance_partition(const Graph& x, int u) {
  const auto dist = x.distances_from(u);
  const int ecc = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<int>> cells(ecc + 1);
  std::vector<int> unreachable;
  for (int v = 0; v < x.order(); ++v) {
    if (dist[v] < 0) {
      unreachable.push_back(v);
    } else {
      cells[dist[v]].push_back(v);
    }
  }
  if (!unreachable.empty()) cells.push_back(std::move(unreachable));
  return VertexPartition(x.order(), std::move(cells));
}

VertexPartition equitable_distance_partition(const Graph& x, int u) {
  return coarsest_equitable_refinement(x, distance_partition(x, u));
}

bool is_equitable(const Graph& x, const VertexPartition& p, double tol) {
  const Matrix q = p.normalized_characteristic();
  const Matrix r = q * q.transpose();
  const Matrix& a = x.weights();
  return (a * r - r * a).cwiseAbs().maxCoeff() <= tol;
}

Matrix quotient(const Graph& x, const VertexPartition& p, double tol) {
  if (!is_equitable(x, p, tol)) throw InvalidArgument("partition is not equitable");
  const Matrix q = p.normalized_characteristic();
  return q.transpose() * x.weights() * q;
}

Matrix quotient_counts(const Graph& x, const VertexPartition& p, double tol) {
  if (!is_equitable(x, p, tol)) throw InvalidArgument("partition is not equitable");
  Matrix b = Matrix::Zero(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) {
    const int v = p.cell(i).front();
    for (int y = 0; y < x.order(); ++y) b(i, p.cell_of(y)) += x.weights()(v, y);
  }
  return b;
}

bool is_distance_regular(const Graph& x) {
  if (!x.is_regular() || !x.is_connected()) return false;
  for (int u = 0; u < x.order(); ++u) {
    if (!is_equitable(x, distance_partition(x, u))) return false;
  }
  return true;
}

VertexPartition orbit_partition(int n, const std::vector<std::vector<int>>& perms) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& p : perms) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v);
      const int b = find(p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = find(v);
  return VertexPartition::from_labels(labels);
}

}  // namespace qws
