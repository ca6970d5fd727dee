#include "qws/graph.hpp"

#include <cmath>
#include <deque>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qws/error.hpp"

namespace qws {

std::string_view to_string(Hamiltonian h) {
  return h == Hamiltonian::kAdjacency ? "adjacency" : "laplacian";
}

Hamiltonian parse_hamiltonian(std::string_view name) {
  if (name == "adjacency" || name == "A") return Hamiltonian::kAdjacency;
  if (name == "laplacian" || name == "L") return Hamiltonian::kLaplacian;
  throw ParseError("unknown hamiltonian '" + std::string(name) + "'");
}

Graph::Graph(Matrix weights, std::string tag) : w_(std::move(weights)), tag_(std::move(tag)) {
  if (w_.rows() == 0 || w_.rows() != w_.cols()) {
    throw InvalidArgument("graph weight matrix must be square and non-empty");
  }
  if (w_ != w_.transpose()) {
    throw InvalidArgument("graph weight matrix must be symmetric");
  }
  if (!w_.allFinite()) throw InvalidArgument("graph weights must be finite");
}

Graph Graph::empty(int n) { return empty_graph(n); }

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v) {
    if (adjacent(u, v)) out.push_back(v);
  }
  return out;
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).size()); }

double Graph::weighted_degree(int u) const { return w_.row(u).sum() - w_(u, u); }

int Graph::edge_count() const {
  int count = 0;
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) count += adjacent(u, v) ? 1 : 0;
  }
  return count;
}

bool Graph::is_simple() const {
  for (int u = 0; u < order(); ++u) {
    if (w_(u, u) != 0.0) return false;
    for (int v = 0; v < order(); ++v) {
      if (w_(u, v) != 0.0 && w_(u, v) != 1.0) return false;
    }
  }
  return true;
}

bool Graph::has_integer_weights() const {
  for (Eigen::Index i = 0; i < w_.size(); ++i) {
    const double x = w_.data()[i];
    if (x != std::round(x) || std::abs(x) > 1e15) return false;
  }
  return true;
}

std::optional<double> Graph::regular_degree() const {
  const double k = weighted_degree(0);
  for (int u = 1; u < order(); ++u) {
    if (std::abs(weighted_degree(u) - k) > 1e-12 * (1.0 + std::abs(k))) return std::nullopt;
  }
  return k;
}

std::vector<int> Graph::distances_from(int u) const {
  std::vector<int> dist(order(), -1);
  std::deque<int> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < order(); ++y) {
      if (adjacent(x, y) && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> Graph::distance_matrix() const {
  std::vector<std::vector<int>> d;
  d.reserve(order());
  for (int u = 0; u < order(); ++u) d.push_back(distances_from(u));
  return d;
}

std::vector<int> Graph::component_of(int u) const {
  std::vector<int> out;
  const auto dist = distances_from(u);
  for (int v = 0; v < order(); ++v) {
    if (dist[v] >= 0) out.push_back(v);
  }
  return out;
}

bool Graph::is_connected() const { return static_cast<int>(component_of(0).size()) == order(); }

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> colour(order(), -1);
  for (int s = 0; s < order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (w_(x, x) != 0.0) return std::nullopt;
      for (int y = 0; y < order(); ++y) {
        if (!adjacent(x, y)) continue;
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Matrix hamiltonian_matrix(const Graph& g, Hamiltonian h) {
  if (h == Hamiltonian::kAdjacency) return g.weights();
  Matrix off = g.weights();
  off.diagonal().setZero();
  Matrix lap = -off;
  for (int u = 0; u < g.order(); ++u) lap(u, u) = off.row(u).sum();
  return lap;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void add_edge(Matrix& w, int u, int v, double weight = 1.0) {
  w(u, v) = weight;
  w(v, u) = weight;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) add_edge(w, i, i + 1);
  return Graph(w, "path:" + std::to_string(n));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) add_edge(w, i, (i + 1) % n);
  return Graph(w, "cycle:" + std::to_string(n));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Matrix w = Matrix::Ones(n, n);
  w.diagonal().setZero();
  return Graph(w, "complete:" + std::to_string(n));
}

Graph empty_graph(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  return Graph(Matrix::Zero(n, n), "empty:" + std::to_string(n));
}

Graph complete_bipartite_graph(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
  Matrix w = Matrix::Zero(m + n, m + n);
  w.topRightCorner(m, n).setOnes();
  w.bottomLeftCorner(n, m).setOnes();
  return Graph(w, "bipartite:" + std::to_string(m) + "," + std::to_string(n));
}

Graph hypercube_graph(int d) {
  require(d >= 1 && d <= 12, "cube needs 1 <= d <= 12");
  const int n = 1 << d;
  Matrix w = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < d; ++b) w(x, x ^ (1 << b)) = 1.0;
  }
  return Graph(w, "cube:" + std::to_string(d));
}

Graph folded_cube_graph(int k) {
  require(k >= 2 && k <= 13, "folded cube needs 2 <= k <= 13");
  const int d = k - 1;
  const int n = 1 << d;
  Matrix w = hypercube_graph(d).weights();
  for (int x = 0; x < n; ++x) w(x, x ^ (n - 1)) = 1.0;
  return Graph(w, "folded:" + std::to_string(k));
}

Graph cocktail_party_graph(int n) {
  require(n >= 1, "cocktail party graph needs n >= 1");
  Matrix w = complete_graph(2 * n).weights();
  for (int i = 0; i < n; ++i) add_edge(w, 2 * i, 2 * i + 1, 0.0);
  return Graph(w, "cocktail:" + std::to_string(n));
}

Graph petersen_graph() {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<int> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.push_back((1 << a) | (1 << b));
  }
  Matrix w = Matrix::Zero(10, 10);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      if ((subsets[i] & subsets[j]) == 0) w(i, j) = 1.0;
    }
  }
  return Graph(w, "petersen");
}

Graph build_named(std::string_view kind, const std::vector<int>& params) {
  auto arg = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidArgument(std::string(kind) + " expects " + std::to_string(count) +
                            " parameter(s)");
    }
  };
  if (kind == "path") return arg(1), path_graph(params[0]);
  if (kind == "cycle") return arg(1), cycle_graph(params[0]);
  if (kind == "complete") return arg(1), complete_graph(params[0]);
  if (kind == "empty") return arg(1), empty_graph(params[0]);
  if (kind == "cube") return arg(1), hypercube_graph(params[0]);
  if (kind == "folded") return arg(1), folded_cube_graph(params[0]);
  if (kind == "cocktail") return arg(1), cocktail_party_graph(params[0]);
  if (kind == "bipartite") return arg(2), complete_bipartite_graph(params[0], params[1]);
  if (kind == "petersen") return arg(0), petersen_graph();
  throw InvalidArgument("unknown graph kind '" + std::string(kind) + "'");
}

namespace {

std::string compose_tag(const char* op, const Graph& x, const Graph& y) {
  return std::string(op) + "(" + x.tag() + "," + y.tag() + ")";
}

}  // namespace

Graph cartesian_product(const Graph& x, const Graph& y) {
  const int m = x.order();
  const int n = y.order();
  Matrix w = Eigen::kroneckerProduct(x.weights(), Matrix::Identity(n, n));
  w += Eigen::kroneckerProduct(Matrix::Identity(m, m), y.weights());
  return Graph(w, compose_tag("cartesian", x, y));
}

Graph cartesian_power(const Graph& x, int d) {
  require(d >= 1, "cartesian power needs d >= 1");
  Graph out = x;
  for (int i = 1; i < d; ++i) out = cartesian_product(out, x);
  out.set_tag("power(" + std::to_string(d) + "," + x.tag() + ")");
  return out;
}

Graph direct_product(const Graph& x, const Graph& y) {
  return Graph(Eigen::kroneckerProduct(x.weights(), y.weights()), compose_tag("direct", x, y));
}

Graph join(const Graph& x, const Graph& y) {
  const int m = x.order();
  const int n = y.order();
  Matrix w = Matrix::Zero(m + n, m + n);
  w.topLeftCorner(m, m) = x.weights();
  w.bottomRightCorner(n, n) = y.weights();
  w.topRightCorner(m, n).setOnes();
  w.bottomLeftCorner(n, m).setOnes();
  return Graph(w, compose_tag("join", x, y));
}

Graph disjoint_union(const Graph& x, const Graph& y) {
  const int m = x.order();
  const int n = y.order();
  Matrix w = Matrix::Zero(m + n, m + n);
  w.topLeftCorner(m, m) = x.weights();
  w.bottomRightCorner(n, n) = y.weights();
  return Graph(w, compose_tag("union", x, y));
}

Graph copies(const Graph& x, int count) {
  require(count >= 1, "copies needs count >= 1");
  const int n = x.order();
  Matrix w = Matrix::Zero(n * count, n * count);
  for (int i = 0; i < count; ++i) w.block(i * n, i * n, n, n) = x.weights();
  return Graph(w, "copies(" + std::to_string(count) + "," + x.tag() + ")");
}

Graph complement(const Graph& x) {
  require(x.is_simple(), "complement is defined for simple graphs");
  Matrix w = Matrix::Ones(x.order(), x.order()) - x.weights();
  w.diagonal().setZero();
  return Graph(w, "complement(" + x.tag() + ")");
}

Graph bipartite_complement(const Graph& x, const std::vector<int>& colours) {
  require(x.is_simple(), "bipartite complement is defined for simple graphs");
  require(static_cast<int>(colours.size()) == x.order(), "colouring has wrong length");
  const int n = x.order();
  for (int u = 0; u < n; ++u) {
    require(colours[u] == 0 || colours[u] == 1, "colours must be 0 or 1");
    for (int v = 0; v < n; ++v) {
      require(!x.adjacent(u, v) || colours[u] != colours[v], "colouring is not proper");
    }
  }
  Matrix w = Matrix::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (colours[u] != colours[v] && !x.adjacent(u, v)) w(u, v) = 1.0;
    }
  }
  return Graph(w, "bipcomp(" + x.tag() + ")");
}

Graph bipartite_complement(const Graph& x) {
  const auto colours = x.bipartition();
  require(colours.has_value(), "graph is not bipartite");
  return bipartite_complement(x, *colours);
}

Graph induced_subgraph(const Graph& x, const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  require(k >= 1, "induced subgraph needs at least one vertex");
  Matrix w(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) w(i, j) = x.weights()(vertices[i], vertices[j]);
  }
  return Graph(w, "induced(" + x.tag() + ")");
}

}  // namespace qws
