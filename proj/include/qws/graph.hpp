#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qws {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Which symmetric matrix drives the walk.
enum class Hamiltonian { kAdjacency, kLaplacian };

std::string_view to_string(Hamiltonian h);
Hamiltonian parse_hamiltonian(std::string_view name);

// A finite undirected graph given by a symmetric real weight matrix.
// Off-diagonal entries are edge weights (0 = no edge); the diagonal holds
// loop weights. Simple graphs have 0/1 entries and a zero diagonal.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument unless `weights` is square, non-empty and
  // exactly symmetric.
  explicit Graph(Matrix weights, std::string tag = {});

  static Graph empty(int n);

  int order() const { return static_cast<int>(w_.rows()); }
  const Matrix& weights() const { return w_; }
  Vector loops() const { return w_.diagonal(); }
  const std::string& tag() const { return tag_; }
  void set_tag(std::string tag) { tag_ = std::move(tag); }

  bool adjacent(int u, int v) const { return u != v && w_(u, v) != 0.0; }
  double weight(int u, int v) const { return w_(u, v); }
  std::vector<int> neighbors(int u) const;

  // Unweighted degree on the support.
  int degree(int u) const;
  // Sum of off-diagonal weights in row u.
  double weighted_degree(int u) const;
  int edge_count() const;

  bool is_simple() const;
  bool has_integer_weights() const;
  // Common weighted degree when every row sum (loops excluded) agrees.
  std::optional<double> regular_degree() const;
  bool is_regular() const { return regular_degree().has_value(); }

  // BFS distances on the support; -1 marks unreachable vertices.
  std::vector<int> distances_from(int u) const;
  std::vector<std::vector<int>> distance_matrix() const;
  std::vector<int> component_of(int u) const;
  bool is_connected() const;

  // Two-colouring by BFS (lowest vertex of each component gets colour 0);
  // nullopt when an odd cycle exists.
  std::optional<std::vector<int>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.w_ == b.w_; }

 private:
  Matrix w_;
  std::string tag_;
};

// Matrix the walk exponentiates: W itself, or D - W with D the diagonal of
// off-diagonal row sums.
Matrix hamiltonian_matrix(const Graph& g, Hamiltonian h);

// Named constructors.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph hypercube_graph(int d);
// The folded k-cube: Q_{k-1} with each vertex joined to its antipode.
// folded(2) = K2, folded(3) = K4, folded(5) = Clebsch graph.
Graph folded_cube_graph(int k);
// K_{2n} minus a perfect matching {2i, 2i+1}.
Graph cocktail_party_graph(int n);
Graph petersen_graph();

// Builds kind/params combinations accepted by the CLI DSL (`path:4` etc.).
Graph build_named(std::string_view kind, const std::vector<int>& params);

// Vertex (x, y) has index x * |V(Y)| + y in both products.
Graph cartesian_product(const Graph& x, const Graph& y);
Graph cartesian_power(const Graph& x, int d);
Graph direct_product(const Graph& x, const Graph& y);
Graph join(const Graph& x, const Graph& y);
Graph disjoint_union(const Graph& x, const Graph& y);
Graph copies(const Graph& x, int count);
Graph complement(const Graph& x);
// Edges of K_{A,B} missing from X, for the colour classes A = {c == 0} and
// B = {c == 1}. Throws InvalidArgument when `colours` is not a proper
// two-colouring of X.
Graph bipartite_complement(const Graph& x, const std::vector<int>& colours);
Graph bipartite_complement(const Graph& x);
Graph induced_subgraph(const Graph& x, const std::vector<int>& vertices);

}  // namespace qws
