#include <gtest/gtest.h>

#include "qws/automorphism.hpp"
#include "qws/error.hpp"
#include "qws/graph.hpp"

using namespace qws;

TEST(Graph, RejectsAsymmetricAndEmpty) {
  Matrix w(2, 2);
  w << 0, 1, 0, 0;
  EXPECT_THROW(Graph{w}, InvalidArgument);
  EXPECT_THROW(Graph{Matrix(0, 0)}, InvalidArgument);
  EXPECT_THROW(Graph{Matrix::Zero(2, 3)}, InvalidArgument);
}

TEST(Graph, PathTwoIsK2) {
  Matrix want(2, 2);
  want << 0, 1, 1, 0;
  EXPECT_EQ(path_graph(2).weights(), want);
  EXPECT_EQ(path_graph(2), complete_graph(2));
}

TEST(Graph, BasicQueries) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(p4.edge_count(), 3);
  EXPECT_EQ(p4.degree(0), 1);
  EXPECT_EQ(p4.degree(1), 2);
  EXPECT_TRUE(p4.is_connected());
  EXPECT_TRUE(p4.is_bipartite());
  EXPECT_FALSE(p4.is_regular());
  EXPECT_EQ(p4.distances_from(0), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(cycle_graph(5).is_bipartite());
  EXPECT_EQ(cycle_graph(5).regular_degree(), 2.0);
}

TEST(Graph, CubeTwoIsFourCycle) { EXPECT_TRUE(are_isomorphic(hypercube_graph(2), cycle_graph(4))); }

TEST(Graph, CubeIsCartesianPowerOfK2) {
  for (int d = 1; d <= 4; ++d) EXPECT_TRUE(are_isomorphic(hypercube_graph(d), cartesian_power(complete_graph(2), d)));
}

TEST(Graph, FoldedCubes) {
  // Indexing: folded(k) is Q_{k-1} plus antipodal edges.
  EXPECT_TRUE(are_isomorphic(folded_cube_graph(2), complete_graph(2)));
  EXPECT_TRUE(are_isomorphic(folded_cube_graph(3), complete_graph(4)));
  const Graph clebsch = folded_cube_graph(5);
  EXPECT_EQ(clebsch.order(), 16);
  EXPECT_EQ(clebsch.regular_degree(), 5.0);
}

TEST(Graph, CartesianProducts) {
  EXPECT_TRUE(are_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));
  const Graph grid = cartesian_product(path_graph(2), path_graph(3));
  EXPECT_EQ(grid.order(), 6);
  EXPECT_EQ(grid.edge_count(), 7);
}

TEST(Graph, DirectProducts) {
  const Graph k2k2 = direct_product(complete_graph(2), complete_graph(2));
  EXPECT_FALSE(k2k2.is_connected());
  EXPECT_TRUE(are_isomorphic(k2k2, copies(complete_graph(2), 2)));
  EXPECT_TRUE(are_isomorphic(direct_product(complete_graph(2), cycle_graph(3)), cycle_graph(6)));
  const Graph k1 = empty_graph(1);
  EXPECT_EQ(direct_product(petersen_graph(), k1).edge_count(), 0);
}

TEST(Graph, Joins) {
  EXPECT_TRUE(are_isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(join(complete_graph(2), complete_graph(2)), complete_graph(4)));
  const Graph wheel = join(empty_graph(1), cycle_graph(5));
  EXPECT_EQ(wheel.degree(0), 5);
  EXPECT_EQ(wheel.edge_count(), 10);
}

TEST(Graph, Complements) {
  EXPECT_TRUE(are_isomorphic(complement(copies(complete_graph(2), 2)), cycle_graph(4)));
  EXPECT_EQ(complement(empty_graph(5)), complete_graph(5));
  EXPECT_EQ(complement(complement(petersen_graph())), petersen_graph());
}

TEST(Graph, BipartiteComplementOfTwoPaths) {
  const Graph two_p3 = copies(path_graph(3), 2);
  // Ends in one class, middles in the other.
  const Graph b = bipartite_complement(two_p3, {0, 1, 0, 0, 1, 0});
  EXPECT_EQ(b.order(), 6);
  // K_{4,2} has 8 edges, 4 of which are in 2P3.
  EXPECT_EQ(b.edge_count(), 4);
  EXPECT_TRUE(b.is_bipartite());
  EXPECT_THROW(bipartite_complement(two_p3, {0, 0, 0, 0, 1, 0}), InvalidArgument);
}

TEST(Graph, Laplacian) {
  const Matrix l = hamiltonian_matrix(path_graph(3), Hamiltonian::kLaplacian);
  Matrix want(3, 3);
  want << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  EXPECT_EQ(l, want);
  EXPECT_EQ(parse_hamiltonian("laplacian"), Hamiltonian::kLaplacian);
  EXPECT_THROW(parse_hamiltonian("signless"), ParseError);
}

TEST(Graph, NamedConstructorsValidate) {
  EXPECT_THROW(build_named("path", {}), InvalidArgument);
  EXPECT_THROW(build_named("path", {0}), InvalidArgument);
  EXPECT_THROW(build_named("nosuch", {3}), InvalidArgument);
  EXPECT_EQ(build_named("petersen", {}).order(), 10);
  EXPECT_EQ(cocktail_party_graph(3).regular_degree(), 4.0);
}

TEST(Graph, InducedSubgraphAndUnion) {
  const Graph g = disjoint_union(complete_graph(2), empty_graph(1));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.component_of(2), std::vector<int>{2});
  EXPECT_EQ(induced_subgraph(cycle_graph(5), {0, 1, 2}), path_graph(3));
}
