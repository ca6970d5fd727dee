#include <gtest/gtest.h>

#include "qws/automorphism.hpp"
#include "qws/error.hpp"
#include "qws/graph.hpp"

using namespace qws;

TEST(Automorphism, GroupOrders) {
  EXPECT_EQ(automorphisms(path_graph(5)).size(), 2u);
  EXPECT_EQ(automorphisms(cycle_graph(6)).size(), 12u);
  EXPECT_EQ(automorphisms(petersen_graph()).size(), 120u);
  EXPECT_EQ(automorphisms(hypercube_graph(3)).size(), 48u);
  EXPECT_EQ(automorphisms(complete_graph(4)).size(), 24u);
}

TEST(Automorphism, PathStabilizers) {
  const Graph p5 = path_graph(5);
  EXPECT_EQ(automorphisms_fixing(p5, 2).size(), 2u);
  EXPECT_EQ(automorphisms_fixing(p5, 0).size(), 1u);
  EXPECT_EQ(automorphisms_fixing(p5, 1).size(), 1u);
}

TEST(Automorphism, StabilizerEquality) {
  EXPECT_TRUE(stabilizers_equal(hypercube_graph(3), 0, 7));
  EXPECT_FALSE(stabilizers_equal(hypercube_graph(3), 0, 1));
  EXPECT_TRUE(stabilizers_equal(path_graph(4), 0, 3));
  EXPECT_TRUE(stabilizers_equal(petersen_graph(), 4, 4));
}

TEST(Automorphism, EveryPermutationPreservesWeights) {
  const Graph g = petersen_graph();
  for (const auto& p : automorphisms(g))
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) ASSERT_EQ(g.weight(a, b), g.weight(p[a], p[b]));
}

TEST(Automorphism, Isomorphism) {
  EXPECT_TRUE(are_isomorphic(complete_bipartite_graph(2, 2), cycle_graph(4)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), complete_bipartite_graph(1, 3)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), path_graph(5)));
}

TEST(Automorphism, SizeLimit) { EXPECT_THROW(automorphisms(path_graph(17)), InvalidArgument); }

TEST(Automorphism, GroupCap) { EXPECT_THROW(automorphisms(empty_graph(8), 100), NumericError); }
