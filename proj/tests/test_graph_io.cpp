#include <gtest/gtest.h>

#include <sstream>

#include "qws/automorphism.hpp"
#include "qws/error.hpp"
#include "qws/graph_io.hpp"

using namespace qws;

TEST(GraphFile, RoundTrip) {
  Matrix w = Matrix::Zero(3, 3);
  w(0, 1) = w(1, 0) = 2.5;
  w(1, 2) = w(2, 1) = 1;
  w(2, 2) = -0.5;
  const Graph g(w);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  EXPECT_EQ(read_graph(in), g);
}

TEST(GraphFile, Malformed) {
  for (const char* text : {"", "3", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n0 0\n", "3 2\n0 1\n1 0\n", "2 1\n0 x\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_graph(in), ParseError) << text;
  }
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST(GraphFile, CommentsAndLoops) {
  std::istringstream in("# triangle\n3 3\n0 1\n1 2\n0 2\n# loops: 1 2\n");
  const Graph g = read_graph(in);
  EXPECT_EQ(g.weight(1, 1), 2.0);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(Expr, NamedAndComposite) {
  EXPECT_EQ(parse_graph_expr("path:4"), path_graph(4));
  EXPECT_EQ(parse_graph_expr("bipartite:2,3"), complete_bipartite_graph(2, 3));
  EXPECT_EQ(parse_graph_expr("petersen").order(), 10);
  EXPECT_TRUE(are_isomorphic(parse_graph_expr("join(empty:2,empty:2)"), cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(parse_graph_expr("complement(copies(2,complete:2))"), cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(parse_graph_expr("power(3,complete:2)"), hypercube_graph(3)));
  EXPECT_TRUE(are_isomorphic(parse_graph_expr("direct(complete:2,cycle:3)"), cycle_graph(6)));
  EXPECT_EQ(parse_graph_expr("cartesian(path:2, path:3)").edge_count(), 7);
  EXPECT_EQ(parse_graph_expr("union(path:2,path:3)").order(), 5);
  EXPECT_EQ(parse_graph_expr("bipcomp(copies(2,path:3))").edge_count(), 4);
}

TEST(Expr, CayleySpecs) {
  EXPECT_TRUE(are_isomorphic(parse_graph_expr("cubelike:d=3;C=100,010,001"), hypercube_graph(3)));
  EXPECT_EQ(parse_graph_expr("circulant:n=8;C=1,3,5,7").regular_degree(), 4.0);
  const CubelikeSpec s = parse_cubelike_spec("d=3;C=100,011");
  EXPECT_EQ(s.c, (std::vector<std::uint32_t>{1, 6}));
  EXPECT_EQ(parse_circulant_spec("n=6;C=").c.size(), 0u);
  EXPECT_THROW(parse_cubelike_spec("d=3;C=10"), ParseError);
  EXPECT_THROW(parse_circulant_spec("n=6;C=1"), ParseError);
}

TEST(Expr, Errors) {
  for (const char* bad : {"", "path:", "path:0", "join(path:2)", "nosuch:3", "path:3)", "cube:2,", "copies(x,path:2)"})
    EXPECT_THROW(parse_graph_expr(bad), ParseError) << bad;
}

TEST(Doubles, ShortestRoundTrip) {
  for (double x : {0.1, 1.0 / 3, 2.221441469079183, -1e-300, 12345678.9}) EXPECT_EQ(std::stod(format_double(x)), x);
}
