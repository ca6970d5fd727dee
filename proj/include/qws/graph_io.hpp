#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qws/cayley.hpp"
#include "qws/graph.hpp"

namespace qws {

// Text format: `n m`, then m lines `u v [w]` (0-indexed, w defaults to 1),
// optionally `# loops: u w u w ...`. Other `#` lines are comments.
// Throws ParseError.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Constructor expressions: `path:4`, `bipartite:2,3`, `petersen`,
// `cubelike:d=3;C=100,010,001`, `circulant:n=8;C=1,3,5,7`, `join(A,B)`,
// `cartesian(A,B)`, `direct(A,B)`, `union(A,B)`, `complement(A)`,
// `bipcomp(A)`, `copies(n,A)`, `power(d,A)`, `file:path`. Throws ParseError.
Graph parse_graph_expr(std::string_view expr);

// The part after `cubelike:` / `circulant:`.
CubelikeSpec parse_cubelike_spec(std::string_view params);
CirculantSpec parse_circulant_spec(std::string_view params);

// Shortest representation that reads back to the same double.
std::string format_double(double x);

}  // namespace qws
