#include "qws/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "qws/error.hpp"

namespace qws {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

long long parse_int(std::string_view s, const char* what) {
  long long v = 0;
  const auto t = trim(s);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    throw ParseError(std::string("bad ") + what + ": '" + t + "'");
  }
  return v;
}

double parse_real(std::string_view s, const char* what) {
  const auto t = trim(s);
  double v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    throw ParseError(std::string("bad ") + what + ": '" + t + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Graph parse() {
    Graph g = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool digit_next() {
    skip();
    return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-');
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string number_token() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  int integer() { return static_cast<int>(parse_int(number_token(), "integer")); }

  // Comma-separated numeric tokens; a comma followed by a non-digit belongs
  // to the enclosing argument list.
  std::vector<std::string> number_list() {
    std::vector<std::string> out{number_token()};
    while (true) {
      const std::size_t save = pos_;
      if (!peek(',')) break;
      ++pos_;
      if (!digit_next()) {
        pos_ = save;
        break;
      }
      out.push_back(number_token());
    }
    return out;
  }

  // `key=value;key=value` for cubelike and circulant specs.
  std::string spec_params() {
    std::string text;
    while (true) {
      const std::string key = ident();
      expect('=');
      const auto values = digit_next() ? number_list() : std::vector<std::string>{};
      text += key + "=";
      for (std::size_t i = 0; i < values.size(); ++i) text += (i ? "," : "") + values[i];
      if (!peek(';')) break;
      ++pos_;
      text += ";";
    }
    return text;
  }

  Graph expr() {
    const std::string name = ident();
    if (peek('(')) {
      ++pos_;
      std::vector<Graph> graphs;
      std::vector<int> ints;
      std::vector<char> kinds;
      while (true) {
        if (digit_next()) {
          ints.push_back(integer());
          kinds.push_back('i');
        } else {
          graphs.push_back(expr());
          kinds.push_back('g');
        }
        if (peek(',')) {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      return apply(name, graphs, ints, std::string(kinds.begin(), kinds.end()));
    }
    if (peek(':')) {
      ++pos_;
      if (name == "cubelike") return cubelike_graph(parse_cubelike_spec(spec_params()));
      if (name == "circulant") return circulant_graph(parse_circulant_spec(spec_params()));
      if (name == "file") {
        skip();
        std::size_t end = pos_;
        while (end < s_.size() && s_[end] != ',' && s_[end] != ')') ++end;
        const std::string path = trim(s_.substr(pos_, end - pos_));
        pos_ = end;
        return read_graph_file(path);
      }
      std::vector<int> params;
      for (const auto& t : number_list()) params.push_back(static_cast<int>(parse_int(t, "parameter")));
      return named(name, params);
    }
    return named(name, {});
  }

  Graph named(const std::string& name, const std::vector<int>& params) {
    try {
      return build_named(name, params);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }

  Graph apply(const std::string& f, const std::vector<Graph>& g, const std::vector<int>& n, const std::string& kinds) {
    try {
      if (kinds == "gg") {
        if (f == "join") return join(g[0], g[1]);
        if (f == "cartesian") return cartesian_product(g[0], g[1]);
        if (f == "direct") return direct_product(g[0], g[1]);
        if (f == "union") return disjoint_union(g[0], g[1]);
      }
      if (kinds == "g") {
        if (f == "complement") return complement(g[0]);
        if (f == "bipcomp") return bipartite_complement(g[0]);
      }
      if (f == "copies" && kinds == "ig") return copies(g[0], n[0]);
      // Count first, as in copies: `power(A,d)` would be ambiguous after `kind:p,q`.
      if (f == "power" && kinds == "ig") return cartesian_power(g[0], n[0]);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    fail("unknown operation '" + f + "' for these arguments");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  std::string loops;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(std::string_view(t).substr(1));
      if (body.rfind("loops:", 0) == 0) loops = body.substr(6);
      continue;
    }
    lines.push_back(t);
  }
  if (lines.empty()) throw ParseError("graph file is empty");
  std::istringstream header(lines[0]);
  long long n = -1, m = -1;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra)) throw ParseError("first line must be `n m`");
  if (n < 1 || n > 100000 || m < 0) throw ParseError("invalid vertex or edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  }
  Matrix w = Matrix::Zero(n, n);
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 1; i <= m; ++i) {
    std::istringstream row(lines[i]);
    std::vector<std::string> tok;
    for (std::string t; row >> t;) tok.push_back(t);
    if (tok.size() != 2 && tok.size() != 3) throw ParseError("edge line must be `u v [w]`: " + lines[i]);
    const long long u = parse_int(tok[0], "vertex"), v = parse_int(tok[1], "vertex");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range: " + lines[i]);
    if (u == v) throw ParseError("loops belong on the `# loops:` line: " + lines[i]);
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError("repeated edge: " + lines[i]);
    const double wt = tok.size() == 3 ? parse_real(tok[2], "weight") : 1.0;
    if (!std::isfinite(wt)) throw ParseError("weight must be finite");
    w(u, v) = w(v, u) = wt;
  }
  if (!loops.empty()) {
    std::istringstream row(loops);
    std::vector<std::string> tok;
    for (std::string t; row >> t;) tok.push_back(t);
    if (tok.size() % 2) throw ParseError("loops line needs `u w` pairs");
    for (std::size_t i = 0; i < tok.size(); i += 2) {
      const long long u = parse_int(tok[i], "vertex");
      if (u < 0 || u >= n) throw ParseError("loop vertex out of range");
      w(u, u) = parse_real(tok[i + 1], "weight");
    }
  }
  return Graph(w, "file");
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  Graph g = read_graph(in);
  g.set_tag("file:" + path);
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  const int n = g.order();
  std::vector<std::string> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double w = g.weight(u, v);
      if (w == 0.0) continue;
      std::string line = std::to_string(u) + " " + std::to_string(v);
      if (w != 1.0) line += " " + format_double(w);
      edges.push_back(line);
    }
  out << n << " " << edges.size() << "\n";
  for (const auto& e : edges) out << e << "\n";
  std::string loops;
  for (int u = 0; u < n; ++u)
    if (g.weight(u, u) != 0.0) loops += " " + std::to_string(u) + " " + format_double(g.weight(u, u));
  if (!loops.empty()) out << "# loops:" << loops << "\n";
}

Graph parse_graph_expr(std::string_view expr) {
  const std::string t = trim(expr);
  if (t.empty()) throw ParseError("empty graph expression");
  return ExprParser(t).parse();
}

CubelikeSpec parse_cubelike_spec(std::string_view params) {
  CubelikeSpec spec;
  std::vector<std::string> words;
  bool have_d = false;
  for (const auto& part : split(params, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("cubelike parameter needs key=value: " + part);
    const std::string key = trim(std::string_view(part).substr(0, eq));
    const std::string value = part.substr(eq + 1);
    if (key == "d") {
      spec.d = static_cast<int>(parse_int(value, "dimension"));
      have_d = true;
    } else if (key == "C") {
      words = split(value, ',');
    } else {
      throw ParseError("unknown cubelike parameter " + key);
    }
  }
  if (!have_d) throw ParseError("cubelike spec needs d");
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != spec.d) throw ParseError("cubelike element '" + w + "' must have d bits");
    std::uint32_t x = 0;
    for (int i = 0; i < spec.d; ++i) {
      if (w[i] != '0' && w[i] != '1') throw ParseError("cubelike element '" + w + "' is not a bit string");
      if (w[i] == '1') x |= 1u << i;
    }
    spec.c.push_back(x);
  }
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

CirculantSpec parse_circulant_spec(std::string_view params) {
  CirculantSpec spec;
  bool have_n = false;
  for (const auto& part : split(params, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("circulant parameter needs key=value: " + part);
    const std::string key = trim(std::string_view(part).substr(0, eq));
    const std::string value = part.substr(eq + 1);
    if (key == "n") {
      spec.n = static_cast<int>(parse_int(value, "order"));
      have_n = true;
    } else if (key == "C") {
      if (!trim(value).empty())
        for (const auto& x : split(value, ',')) spec.c.push_back(static_cast<int>(parse_int(x, "element")));
    } else {
      throw ParseError("unknown circulant parameter " + key);
    }
  }
  if (!have_n) throw ParseError("circulant spec needs n");
  try {
    spec.normalize();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw NumericError("cannot format number");
  return std::string(buf, p);
}

}  // namespace qws
