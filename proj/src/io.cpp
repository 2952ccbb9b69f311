#include "sparsereg/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace sparsereg {

namespace {

// Reads the next non-blank line, tracking 1-based line numbers.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

// Parses exactly `count` integers from a line; anything else is malformed.
std::vector<long long> parse_ints(const std::string& line, std::size_t count, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> values;
  long long v = 0;
  while (ss >> v) values.push_back(v);
  if (!ss.eof()) throw ParseError(line_no, "malformed line");
  if (values.size() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) + " integers, found " +
                                  std::to_string(values.size()));
  }
  return values;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "missing header");
  auto header = parse_ints(line, 2, line_no);
  if (header[0] < 0 || header[1] < 0) throw ParseError(line_no, "negative header value");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "missing edge line");
    auto uv = parse_ints(line, 2, line_no);
    long long u = uv[0], v = uv[1];
    if (u < 0 || v < 0 || u >= header[0] || v >= header[0]) {
      throw ParseError(line_no, "vertex out of range");
    }
    if (u == v) throw ParseError(line_no, "loop");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw ParseError(line_no, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(in, line, line_no)) throw ParseError(line_no, "unexpected extra line");
  return Graph(n, std::move(edges));
}

Graph read_graph(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "missing header");
  auto header = parse_ints(line, 3, line_no);
  if (header[0] < 0 || header[1] < 0 || header[2] < 1) throw ParseError(line_no, "invalid header");
  const auto r = static_cast<std::size_t>(header[2]);
  std::vector<std::vector<int>> edges;
  for (long long i = 0; i < header[1]; ++i) {
    if (!next_line(in, line, line_no)) throw ParseError(line_no + 1, "missing edge line");
    auto ids = parse_ints(line, r, line_no);
    std::vector<int> e;
    for (long long v : ids) {
      if (v < 0 || v >= header[0]) throw ParseError(line_no, "vertex out of range");
      e.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  try {
    return Hypergraph(static_cast<std::size_t>(header[0]), r, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(line_no, ex.what());
  }
}

Hypergraph read_hypergraph(const std::string& path) {
  auto in = open_input(path);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << ' ' << h.uniformity() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

IntegerSet parse_integer_set(std::istream& in, long long n) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<long long> values;
  while (next_line(in, line, line_no)) values.push_back(parse_ints(line, 1, line_no)[0]);
  long long bound = n;
  if (bound == 0) {
    for (long long v : values) bound = std::max(bound, v);
  }
  return IntegerSet(bound, std::move(values));
}

IntegerSet read_integer_set(const std::string& path, long long n) {
  auto in = open_input(path);
  return parse_integer_set(in, n);
}

void write_integer_set(std::ostream& out, const IntegerSet& s) {
  for (long long x : s.elements()) out << x << '\n';
}

}  // namespace sparsereg
