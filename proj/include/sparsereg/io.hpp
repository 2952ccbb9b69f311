#pragma once

#include <iosfwd>
#include <string>

#include "sparsereg/arithmetic.hpp"
#include "sparsereg/graph.hpp"
#include "sparsereg/hypergraph.hpp"

namespace sparsereg {

// Edge list: header "n m", then m lines "u v". Malformed input raises
// ParseError naming the offending line.
Graph parse_graph(std::istream& in);
Graph read_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph(const std::string& path, const Graph& g);

// Header "n m r", then m lines of r vertex ids.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph read_hypergraph(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// One integer per line. The ambient bound n is the largest element unless
// given explicitly.
IntegerSet parse_integer_set(std::istream& in, long long n = 0);
IntegerSet read_integer_set(const std::string& path, long long n = 0);
void write_integer_set(std::ostream& out, const IntegerSet& s);

}  // namespace sparsereg
