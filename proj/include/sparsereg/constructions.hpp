#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsereg/arithmetic.hpp"
#include "sparsereg/common.hpp"
#include "sparsereg/graph.hpp"
#include "sparsereg/hypergraph.hpp"
#include "sparsereg/partition.hpp"

namespace sparsereg {

// A named structural claim about a construction and whether it was verified.
struct PropertyCheck {
  std::string name;
  bool holds = false;
  nlohmann::json detail;
};

void to_json(nlohmann::json& j, const PropertyCheck& c);

struct ReductionGraph {
  LayeredGraph graph;  // five layers of `modulus` vertices; vertex layer * N + s
  long long modulus = 0;
  std::size_t collisions = 0;  // repeated edges merged while building
};

// Smallest integer above (|a_1| + ... + |a_k|) n that is coprime to every a_i.
long long reduction_modulus(const std::vector<long long>& coefficients, long long n);

// Edges (s, s + a_i x) between layer i and layer i+1 for s in Z/NZ and x in
// sets[i]. Throws std::invalid_argument unless the equation has five
// variables with coefficient sum 0 and the sets lie in [n].
ReductionGraph reduction_graph(const EquationSpec& eq, const std::vector<IntegerSet>& sets, long long n);

struct UniqueC5Graph {
  LayeredGraph graph;
  long long modulus = 0;  // 60 n + 1
  std::vector<std::array<Vertex, 5>> cycles;
};

// One 5-cycle (s, s+x, s+3x, s+6x, s+10x) across the five layers for every
// s mod N and x in X. X is re-verified against c5_construction_constraints()
// and the build is refused with PreconditionError if it fails.
UniqueC5Graph unique_c5_graph(const IntegerSet& x, long long n);

// Exact checks of the claimed properties: C4-free, every edge on exactly one
// 5-cycle, 5 N |X| edges, generated cycles pairwise edge-disjoint.
std::vector<PropertyCheck> check_unique_c5(const UniqueC5Graph& g, std::size_t set_size);

// For a graph with five cyclic layers: 5-cycles through each edge (every
// 5-cycle of such a graph visits the layers in order).
std::vector<std::uint64_t> c5_per_edge_layered(const LayeredGraph& g);

// Vertices F_3^m (base-3 digits), adjacent when they differ in every
// coordinate. Throws std::invalid_argument for m < 1 or m > 12.
Graph tensor_triangle(int m);

// Every triangle of g kept independently with probability keep_prob; the
// result is the union of kept triangles.
Graph sample_triangles(const Graph& g, double keep_prob, std::uint64_t seed = kDefaultSeed);

std::vector<PropertyCheck> check_tensor_triangle(const Graph& g, int m);

// Paths of floor(g/2)+1 edges between hubs 0 and 1, using fresh vertices.
// Throws std::invalid_argument when n admits no path or r, g < 2.
Hypergraph theta_hypergraph(std::size_t r, std::size_t g, std::size_t n);
// floor((n-2) / (L(r-1)-1)) * L with L = floor(g/2)+1.
std::size_t theta_edge_formula(std::size_t r, std::size_t g, std::size_t n);

// Orthogonality graph on the points of the projective plane over Z/qZ, loops
// at absolute points omitted. Throws std::invalid_argument for non-prime q.
Graph polarity_graph(long long q);

std::vector<PropertyCheck> check_polarity(const Graph& g, long long q);

// Erdos-Renyi random graph, pairs drawn in lexicographic order.
Graph gnp(std::size_t n, double p, std::uint64_t seed = kDefaultSeed);

// Expected number of 5-cycles in G(n, p).
double expected_c5_gnp(std::size_t n, double p);

}  // namespace sparsereg
