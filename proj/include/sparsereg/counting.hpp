#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sparsereg/common.hpp"
#include "sparsereg/graph.hpp"
#include "sparsereg/kernel.hpp"
#include "sparsereg/partition.hpp"

#include <json.hpp>

namespace sparsereg {

enum class CountMethod { Enumeration, Formula, Trace };

std::string to_string(CountMethod m);

struct CountReport {
  std::string pattern;
  BigInt count = 0;               // exact count for graph patterns
  std::optional<double> density;  // set instead of count for kernel densities
  CountMethod method = CountMethod::Enumeration;
};

void to_json(nlohmann::json& j, const CountReport& r);

// --- copy counts -----------------------------------------------------------

std::uint64_t count_triangles(const Graph& g);
// (1/2) sum over vertex pairs of C(codeg, 2).
std::uint64_t count_c4_formula(const Graph& g);
std::uint64_t count_c4_enumeration(const Graph& g);
// Paths anchored at the least vertex of each cycle.
std::uint64_t count_c5_enumeration(const Graph& g);

// Number of unlabelled k-cycles, k in {3, 4, 5}. With cross_check the
// independent routes (trace for C3, enumeration for C4) are also run and a
// disagreement throws std::logic_error. Other k throw std::invalid_argument.
CountReport count_cycles(const Graph& g, int k, bool cross_check = false);

// Calls visit(cycle) for every unlabelled 5-cycle, vertices in cyclic order.
void for_each_c5(const Graph& g, const std::function<void(const std::array<Vertex, 5>&)>& visit);
void for_each_c4(const Graph& g, const std::function<void(const std::array<Vertex, 4>&)>& visit);

// Per-edge cycle participation, indexed by edge id.
std::vector<std::uint64_t> triangles_per_edge(const Graph& g);
std::vector<std::uint64_t> c5_per_edge(const Graph& g);

// Common neighbours of u and v.
std::size_t codegree(const Graph& g, Vertex u, Vertex v);

// --- homomorphisms -----------------------------------------------------------

// hom(C_k, G) = tr(A^k), exact; switches to arbitrary precision on overflow.
BigInt hom_cycle(const Graph& g, int k);

enum class Pattern { C3, C4, C5, K22 };

std::string to_string(Pattern p);
Pattern parse_pattern(const std::string& name);

// t(H, f) as the exact weighted sum over all vertex maps of H.
double hom_density(Pattern h, const Kernel& f);
// t(K_{2,2}, f) for a bipartite kernel.
double hom_density_k22(const BipartiteKernel& f);

// --- kernel algebra ---------------------------------------------------------

// (a o b)(x, z) = E_y a(x, y) b(y, z), the expectation over `middle`.
Matrix compose_values(const Matrix& a, const ProbabilitySpace& middle, const Matrix& b);

// Throws std::invalid_argument when f12's right space differs from f23's left.
BipartiteKernel compose(const BipartiteKernel& f12, const BipartiteKernel& f23);
double l2sq(const BipartiteKernel& h);
double l2sq(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& h);
// Entries above a are set to zero.
BipartiteKernel truncate_above(const BipartiteKernel& h, double a);
Matrix truncate_above(const Matrix& h, double a);

// --- structured counts ----------------------------------------------------

// 5-cycles (v_0, ..., v_4) whose r-th vertex carries sublabel r. Throws
// PreconditionError when the graph has no sublabels.
std::uint64_t count_c5_layered(const LayeredGraph& g);

struct HouseCount {
  std::uint64_t total = 0;
  std::uint64_t extending = 0;
};

// Counts 4-cycles and those having an outside vertex adjacent to both ends
// of one of the cycle's edges.
HouseCount house_c4_count(const Graph& g);

struct TriangleDecomposition {
  std::vector<std::array<Vertex, 3>> triangles;
  Graph union_graph;
};

// Maximal (not maximum) family of edge-disjoint triangles, scanning
// triangles in a seeded random order.
TriangleDecomposition greedy_triangle_decomposition(const Graph& g, std::uint64_t seed = kDefaultSeed);

}  // namespace sparsereg
