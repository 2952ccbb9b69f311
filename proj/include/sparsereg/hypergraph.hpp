#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "sparsereg/graph.hpp"

namespace sparsereg {

// r-uniform hypergraph on vertices 0..n-1. Edges are stored sorted.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws std::invalid_argument unless every edge has exactly r distinct
  // in-range vertices and no edge repeats.
  Hypergraph(std::size_t n, std::size_t r, std::vector<std::vector<int>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t uniformity() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& edge(std::size_t i) const { return edges_[i]; }
  // Indices of the edges containing v.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  std::size_t degree(int v) const { return incident_[v].size(); }

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incident_;
};

// Berge cycle v_1, e_1, ..., v_k, e_k with v_i, v_{i+1} in e_i (indices mod k).
struct BergeCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::size_t length() const { return edges.size(); }
};

void to_json(nlohmann::json& j, const BergeCycle& c);

// A shortest Berge cycle of length at most g, if any. g must lie in [2, 5].
std::optional<BergeCycle> berge_girth_leq(const Hypergraph& h, std::size_t g);

// Indices of e edges spanning at most v vertices, if such a set exists.
// e must lie in [1, 5].
std::optional<std::vector<int>> has_configuration(const Hypergraph& h, std::size_t v, std::size_t e);

struct PeelResult {
  Hypergraph remainder;
  std::size_t deleted_edges = 0;
  // Vertices in the order they were removed, with their degree at removal.
  std::vector<int> order;
  std::vector<std::size_t> degrees;
};

// Removes a vertex of least degree while that degree is at most t, together
// with its edges. The remainder keeps the vertex ids of h.
PeelResult peel_min_degree(const Hypergraph& h, std::size_t t = 4);

struct ShadowResult {
  Graph shadow;
  bool linear = false;
};

// Underlying graph of a 3-graph and whether any two triples share at most one
// vertex. Throws std::invalid_argument for other uniformities.
ShadowResult shadow_and_linearity(const Hypergraph& h);

// 3-graph whose edges are the given triangles.
Hypergraph triangles_to_hypergraph(std::size_t n, const std::vector<std::array<Vertex, 3>>& triangles);

// Each edge of an r-graph replaced by its first three vertices.
Hypergraph restrict_to_triples(const Hypergraph& h);

struct MinDegreeAudit {
  std::size_t min_degree = 0;
  std::size_t edges = 0;
  double bound = 0.0;  // d^3/2 - d^2/2
  bool holds = false;  // edges > bound
};

// Throws PreconditionError (naming a witness) when g contains a 4-cycle, or
// when g has no edges, where the strict bound reads 0 > 0.
MinDegreeAudit c4free_min_degree_audit(const Graph& g);

// Visits every labelled C4-free graph on n <= 16 vertices, given as
// neighbourhood bitmasks. Vertices are added one at a time; a neighbourhood
// is admissible when no two of its members already share a neighbour.
void for_each_c4free_graph(std::size_t n,
                           const std::function<void(const std::vector<std::uint32_t>&)>& visit);

Graph graph_from_masks(const std::vector<std::uint32_t>& adjacency);

}  // namespace sparsereg
