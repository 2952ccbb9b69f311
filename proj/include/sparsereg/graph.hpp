#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sparsereg {

using Vertex = std::int32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Throws std::invalid_argument on loops, repeated edges or out-of-range
  // endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Edges in lexicographic order; edge ids index into this list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;

  // Index of {u, v} in edges(), or -1.
  std::int64_t edge_id(Vertex u, Vertex v) const;

  // Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const std::int64_t> incident_edge_ids(Vertex v) const {
    return {adjacency_ids_.data() + offsets_[v], adjacency_ids_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::size_t min_degree() const;

  // Copy of this graph without the listed edges (absent edges are ignored).
  Graph without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  // Dense bit adjacency is kept below this size; larger graphs fall back to
  // binary search in the sorted neighbour lists.
  static constexpr std::size_t kDenseLimit = 4096;

  void build();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::int64_t> adjacency_ids_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph house_graph();

}  // namespace sparsereg
