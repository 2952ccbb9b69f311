#include "sparsereg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sparsereg {

Graph::Graph(std::size_t n) : n_(n) { build(); }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= n_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  "} out of range for " + std::to_string(n_) + " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + ", " +
                                std::to_string(dup->v) + "}");
  }
  build();
}

void Graph::build() {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.assign(offsets_[n_], 0);
  adjacency_ids_.assign(offsets_[n_], 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so filling in order leaves every list sorted except
  // for the lower endpoints of each vertex; sort pairs afterwards.
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]] = e.v;
    adjacency_ids_[fill[e.u]++] = static_cast<std::int64_t>(id);
    adjacency_[fill[e.v]] = e.u;
    adjacency_ids_[fill[e.v]++] = static_cast<std::int64_t>(id);
  }
  std::vector<std::pair<Vertex, std::int64_t>> scratch;
  for (std::size_t v = 0; v < n_; ++v) {
    scratch.clear();
    for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      scratch.emplace_back(adjacency_[k], adjacency_ids_[k]);
    }
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t k = 0; k < scratch.size(); ++k) {
      adjacency_[offsets_[v] + k] = scratch[k].first;
      adjacency_ids_[offsets_[v] + k] = scratch[k].second;
    }
  }
  bits_.clear();
  words_per_row_ = 0;
  if (n_ <= kDenseLimit) {
    words_per_row_ = (n_ + 63) / 64;
    bits_.assign(n_ * words_per_row_, 0);
    for (const Edge& e : edges_) {
      bits_[e.u * words_per_row_ + e.v / 64] |= 1ULL << (e.v % 64);
      bits_[e.v * words_per_row_ + e.u / 64] |= 1ULL << (e.u % 64);
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
    return false;
  }
  if (!bits_.empty()) return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1ULL;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
    return -1;
  }
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return incident_edge_ids(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = degree(0);
  for (std::size_t v = 1; v < n_; ++v) best = std::min(best, degree(static_cast<Vertex>(v)));
  return best;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<char> drop(edges_.size(), 0);
  for (const Edge& e : removed) {
    const std::int64_t id = edge_id(e.u, e.v);
    if (id >= 0) drop[static_cast<std::size_t>(id)] = 1;
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back(edges_[i]);
  }
  return Graph(n_, std::move(kept));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(Vertex(u), Vertex(v));
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(Vertex(u), Vertex(a + v));
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, std::move(edges));
}

Graph house_graph() {
  // Square 0-1-2-3 with apex 4 over the edge {2, 3}.
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}});
}

}  // namespace sparsereg
