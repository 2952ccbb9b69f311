#include "sparsereg/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "sparsereg/common.hpp"
#include "sparsereg/counting.hpp"

namespace sparsereg {

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<std::vector<int>> edges)
    : n_(n), r_(r), edges_(std::move(edges)), incident_(n) {
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.size() != r) {
      throw std::invalid_argument("hyperedge " + std::to_string(i) + " has " +
                                  std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
    }
    std::sort(e.begin(), e.end());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || static_cast<std::size_t>(e[j]) >= n) {
        throw std::invalid_argument("hyperedge " + std::to_string(i) + " has a vertex out of range");
      }
      if (j > 0 && e[j] == e[j - 1]) {
        throw std::invalid_argument("hyperedge " + std::to_string(i) + " repeats a vertex");
      }
    }
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate hyperedge " + std::to_string(i));
    for (int v : e) incident_[v].push_back(static_cast<int>(i));
  }
}

void to_json(nlohmann::json& j, const BergeCycle& c) {
  nlohmann::json seq = nlohmann::json::array();
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    seq.push_back(c.vertices[i]);
    seq.push_back(c.edges[i]);
  }
  j = nlohmann::json{{"length", c.length()}, {"sequence", seq}};
}

namespace {

std::optional<BergeCycle> two_cycle(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
      std::vector<int> common;
      std::set_intersection(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(), h.edge(j).end(),
                            std::back_inserter(common));
      if (common.size() >= 2) {
        return BergeCycle{{common[0], common[1]}, {static_cast<int>(i), static_cast<int>(j)}};
      }
    }
  }
  return std::nullopt;
}

// Cycles of length k whose least vertex is the start vertex.
class CycleSearch {
 public:
  CycleSearch(const Hypergraph& h, std::size_t k)
      : h_(h), k_(k), used_vertex_(h.vertex_count(), 0), used_edge_(h.edge_count(), 0) {}

  std::optional<BergeCycle> run() {
    for (std::size_t s = 0; s < h_.vertex_count(); ++s) {
      start_ = static_cast<int>(s);
      vertices_ = {start_};
      edges_.clear();
      used_vertex_[s] = 1;
      const bool found = extend(start_);
      used_vertex_[s] = 0;
      if (found) return BergeCycle{vertices_, edges_};
    }
    return std::nullopt;
  }

 private:
  bool extend(int cur) {
    if (edges_.size() + 1 == k_) {
      for (int e : h_.incident(cur)) {
        if (used_edge_[e]) continue;
        const auto& ed = h_.edge(e);
        if (std::binary_search(ed.begin(), ed.end(), start_)) {
          edges_.push_back(e);
          return true;
        }
      }
      return false;
    }
    for (int e : h_.incident(cur)) {
      if (used_edge_[e]) continue;
      used_edge_[e] = 1;
      edges_.push_back(e);
      for (int u : h_.edge(e)) {
        if (u <= start_ || used_vertex_[u]) continue;
        used_vertex_[u] = 1;
        vertices_.push_back(u);
        if (extend(u)) return true;
        vertices_.pop_back();
        used_vertex_[u] = 0;
      }
      edges_.pop_back();
      used_edge_[e] = 0;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t k_;
  int start_ = 0;
  std::vector<char> used_vertex_, used_edge_;
  std::vector<int> vertices_, edges_;
};

}  // namespace

std::optional<BergeCycle> berge_girth_leq(const Hypergraph& h, std::size_t g) {
  if (g < 2 || g > 5) throw std::invalid_argument("girth search supports lengths 2 to 5");
  if (auto c = two_cycle(h)) return c;
  for (std::size_t k = 3; k <= g; ++k) {
    if (auto c = CycleSearch(h, k).run()) return c;
  }
  return std::nullopt;
}

namespace {

bool configuration_dfs(const Hypergraph& h, std::size_t v, std::size_t e, std::size_t next,
                       std::vector<int>& chosen, std::vector<int>& cover, std::size_t covered) {
  if (chosen.size() == e) return true;
  const std::size_t need = e - chosen.size();
  for (std::size_t i = next; i + need <= h.edge_count(); ++i) {
    std::size_t added = 0;
    for (int x : h.edge(i))
      if (cover[x] == 0) ++added;
    if (covered + added > v) continue;
    for (int x : h.edge(i)) ++cover[x];
    chosen.push_back(static_cast<int>(i));
    if (configuration_dfs(h, v, e, i + 1, chosen, cover, covered + added)) return true;
    chosen.pop_back();
    for (int x : h.edge(i)) --cover[x];
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> has_configuration(const Hypergraph& h, std::size_t v, std::size_t e) {
  if (e < 1 || e > 5) throw std::invalid_argument("configuration search supports 1 to 5 edges");
  std::vector<int> chosen;
  std::vector<int> cover(h.vertex_count(), 0);
  if (configuration_dfs(h, v, e, 0, chosen, cover, 0)) return chosen;
  return std::nullopt;
}

PeelResult peel_min_degree(const Hypergraph& h, std::size_t t) {
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = h.degree(static_cast<int>(v));
  std::vector<char> alive_vertex(n, 1), alive_edge(h.edge_count(), 1);
  PeelResult out;
  while (true) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (alive_vertex[v] && (best < 0 || deg[v] < deg[best])) best = static_cast<int>(v);
    if (best < 0 || deg[best] > t) break;
    out.order.push_back(best);
    out.degrees.push_back(deg[best]);
    alive_vertex[best] = 0;
    for (int e : h.incident(best)) {
      if (!alive_edge[e]) continue;
      alive_edge[e] = 0;
      ++out.deleted_edges;
      for (int x : h.edge(e)) --deg[x];
    }
  }
  std::vector<std::vector<int>> kept;
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    if (alive_edge[e]) kept.push_back(h.edge(e));
  out.remainder = Hypergraph(n, h.uniformity(), std::move(kept));
  return out;
}

ShadowResult shadow_and_linearity(const Hypergraph& h) {
  if (h.uniformity() != 3) throw std::invalid_argument("shadow_and_linearity needs a 3-graph");
  std::set<Edge> pairs;
  bool linear = true;
  for (const auto& e : h.edges()) {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      if (!pairs.insert(Edge(e[i], e[j])).second) linear = false;
    }
  }
  return {Graph(h.vertex_count(), std::vector<Edge>(pairs.begin(), pairs.end())), linear};
}

Hypergraph triangles_to_hypergraph(std::size_t n, const std::vector<std::array<Vertex, 3>>& triangles) {
  std::vector<std::vector<int>> edges;
  edges.reserve(triangles.size());
  for (const auto& t : triangles) edges.push_back({t[0], t[1], t[2]});
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph restrict_to_triples(const Hypergraph& h) {
  if (h.uniformity() < 3) throw std::invalid_argument("restrict_to_triples needs uniformity >= 3");
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.edges()) edges.push_back({e[0], e[1], e[2]});
  return Hypergraph(h.vertex_count(), 3, std::move(edges));
}

MinDegreeAudit c4free_min_degree_audit(const Graph& g) {
  if (g.edge_count() == 0) {
    throw PreconditionError("min-degree audit needs at least one edge");
  }
  std::optional<std::array<Vertex, 4>> witness;
  for_each_c4(g, [&](const std::array<Vertex, 4>& c) {
    if (!witness) witness = c;
  });
  if (witness) {
    const auto& c = *witness;
    throw PreconditionError("graph contains the 4-cycle " + std::to_string(c[0]) + "-" +
                            std::to_string(c[1]) + "-" + std::to_string(c[2]) + "-" +
                            std::to_string(c[3]));
  }
  MinDegreeAudit a;
  a.min_degree = g.min_degree();
  a.edges = g.edge_count();
  const double d = static_cast<double>(a.min_degree);
  a.bound = d * d * d / 2.0 - d * d / 2.0;
  a.holds = static_cast<double>(a.edges) > a.bound;
  return a;
}

namespace {

void extend_c4free(std::size_t n, std::vector<std::uint32_t>& adj,
                   const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  const std::size_t k = adj.size();
  if (k == n) {
    visit(adj);
    return;
  }
  for (std::uint32_t s = 0; s < (1U << k); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      if (!(s >> a & 1U)) continue;
      for (std::size_t b = a + 1; b < k; ++b) {
        if ((s >> b & 1U) && (adj[a] & adj[b])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (std::size_t a = 0; a < k; ++a)
      if (s >> a & 1U) adj[a] |= 1U << k;
    adj.push_back(s);
    extend_c4free(n, adj, visit);
    adj.pop_back();
    for (std::size_t a = 0; a < k; ++a)
      if (s >> a & 1U) adj[a] &= ~(1U << k);
  }
}

}  // namespace

void for_each_c4free_graph(std::size_t n,
                           const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (n > 16) throw std::invalid_argument("exhaustive C4-free enumeration supports n <= 16");
  std::vector<std::uint32_t> adj;
  extend_c4free(n, adj, visit);
}

Graph graph_from_masks(const std::vector<std::uint32_t>& adjacency) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < adjacency.size(); ++u)
    for (std::size_t v = u + 1; v < adjacency.size(); ++v)
      if (adjacency[u] >> v & 1U) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(adjacency.size(), std::move(edges));
}

}  // namespace sparsereg
