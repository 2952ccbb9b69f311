#include "sparsereg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sparsereg/counting.hpp"
#include "sparsereg/parallel.hpp"

namespace sparsereg {

void to_json(nlohmann::json& j, const PropertyCheck& c) {
  j = nlohmann::json{{"name", c.name}, {"holds", c.holds}};
  if (!c.detail.is_null()) j["detail"] = c.detail;
}

long long reduction_modulus(const std::vector<long long>& coefficients, long long n) {
  long long total = 0;
  for (long long a : coefficients) total += std::llabs(a);
  for (long long m = total * n + 1;; ++m) {
    bool coprime = true;
    for (long long a : coefficients)
      if (std::gcd(m, std::llabs(a)) != 1) coprime = false;
    if (coprime) return m;
  }
}

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

ReductionGraph reduction_graph(const EquationSpec& eq, const std::vector<IntegerSet>& sets, long long n) {
  eq.validate();
  if (eq.arity() != 5) throw std::invalid_argument("reduction graph needs a five-variable equation");
  if (!eq.translation_invariant()) throw std::invalid_argument("reduction graph needs coefficients summing to 0");
  if (sets.size() != 5) throw std::invalid_argument("reduction graph needs five sets");
  for (const auto& s : sets)
    if (!s.empty() && s.elements().back() > n) throw std::invalid_argument("set element exceeds n");
  ReductionGraph out;
  const long long big_n = reduction_modulus(eq.coefficients, n);
  out.modulus = big_n;
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const long long next = (i + 1) % 5;
    for (long long s = 0; s < big_n; ++s)
      for (long long x : sets[i].elements()) {
        const long long t = mod(s + eq.coefficients[i] * x, big_n);
        edges.emplace_back(static_cast<Vertex>(i * big_n + s), static_cast<Vertex>(next * big_n + t));
      }
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  out.collisions = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  out.graph = LayeredGraph::cyclic(5, static_cast<std::size_t>(big_n), std::move(edges));
  return out;
}

UniqueC5Graph unique_c5_graph(const IntegerSet& x, long long n) {
  if (!x.empty() && x.elements().back() > n) throw std::invalid_argument("set element exceeds n");
  if (!satisfies(x, c5_construction_constraints())) {
    throw PreconditionError("set violates the equation constraints; construction refused");
  }
  UniqueC5Graph out;
  const long long big_n = 60 * n + 1;
  out.modulus = big_n;
  const long long steps[5] = {0, 1, 3, 6, 10};
  std::vector<Edge> edges;
  for (long long s = 0; s < big_n; ++s)
    for (long long v : x.elements()) {
      std::array<Vertex, 5> c{};
      for (int i = 0; i < 5; ++i) c[i] = static_cast<Vertex>(i * big_n + mod(s + steps[i] * v, big_n));
      out.cycles.push_back(c);
      for (int i = 0; i < 5; ++i) edges.emplace_back(c[i], c[(i + 1) % 5]);
    }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::logic_error("generated 5-cycles share an edge");
  }
  out.graph = LayeredGraph::cyclic(5, static_cast<std::size_t>(big_n), std::move(edges));
  return out;
}

std::vector<std::uint64_t> c5_per_edge_layered(const LayeredGraph& lg) {
  if (lg.layer_count() != 5) throw std::invalid_argument("layered 5-cycle count needs five layers");
  const Graph& g = lg.graph();
  std::vector<std::uint64_t> load(g.edge_count(), 0);
  // Cycles are found from their layer-0 vertex walking up the layers; each
  // contributes to five distinct edges, so per-start partial counts merge by
  // addition in a fixed order.
  const std::vector<Vertex> starts = lg.layer(0);
  std::vector<std::vector<std::uint64_t>> partial(thread_count() + 1);
  const std::size_t used = parallel_chunks(starts.size(), [&](std::size_t chunk, std::size_t b, std::size_t e) {
    auto& mine = partial[chunk];
    mine.assign(g.edge_count(), 0);
    for (std::size_t idx = b; idx < e; ++idx) {
      const Vertex v0 = starts[idx];
      for (Vertex v1 : g.neighbors(v0)) {
        if (lg.layer_of(v1) != 1) continue;
        for (Vertex v2 : g.neighbors(v1)) {
          if (lg.layer_of(v2) != 2) continue;
          for (Vertex v3 : g.neighbors(v2)) {
            if (lg.layer_of(v3) != 3) continue;
            for (Vertex v4 : g.neighbors(v3)) {
              if (lg.layer_of(v4) != 4) continue;
              const auto closing = g.edge_id(v4, v0);
              if (closing < 0) continue;
              ++mine[g.edge_id(v0, v1)];
              ++mine[g.edge_id(v1, v2)];
              ++mine[g.edge_id(v2, v3)];
              ++mine[g.edge_id(v3, v4)];
              ++mine[closing];
            }
          }
        }
      }
    }
  });
  for (std::size_t c = 0; c < used; ++c)
    for (std::size_t i = 0; i < load.size(); ++i) load[i] += partial[c][i];
  return load;
}

std::vector<PropertyCheck> check_unique_c5(const UniqueC5Graph& pg, std::size_t set_size) {
  const Graph& g = pg.graph.graph();
  std::vector<PropertyCheck> out;
  const std::uint64_t c4 = count_c4_formula(g);
  out.push_back({"c4_free", c4 == 0, {{"c4", c4}}});
  const auto load = c5_per_edge_layered(pg.graph);
  const bool unique = std::all_of(load.begin(), load.end(), [](std::uint64_t c) { return c == 1; });
  const std::uint64_t total = std::accumulate(load.begin(), load.end(), std::uint64_t{0}) / 5;
  out.push_back({"every_edge_in_one_c5", unique, {{"c5", total}}});
  const std::size_t expected = 5 * static_cast<std::size_t>(pg.modulus) * set_size;
  out.push_back({"edge_count", g.edge_count() == expected, {{"edges", g.edge_count()}, {"expected", expected}}});
  std::set<Edge> seen;
  bool disjoint = true;
  for (const auto& c : pg.cycles)
    for (int i = 0; i < 5; ++i)
      if (!seen.insert(Edge(c[i], c[(i + 1) % 5])).second) disjoint = false;
  out.push_back({"cycles_edge_disjoint", disjoint, nullptr});
  return out;
}

Graph tensor_triangle(int m) {
  if (m < 1 || m > 12) throw std::invalid_argument("tensor power must lie in [1, 12]");
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) n *= 3;
  // Neighbours of u are u + d with every coordinate of d nonzero.
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::size_t v = 0, place = 1, rest = u;
      for (int i = 0; i < m; ++i, place *= 3, rest /= 3) {
        const std::size_t shift = (mask >> i & 1U) ? 2 : 1;
        v += ((rest % 3 + shift) % 3) * place;
      }
      if (u < v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, std::move(edges));
}

Graph sample_triangles(const Graph& g, double keep_prob, std::uint64_t seed) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) throw std::invalid_argument("keep probability must lie in [0, 1]");
  Rng rng(seed);
  std::set<Edge> kept;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.has_edge(u, w)) continue;
        if (uniform01(rng) < keep_prob) kept.insert({Edge(u, v), Edge(v, w), Edge(u, w)});
      }
    }
  return Graph(g.vertex_count(), std::vector<Edge>(kept.begin(), kept.end()));
}

std::vector<PropertyCheck> check_tensor_triangle(const Graph& g, int m) {
  std::vector<PropertyCheck> out;
  BigInt six = 1, eighteen = 1, thirty = 1;
  for (int i = 0; i < m; ++i) {
    six *= 6;
    eighteen *= 18;
    thirty *= 30;
  }
  const BigInt h3 = hom_cycle(g, 3), h4 = hom_cycle(g, 4), h5 = hom_cycle(g, 5);
  out.push_back({"hom_c3", h3 == six, {{"value", h3.str()}, {"expected", six.str()}}});
  out.push_back({"hom_c4", h4 == eighteen, {{"value", h4.str()}, {"expected", eighteen.str()}}});
  out.push_back({"hom_c5", h5 == thirty, {{"value", h5.str()}, {"expected", thirty.str()}}});
  const std::uint64_t t = count_triangles(g);
  const BigInt expected = six / 6;
  out.push_back({"triangles", BigInt(t) == expected, {{"value", t}, {"expected", expected.str()}}});
  const auto per_edge = triangles_per_edge(g);
  out.push_back({"every_edge_in_one_triangle",
                 std::all_of(per_edge.begin(), per_edge.end(), [](std::uint64_t c) { return c == 1; }),
                 nullptr});
  return out;
}

std::size_t theta_edge_formula(std::size_t r, std::size_t g, std::size_t n) {
  const std::size_t len = g / 2 + 1;
  const std::size_t per_path = len * (r - 1) - 1;
  return n < 2 ? 0 : (n - 2) / per_path * len;
}

Hypergraph theta_hypergraph(std::size_t r, std::size_t g, std::size_t n) {
  if (r < 2 || g < 2) throw std::invalid_argument("theta construction needs r >= 2 and g >= 2");
  const std::size_t len = g / 2 + 1;
  const std::size_t per_path = len * (r - 1) - 1;
  if (n < 2 + per_path) throw std::invalid_argument("n is too small for a single path");
  const std::size_t paths = (n - 2) / per_path;
  std::vector<std::vector<int>> edges;
  int fresh = 2;
  for (std::size_t p = 0; p < paths; ++p) {
    int joint = 0;  // hub u
    for (std::size_t step = 0; step < len; ++step) {
      std::vector<int> e{joint};
      for (std::size_t k = 0; k + 2 < r; ++k) e.push_back(fresh++);
      joint = step + 1 == len ? 1 : fresh++;
      e.push_back(joint);
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(n, r, std::move(edges));
}

Graph polarity_graph(long long q) {
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  // Normalised representatives: first nonzero coordinate equal to 1.
  std::vector<std::array<long long, 3>> points;
  for (long long b = 0; b < q; ++b)
    for (long long c = 0; c < q; ++c) points.push_back({1, b, c});
  for (long long c = 0; c < q; ++c) points.push_back({0, 1, c});
  points.push_back({0, 0, 1});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& x = points[i];
      const auto& y = points[j];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  return Graph(points.size(), std::move(edges));
}

std::vector<PropertyCheck> check_polarity(const Graph& g, long long q) {
  std::vector<PropertyCheck> out;
  const std::size_t expected_n = static_cast<std::size_t>(q * q + q + 1);
  out.push_back({"vertex_count", g.vertex_count() == expected_n, {{"value", g.vertex_count()}}});
  const std::uint64_t c4 = count_c4_formula(g);
  out.push_back({"c4_free", c4 == 0, {{"c4", c4}}});
  // Reported, not required: how many edges lie in exactly one triangle.
  const auto per_edge = triangles_per_edge(g);
  const auto one = static_cast<std::size_t>(std::count(per_edge.begin(), per_edge.end(), 1U));
  out.push_back({"edges_in_exactly_one_triangle", one == per_edge.size(),
                 {{"edges", per_edge.size()}, {"in_one_triangle", one}, {"asserted", false}}});
  std::size_t absolute = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == static_cast<std::size_t>(q)) ++absolute;
  out.push_back({"degree_profile", true, {{"degree_q_vertices", absolute}, {"min_degree", g.min_degree()}}});
  return out;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, std::move(edges));
}

double expected_c5_gnp(std::size_t n, double p) {
  if (n < 5) return 0.0;
  double falling = 1.0;
  for (std::size_t i = 0; i < 5; ++i) falling *= static_cast<double>(n - i);
  return falling / 10.0 * std::pow(p, 5);
}

}  // namespace sparsereg
