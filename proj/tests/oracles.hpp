#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. They rely only on adjacency queries and plain enumeration, never on
// the library routines they are compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "sparsereg/arithmetic.hpp"
#include "sparsereg/common.hpp"
#include "sparsereg/graph.hpp"
#include "sparsereg/hypergraph.hpp"
#include "sparsereg/kernel.hpp"

namespace oracle {

using sparsereg::BigInt;
using sparsereg::Graph;
using sparsereg::Matrix;
using sparsereg::ProbabilitySpace;
using sparsereg::Rng;

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<sparsereg::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (sparsereg::uniform01(rng) < p) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph(n, std::move(edges));
}

// Unlabelled k-cycles: injective closed k-tuples divided by the 2k rotations
// and reflections.
inline std::uint64_t cycles(const Graph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> t(k);
  std::vector<char> used(n, 0);
  std::uint64_t closed = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      if (g.has_edge(t[k - 1], t[0])) ++closed;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || (pos > 0 && !g.has_edge(t[pos - 1], v))) continue;
      used[v] = 1;
      t[pos] = v;
      rec(pos + 1);
      used[v] = 0;
    }
  };
  rec(0);
  return closed / (2 * static_cast<std::uint64_t>(k));
}

// Closed walks of length k, by enumerating every vertex sequence.
inline std::uint64_t closed_walks(const Graph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> t(k);
  std::uint64_t total = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      if (g.has_edge(t[k - 1], t[0])) ++total;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (pos > 0 && !g.has_edge(t[pos - 1], v)) continue;
      t[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return total;
}

// Homomorphism density of a pattern with `vertices` vertices and the given
// edge list, as a sum over all vertex maps.
inline double hom_density(const ProbabilitySpace& s, const Matrix& f, int vertices,
                          const std::vector<std::pair<int, int>>& edges) {
  const std::size_t n = s.size();
  std::vector<std::size_t> map(vertices, 0);
  double total = 0.0;
  while (true) {
    double w = 1.0;
    for (int i = 0; i < vertices; ++i) w *= s.weight(map[i]);
    for (auto [a, b] : edges) w *= f(map[a], map[b]);
    total += w;
    int i = 0;
    while (i < vertices && ++map[i] == n) map[i++] = 0;
    if (i == vertices) break;
  }
  return total;
}

inline std::vector<std::pair<int, int>> cycle_edges(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return e;
}

// max over all subset pairs of |E f 1_A 1_B|.
inline double cut_norm(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& f) {
  double best = 0.0;
  const std::size_t r = rows.size(), c = cols.size();
  for (std::uint64_t a = 0; a < (1ULL << r); ++a) {
    for (std::uint64_t b = 0; b < (1ULL << c); ++b) {
      double s = 0.0;
      for (std::size_t x = 0; x < r; ++x) {
        if (!(a >> x & 1)) continue;
        for (std::size_t y = 0; y < c; ++y)
          if (b >> y & 1) s += rows.weight(x) * cols.weight(y) * f(x, y);
      }
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

// Solutions of sum c_i x_i = 0 with x_i in sets[i], filtered by `keep`.
inline std::uint64_t solutions(const std::vector<long long>& coeffs,
                               const std::vector<std::vector<long long>>& sets,
                               const std::function<bool(const std::vector<long long>&)>& keep) {
  const std::size_t k = coeffs.size();
  std::vector<long long> x(k);
  std::uint64_t total = 0;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long acc) {
    if (i == k) {
      if (acc == 0 && keep(x)) ++total;
      return;
    }
    for (long long v : sets[i]) {
      x[i] = v;
      rec(i + 1, acc + coeffs[i] * v);
    }
  };
  rec(0, 0);
  return total;
}

inline bool all_distinct(const std::vector<long long>& x) {
  std::set<long long> s(x.begin(), x.end());
  return s.size() == x.size();
}

inline std::uint64_t additive_energy(const std::vector<long long>& x) {
  std::vector<std::vector<long long>> sets(4, x);
  return solutions({1, 1, -1, -1}, sets, [](const auto&) { return true; });
}

inline bool is_sidon(const std::vector<long long>& x) {
  std::set<long long> sums;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j)
      if (!sums.insert(x[i] + x[j]).second) return false;
  return true;
}

// Shortest Berge cycle length up to g (0 if none): distinct edges e_1..e_k
// and distinct vertices v_1..v_k with v_i, v_{i+1} in e_i cyclically.
inline std::size_t berge_girth_upto(const sparsereg::Hypergraph& h, std::size_t g) {
  const std::size_t m = h.edge_count();
  auto in = [&](int v, std::size_t e) {
    const auto& ed = h.edge(e);
    return std::find(ed.begin(), ed.end(), v) != ed.end();
  };
  for (std::size_t k = 2; k <= g; ++k) {
    std::vector<int> vs(k), es(k);
    bool found = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (found) return;
      if (i == k) {
        if (in(vs[0], es[k - 1]) && in(vs[k - 1], es[k - 1])) found = true;
        return;
      }
      for (std::size_t e = 0; e < m && !found; ++e) {
        if (std::find(es.begin(), es.begin() + i, static_cast<int>(e)) != es.begin() + i) continue;
        if (!in(vs[i], e)) continue;
        es[i] = static_cast<int>(e);
        if (i + 1 == k) {
          rec(i + 1);
          continue;
        }
        for (int v : h.edge(e)) {
          if (std::find(vs.begin(), vs.begin() + i + 1, v) != vs.begin() + i + 1) continue;
          vs[i + 1] = v;
          rec(i + 1);
        }
      }
    };
    for (std::size_t v = 0; v < h.vertex_count() && !found; ++v) {
      vs[0] = static_cast<int>(v);
      rec(0);
    }
    if (found) return k;
  }
  return 0;
}

// Some e edges spanning at most v vertices, by trying every e-subset.
inline bool has_configuration(const sparsereg::Hypergraph& h, std::size_t v, std::size_t e) {
  const std::size_t m = h.edge_count();
  if (e > m) return false;
  std::vector<char> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + e, 1);
  do {
    std::set<int> span;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) span.insert(h.edge(i).begin(), h.edge(i).end());
    if (span.size() <= v) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline sparsereg::Hypergraph random_triples(std::size_t n, std::size_t m, Rng& rng) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> edges;
  std::size_t attempts = 0;
  while (edges.size() < m && attempts++ < 50 * m + 100) {
    std::vector<int> e;
    while (e.size() < 3) {
      int x = static_cast<int>(sparsereg::uniform_below(rng, n));
      if (std::find(e.begin(), e.end(), x) == e.end()) e.push_back(x);
    }
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(e);
  }
  return sparsereg::Hypergraph(n, 3, std::move(edges));
}

}  // namespace oracle
