#include "sparsereg/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sparsereg/parallel.hpp"

namespace sparsereg {

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Enumeration: return "enumeration";
    case CountMethod::Formula: return "formula";
    case CountMethod::Trace: return "trace";
  }
  return "unknown";
}

void to_json(nlohmann::json& j, const CountReport& r) {
  j = nlohmann::json::object();
  j["pattern"] = r.pattern;
  if (r.density) {
    j["count"] = *r.density;
  } else if (r.count <= std::numeric_limits<std::uint64_t>::max()) {
    j["count"] = r.count.convert_to<std::uint64_t>();
  } else {
    j["count"] = r.count.str();
  }
  j["method"] = to_string(r.method);
}

namespace {

std::uint64_t sum_chunks(std::size_t n, const std::function<std::uint64_t(std::size_t)>& per_item) {
  std::vector<std::uint64_t> partial(thread_count() + 1, 0);
  const std::size_t used = parallel_chunks(n, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    std::uint64_t s = 0;
    for (std::size_t i = b; i < e; ++i) s += per_item(i);
    partial[chunk] = s;
  });
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < used; ++c) total += partial[c];
  return total;
}

std::size_t merge_count(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace

std::size_t codegree(const Graph& g, Vertex u, Vertex v) {
  return merge_count(g.neighbors(u), g.neighbors(v));
}

std::uint64_t count_triangles(const Graph& g) {
  // Each triangle u < v < w is found once from the edge (u, v) via w > v.
  return sum_chunks(g.vertex_count(), [&](std::size_t ui) {
    const auto u = static_cast<Vertex>(ui);
    std::uint64_t c = 0;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      c += merge_count({iu, nu.end()}, {iv, nv.end()});
    }
    return c;
  });
}

std::uint64_t count_c4_formula(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> partial(thread_count() + 1, 0);
  const std::size_t used = parallel_chunks(n, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    std::vector<std::uint32_t> codeg(n, 0);
    std::vector<Vertex> touched;
    std::uint64_t s = 0;
    for (std::size_t ui = b; ui < e; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      for (Vertex v : g.neighbors(u)) {
        for (Vertex w : g.neighbors(v)) {
          if (w <= u) continue;
          if (codeg[w]++ == 0) touched.push_back(w);
        }
      }
      for (Vertex w : touched) {
        const std::uint64_t c = codeg[w];
        s += c * (c - 1) / 2;
        codeg[w] = 0;
      }
      touched.clear();
    }
    partial[chunk] = s;
  });
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < used; ++c) total += partial[c];
  // Every 4-cycle has two diagonals, each contributing one pair of paths.
  return total / 2;
}

void for_each_c4(const Graph& g, const std::function<void(const std::array<Vertex, 4>&)>& visit) {
  // a is the least vertex; b < d fixes the orientation.
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d <= b || d == a) continue;
          if (g.has_edge(d, a)) visit({a, b, c, d});
        }
      }
    }
  }
}

std::uint64_t count_c4_enumeration(const Graph& g) {
  return sum_chunks(g.vertex_count(), [&](std::size_t ai) {
    const auto a = static_cast<Vertex>(ai);
    std::uint64_t c = 0;
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex x : g.neighbors(b)) {
        if (x <= a) continue;
        for (Vertex d : g.neighbors(x)) {
          if (d <= b) continue;
          if (g.has_edge(d, a)) ++c;
        }
      }
    }
    return c;
  });
}

namespace {

// Walks a-b-c-d-e-a with a the least vertex and b < e; calls f(b, c, d, e).
template <typename F>
void c5_from_anchor(const Graph& g, Vertex a, F&& f) {
  for (Vertex b : g.neighbors(a)) {
    if (b <= a) continue;
    for (Vertex c : g.neighbors(b)) {
      if (c <= a) continue;
      for (Vertex d : g.neighbors(c)) {
        if (d <= a || d == b) continue;
        for (Vertex e : g.neighbors(d)) {
          if (e <= b || e == c) continue;
          if (g.has_edge(e, a)) f(b, c, d, e);
        }
      }
    }
  }
}

}  // namespace

std::uint64_t count_c5_enumeration(const Graph& g) {
  return sum_chunks(g.vertex_count(), [&](std::size_t ai) {
    std::uint64_t c = 0;
    c5_from_anchor(g, static_cast<Vertex>(ai), [&](Vertex, Vertex, Vertex, Vertex) { ++c; });
    return c;
  });
}

void for_each_c5(const Graph& g, const std::function<void(const std::array<Vertex, 5>&)>& visit) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    c5_from_anchor(g, a, [&](Vertex b, Vertex c, Vertex d, Vertex e) { visit({a, b, c, d, e}); });
  }
}

CountReport count_cycles(const Graph& g, int k, bool cross_check) {
  CountReport r;
  r.pattern = "c" + std::to_string(k);
  switch (k) {
    case 3: {
      const std::uint64_t c = count_triangles(g);
      r.count = c;
      r.method = CountMethod::Enumeration;
      if (cross_check) {
        const BigInt t = hom_cycle(g, 3);
        if (t != BigInt(c) * 6) throw std::logic_error("triangle count disagrees with tr(A^3)/6");
      }
      break;
    }
    case 4: {
      const std::uint64_t c = count_c4_formula(g);
      r.count = c;
      r.method = CountMethod::Formula;
      if (cross_check && count_c4_enumeration(g) != c) {
        throw std::logic_error("4-cycle formula disagrees with enumeration");
      }
      break;
    }
    case 5:
      r.count = count_c5_enumeration(g);
      r.method = CountMethod::Enumeration;
      break;
    default:
      throw std::invalid_argument("unsupported pattern: c" + std::to_string(k));
  }
  return r;
}

std::vector<std::uint64_t> triangles_per_edge(const Graph& g) {
  std::vector<std::uint64_t> out(g.edge_count(), 0);
  parallel_for(g.edge_count(), [&](std::size_t id) {
    const Edge e = g.edges()[id];
    out[id] = codegree(g, e.u, e.v);
  });
  return out;
}

std::vector<std::uint64_t> c5_per_edge(const Graph& g) {
  std::vector<std::uint64_t> out(g.edge_count(), 0);
  auto bump = [&](Vertex x, Vertex y) { ++out[static_cast<std::size_t>(g.edge_id(x, y))]; };
  for_each_c5(g, [&](const std::array<Vertex, 5>& c) {
    for (int i = 0; i < 5; ++i) bump(c[i], c[(i + 1) % 5]);
  });
  return out;
}

namespace {

// Closed walks of length k summed over start vertices, with a generic
// accumulator type. Returns false on overflow for the 64-bit case.
bool trace_walks_u64(const Graph& g, int k, std::uint64_t& result) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> partial(thread_count() + 1, 0);
  std::vector<char> ok(thread_count() + 1, 1);
  const std::size_t used = parallel_chunks(n, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    std::vector<std::uint64_t> cur(n), next(n);
    std::uint64_t s = 0;
    for (std::size_t start = b; start < e && ok[chunk]; ++start) {
      std::fill(cur.begin(), cur.end(), 0);
      cur[start] = 1;
      for (int step = 0; step < k && ok[chunk]; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t v = 0; v < n; ++v) {
          if (cur[v] == 0) continue;
          for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            if (__builtin_add_overflow(next[w], cur[v], &next[w])) ok[chunk] = 0;
          }
        }
        std::swap(cur, next);
      }
      if (__builtin_add_overflow(s, cur[start], &s)) ok[chunk] = 0;
    }
    partial[chunk] = s;
  });
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < used; ++c) {
    if (!ok[c] || __builtin_add_overflow(total, partial[c], &total)) return false;
  }
  result = total;
  return true;
}

BigInt trace_walks_big(const Graph& g, int k) {
  const std::size_t n = g.vertex_count();
  BigInt total = 0;
  std::vector<BigInt> cur(n), next(n);
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(cur.begin(), cur.end(), BigInt(0));
    cur[start] = 1;
    for (int step = 0; step < k; ++step) {
      std::fill(next.begin(), next.end(), BigInt(0));
      for (std::size_t v = 0; v < n; ++v) {
        if (cur[v] == 0) continue;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) next[w] += cur[v];
      }
      std::swap(cur, next);
    }
    total += cur[start];
  }
  return total;
}

}  // namespace

BigInt hom_cycle(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("hom_cycle needs k >= 3");
  std::uint64_t fast = 0;
  if (trace_walks_u64(g, k, fast)) return BigInt(fast);
  return trace_walks_big(g, k);
}

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::C3: return "c3";
    case Pattern::C4: return "c4";
    case Pattern::C5: return "c5";
    case Pattern::K22: return "k22";
  }
  return "unknown";
}

Pattern parse_pattern(const std::string& name) {
  if (name == "c3") return Pattern::C3;
  if (name == "c4") return Pattern::C4;
  if (name == "c5") return Pattern::C5;
  if (name == "k22") return Pattern::K22;
  throw std::invalid_argument("unsupported pattern: " + name);
}

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  parallel_for(a.rows(), [&](std::size_t i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double x = a(i, l);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(l, j);
    }
  });
  return out;
}

double trace_of_product(const Matrix& a, const Matrix& b) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

}  // namespace

double hom_density(Pattern h, const Kernel& f) {
  const std::size_t n = f.size();
  // t(C_k, f) = tr(B^k) with B(x, y) = mu(x) f(x, y).
  Matrix b(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) b(x, y) = f.space().weight(x) * f(x, y);
  const Matrix b2 = multiply(b, b);
  switch (h) {
    case Pattern::C3: return trace_of_product(b2, b);
    case Pattern::C4:
    case Pattern::K22: return trace_of_product(b2, b2);
    case Pattern::C5: return trace_of_product(multiply(b2, b2), b);
  }
  return 0.0;
}

double hom_density_k22(const BipartiteKernel& f) {
  const std::size_t nl = f.left().size();
  const std::size_t nr = f.right().size();
  double total = 0.0;
  for (std::size_t y = 0; y < nr; ++y) {
    for (std::size_t y2 = 0; y2 < nr; ++y2) {
      double inner = 0.0;
      for (std::size_t x = 0; x < nl; ++x) inner += f.left().weight(x) * f(x, y) * f(x, y2);
      total += f.right().weight(y) * f.right().weight(y2) * inner * inner;
    }
  }
  return total;
}

Matrix compose_values(const Matrix& a, const ProbabilitySpace& middle, const Matrix& b) {
  if (a.cols() != middle.size() || b.rows() != middle.size()) {
    throw std::invalid_argument("composition: inner dimensions do not match");
  }
  Matrix out(a.rows(), b.cols());
  parallel_for(a.rows(), [&](std::size_t i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double x = a(i, l) * middle.weight(l);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(l, j);
    }
  });
  return out;
}

BipartiteKernel compose(const BipartiteKernel& f12, const BipartiteKernel& f23) {
  if (!(f12.right() == f23.left())) {
    throw std::invalid_argument("composition: inner spaces do not match");
  }
  return BipartiteKernel(f12.left(), f23.right(),
                         compose_values(f12.values(), f12.right(), f23.values()));
}

double l2sq(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& h) {
  double s = 0.0;
  for (std::size_t x = 0; x < h.rows(); ++x) {
    double r = 0.0;
    for (std::size_t y = 0; y < h.cols(); ++y) r += cols.weight(y) * h(x, y) * h(x, y);
    s += rows.weight(x) * r;
  }
  return s;
}

double l2sq(const BipartiteKernel& h) { return l2sq(h.left(), h.right(), h.values()); }

Matrix truncate_above(const Matrix& h, double a) {
  Matrix out = h;
  for (std::size_t x = 0; x < h.rows(); ++x)
    for (std::size_t y = 0; y < h.cols(); ++y)
      if (h(x, y) > a) out(x, y) = 0.0;
  return out;
}

BipartiteKernel truncate_above(const BipartiteKernel& h, double a) {
  return BipartiteKernel(h.left(), h.right(), truncate_above(h.values(), a));
}

std::uint64_t count_c5_layered(const LayeredGraph& lg) {
  const auto& label = lg.sublabels();
  const Graph& g = lg.graph();
  return sum_chunks(g.vertex_count(), [&](std::size_t v0i) {
    const auto v0 = static_cast<Vertex>(v0i);
    if (label[v0] != 0) return std::uint64_t{0};
    std::uint64_t c = 0;
    for (Vertex v1 : g.neighbors(v0)) {
      if (label[v1] != 1) continue;
      for (Vertex v2 : g.neighbors(v1)) {
        if (label[v2] != 2) continue;
        for (Vertex v3 : g.neighbors(v2)) {
          if (label[v3] != 3) continue;
          for (Vertex v4 : g.neighbors(v3)) {
            if (label[v4] == 4 && g.has_edge(v4, v0)) ++c;
          }
        }
      }
    }
    return c;
  });
}

HouseCount house_c4_count(const Graph& g) {
  HouseCount out;
  for_each_c4(g, [&](const std::array<Vertex, 4>& c) {
    ++out.total;
    for (int i = 0; i < 4; ++i) {
      const Vertex x = c[i];
      const Vertex y = c[(i + 1) % 4];
      // Common neighbours of a cycle edge that lie on the cycle are the two
      // other cycle vertices only when chords exist; exclude them explicitly.
      std::size_t inside = 0;
      for (int j = 0; j < 4; ++j) {
        const Vertex z = c[j];
        if (z != x && z != y && g.has_edge(z, x) && g.has_edge(z, y)) ++inside;
      }
      if (codegree(g, x, y) > inside) {
        ++out.extending;
        return;
      }
    }
  });
  return out;
}

TriangleDecomposition greedy_triangle_decomposition(const Graph& g, std::uint64_t seed) {
  std::vector<std::array<Vertex, 3>> all;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v) continue;
        if (g.has_edge(u, w)) all.push_back({u, v, w});
      }
    }
  Rng rng(seed);
  shuffle_in_place(all, rng);
  std::vector<char> used(g.edge_count(), 0);
  TriangleDecomposition out;
  std::vector<Edge> kept;
  for (const auto& t : all) {
    const auto a = g.edge_id(t[0], t[1]);
    const auto b = g.edge_id(t[1], t[2]);
    const auto c = g.edge_id(t[0], t[2]);
    if (used[a] || used[b] || used[c]) continue;
    used[a] = used[b] = used[c] = 1;
    out.triangles.push_back(t);
    kept.insert(kept.end(), {Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])});
  }
  out.union_graph = Graph(g.vertex_count(), std::move(kept));
  return out;
}

}  // namespace sparsereg
