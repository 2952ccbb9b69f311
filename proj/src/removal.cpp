#include "sparsereg/removal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "sparsereg/counting.hpp"
#include "sparsereg/regularity.hpp"

namespace sparsereg {

namespace {

// Ordered-pair edge counts e(V_i, V_j) between blocks.
std::vector<std::vector<std::uint64_t>> block_edge_counts(const Graph& g, const Partition& p) {
  std::vector<std::vector<std::uint64_t>> e(p.size(), std::vector<std::uint64_t>(p.size(), 0));
  for (const Edge& ed : g.edges()) {
    const int a = p.block_of(ed.u), b = p.block_of(ed.v);
    ++e[a][b];
    ++e[b][a];
  }
  return e;
}

}  // namespace

std::vector<Edge> dense_pair_edges(const Graph& g, const Partition& p, double q, bool strict) {
  if (!(q > 0.0)) throw std::invalid_argument("density threshold must be positive");
  if (p.ground_size() != g.vertex_count()) throw std::invalid_argument("partition does not match graph");
  const auto e = block_edge_counts(g, p);
  std::vector<Edge> out;
  for (const Edge& ed : g.edges()) {
    const int a = p.block_of(ed.u), b = p.block_of(ed.v);
    const double threshold = q * static_cast<double>(p.block(a).size() * p.block(b).size());
    const double count = static_cast<double>(e[a][b]);
    if (strict ? count > threshold : count >= threshold) out.push_back(ed);
  }
  return out;
}

ReducedKernels reduced_kernel(const Kernel& f, const Partition& p, double k) {
  const Kernel fp = average_over(f, p);
  Matrix ft(f.size(), f.size()), gt(f.size(), f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (fp(x, y) <= k) {
        ft(x, y) = f(x, y);
        gt(x, y) = fp(x, y);
      }
    }
  return {Kernel(f.space(), std::move(ft)), Kernel(f.space(), std::move(gt))};
}

namespace {

using IntMatrix = std::vector<std::vector<std::uint64_t>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t m = a.size();
  IntMatrix c(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

// Walk counts stay far below 2^64: at most 64^4 entries per power.
struct WalkCounts {
  IntMatrix s2, s4;
};

WalkCounts walks(const IntMatrix& s) {
  WalkCounts w;
  w.s2 = multiply(s, s);
  w.s4 = multiply(w.s2, w.s2);
  return w;
}

}  // namespace

ReducedCleaning clean_reduced_c5(const Kernel& reduced, CycleTargets targets) {
  const std::size_t m = reduced.size();
  if (m > kMaxReducedParts) {
    throw PreconditionError("reduced graph has " + std::to_string(m) + " parts; at most 64 supported");
  }
  Matrix values = reduced.values();
  IntMatrix s(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s[i][j] = values(i, j) > 0.0 ? 1 : 0;

  ReducedCleaning out;
  while (true) {
    const WalkCounts w = walks(s);
    int best_i = -1, best_j = -1;
    double best_mass = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        if (!s[i][j]) continue;
        // Closed walks through the pair: (S^4)_{ji} for length 5 and
        // (S^2)_{ji} for length 3.
        const bool on_c5 = targets.c5 && w.s4[j][i] > 0;
        const bool on_c3 = targets.c3 && w.s2[j][i] > 0;
        if (!on_c5 && !on_c3) continue;
        const double orient = i == j ? 1.0 : 2.0;
        const double mass = orient * reduced.space().weight(i) * reduced.space().weight(j) * values(i, j);
        if (best_i < 0 || mass < best_mass) {
          best_i = static_cast<int>(i);
          best_j = static_cast<int>(j);
          best_mass = mass;
        }
      }
    }
    if (best_i < 0) break;
    s[best_i][best_j] = s[best_j][best_i] = 0;
    values(best_i, best_j) = values(best_j, best_i) = 0.0;
    out.removed.emplace_back(best_i, best_j);
    out.l1_mass += best_mass;
  }
  out.cleaned = Kernel(reduced.space(), std::move(values));
  return out;
}

std::vector<Edge> greedy_cycle_hitting(const Graph& g, CycleTargets targets) {
  // Every target cycle as a list of edge ids, indexed from each edge.
  std::vector<std::vector<std::int64_t>> cycles;
  if (targets.c3) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.neighbors(u)) {
        if (v <= u) continue;
        for (Vertex x : g.neighbors(v)) {
          if (x <= v || !g.has_edge(u, x)) continue;
          cycles.push_back({g.edge_id(u, v), g.edge_id(v, x), g.edge_id(u, x)});
        }
      }
  }
  if (targets.c5) {
    for_each_c5(g, [&](const std::array<Vertex, 5>& c) {
      std::vector<std::int64_t> ids;
      for (int i = 0; i < 5; ++i) ids.push_back(g.edge_id(c[i], c[(i + 1) % 5]));
      cycles.push_back(std::move(ids));
    });
  }
  std::vector<std::uint64_t> load(g.edge_count(), 0);
  std::vector<std::vector<std::size_t>> on_edge(g.edge_count());
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (auto id : cycles[c]) {
      ++load[id];
      on_edge[id].push_back(c);
    }
  std::vector<char> alive(cycles.size(), 1);
  std::vector<Edge> deleted;
  while (true) {
    std::size_t best = 0;
    for (std::size_t id = 1; id < load.size(); ++id)
      if (load[id] > load[best]) best = id;
    if (load.empty() || load[best] == 0) break;
    deleted.push_back(g.edges()[best]);
    for (std::size_t c : on_edge[best]) {
      if (!alive[c]) continue;
      alive[c] = 0;
      for (auto id : cycles[c]) --load[id];
    }
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

std::vector<Edge> greedy_c5_hitting(const Graph& g) { return greedy_cycle_hitting(g, {false, true}); }

namespace {

std::uint64_t target_count(const Graph& g, CycleTargets t) {
  std::uint64_t c = 0;
  if (t.c5) c += count_c5_enumeration(g);
  if (t.c3) c += count_triangles(g);
  return c;
}

nlohmann::json edge_list(const std::vector<Edge>& edges) {
  nlohmann::json a = nlohmann::json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

}  // namespace

void to_json(nlohmann::json& j, const StageBudget& b) {
  j = nlohmann::json{{"deleted", b.deleted}, {"budget", b.budget}, {"within", b.within}};
}

nlohmann::json summary_json(const DeletionReport& r) {
  nlohmann::json j{{"already_free", r.already_free},
                   {"regularity_converged", r.regularity_converged},
                   {"parts", r.parts},
                   {"parameters", {{"epsilon", r.epsilon}, {"K", r.k}, {"p", r.p}, {"delta", r.delta}}},
                   {"stages",
                    {{"dense_pairs", r.dense_budget},
                     {"small_parts", r.small_budget},
                     {"reduced_clean", r.reduced_budget},
                     {"fallback", {{"deleted", r.fallback.size()}}}}},
                   {"labelled_c5", r.labelled_c5},
                   {"reduced_l1_mass", r.reduced_l1_mass},
                   {"small_part_dominates", r.small_part_dominates},
                   {"total_deleted", r.total_deleted()},
                   {"final_edges", r.final_graph.edge_count()},
                   {"final_c5", r.final_c5}};
  if (r.final_c3) j["final_c3"] = *r.final_c3;
  return j;
}

void to_json(nlohmann::json& j, const DeletionReport& r) {
  j = summary_json(r);
  j["deleted"] = {{"dense_pairs", edge_list(r.dense_pairs)},
                  {"small_parts", edge_list(r.small_parts)},
                  {"reduced_clean", edge_list(r.reduced_clean)},
                  {"fallback", edge_list(r.fallback)}};
}

DeletionReport sparse_removal_pipeline(const Graph& g, const RemovalConfig& cfg, CycleTargets targets) {
  const std::size_t n = g.vertex_count();
  DeletionReport r;
  r.epsilon = cfg.epsilon;
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw PreconditionError("epsilon must lie in (0, 1)");
  if (!(cfg.c >= 1.0)) throw PreconditionError("C must be at least 1");
  r.k = cfg.k.value_or(8.0 / cfg.epsilon);
  if (!(r.k >= 1.0)) throw PreconditionError("K must be at least 1");
  r.delta = cfg.delta.value_or(0.05 * cfg.epsilon);
  if (!(r.delta > 0.0)) throw PreconditionError("delta must be positive");
  if (n == 0) {
    r.already_free = true;
    r.final_graph = g;
    return r;
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  r.p = cfg.p.value_or(1.0 / root_n);
  if (!(r.p <= 1.0) || r.p < 1.0 / (cfg.c * root_n)) {
    throw PreconditionError("p must lie in [1/(C sqrt(n)), 1]");
  }
  const double scale = cfg.epsilon * r.p * static_cast<double>(n) * static_cast<double>(n);
  r.dense_budget.budget = scale / 4.0;
  r.small_budget.budget = scale / 10.0;
  r.reduced_budget.budget = scale / 3.0;

  auto finish = [&](Graph current) {
    r.final_graph = std::move(current);
    r.final_c5 = count_cycles(r.final_graph, 5).count.convert_to<std::uint64_t>();
    if (targets.c3) r.final_c3 = count_triangles(r.final_graph);
    for (StageBudget* b : {&r.dense_budget, &r.small_budget, &r.reduced_budget}) {
      b->within = static_cast<double>(b->deleted) <= b->budget;
    }
    r.small_part_dominates = !r.small_budget.within;
    return r;
  };

  if (target_count(g, targets) == 0) {
    r.already_free = true;
    return finish(g);
  }

  // Regularise f / K where f = p^{-1} 1_G.
  const Kernel f = graph_to_kernel(g, r.p);
  RegularityOptions opts;
  opts.budget = cfg.regularity_budget;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  const double d2 = r.delta * r.delta;
  const RegularityOutcome reg = weak_regularity_scaled(f, r.k, r.k * d2 * d2, opts);
  r.regularity_converged = reg.converged;
  const Partition& parts = reg.partition;
  r.parts = parts.size();

  // Pairs with f_P > K.
  r.dense_pairs = dense_pair_edges(g, parts, r.k * r.p, true);
  r.dense_budget.deleted = r.dense_pairs.size();
  Graph current = g.without_edges(r.dense_pairs);

  const FiveSplit split = split_into_five(parts, current, cfg.min_part, cfg.seed);
  r.small_parts = split.dropped;
  std::sort(r.small_parts.begin(), r.small_parts.end());
  r.small_budget.deleted = r.small_parts.size();
  current = current.without_edges(r.small_parts);
  {
    const LayeredGraph labelled(current, std::vector<int>(n, 0), 1, split.labels);
    r.labelled_c5 = count_c5_layered(labelled);
  }

  // Reduced graph: one point per part weighted by its measure, value g~ / K.
  const std::size_t m = parts.size();
  if (m <= kMaxReducedParts) {
    std::vector<double> weights(m);
    for (std::size_t i = 0; i < m; ++i) weights[i] = static_cast<double>(parts.block(i).size()) / static_cast<double>(n);
    const auto e = block_edge_counts(current, parts);
    Matrix vals(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double cells = static_cast<double>(parts.block(i).size() * parts.block(j).size());
        const double density = static_cast<double>(e[i][j]) / (r.p * cells);
        vals(i, j) = density <= r.k ? density / r.k : 0.0;
      }
    // Renormalise weights that drift from 1 by rounding.
    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) w /= total;
    const ReducedCleaning clean = clean_reduced_c5(Kernel(ProbabilitySpace(weights), std::move(vals)), targets);
    r.reduced_l1_mass = clean.l1_mass * r.k;
    std::set<std::pair<int, int>> removed(clean.removed.begin(), clean.removed.end());
    for (const Edge& ed : current.edges()) {
      int a = parts.block_of(ed.u), b = parts.block_of(ed.v);
      if (a > b) std::swap(a, b);
      if (removed.count({a, b})) r.reduced_clean.push_back(ed);
    }
    r.reduced_budget.deleted = r.reduced_clean.size();
    current = current.without_edges(r.reduced_clean);
  }

  if (target_count(current, targets) != 0) {
    r.fallback = greedy_cycle_hitting(current, targets);
    current = current.without_edges(r.fallback);
  }
  return finish(std::move(current));
}

ThreePartChain three_part_c4_chain(const LayeredGraph& lg, std::size_t i) {
  const std::size_t k = lg.layer_count();
  if (k < 3 || i >= k) throw std::invalid_argument("three-part chain needs a layer index of a graph with >= 3 layers");
  const int prev = static_cast<int>((i + k - 1) % k);
  const int next = static_cast<int>((i + 1) % k);
  const Graph& g = lg.graph();
  std::size_t n = 0;
  for (std::size_t l = 0; l < k; ++l) n = std::max(n, lg.layer(l).size());
  const std::vector<Vertex> mid = lg.layer(i);

  auto codeg_in = [&](Vertex x, Vertex y, int layer) {
    std::uint64_t c = 0;
    auto nx = g.neighbors(x);
    auto ny = g.neighbors(y);
    std::size_t a = 0, b = 0;
    while (a < nx.size() && b < ny.size()) {
      if (nx[a] < ny[b]) ++a;
      else if (ny[b] < nx[a]) ++b;
      else {
        if (lg.layer_of(nx[a]) == layer) ++c;
        ++a;
        ++b;
      }
    }
    return c;
  };

  ThreePartChain out;
  for (std::size_t a = 0; a < mid.size(); ++a)
    for (std::size_t b = a + 1; b < mid.size(); ++b) {
      const std::uint64_t cp = codeg_in(mid[a], mid[b], prev);
      const std::uint64_t cn = codeg_in(mid[a], mid[b], next);
      out.sum_codeg_sq += BigInt(cp) * cp;
      out.c4_between += BigInt(cp) * (cp - (cp > 0 ? 1 : 0)) / 2;
      out.three_part_c4 += BigInt(cp) * cn;
    }
  out.pairs = BigInt(n) * (n - (n > 0 ? 1 : 0)) / 2;
  out.n_squared = BigInt(n) * n;
  out.first_step = out.sum_codeg_sq <= out.pairs + 4 * out.c4_between;
  out.second_step = out.pairs + 4 * out.c4_between <= out.n_squared;
  return out;
}

}  // namespace sparsereg
