#include "sparsereg/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sparsereg/counting.hpp"
#include "sparsereg/cutnorm.hpp"

namespace sparsereg {

namespace {

constexpr double kSlack = 1e-9;

double cut(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& m) {
  return cut_norm_exact(rows, cols, m).value;
}

int wrap(int i) { return ((i % 5) + 5) % 5; }

// f_{ij} for adjacent i, j as a matrix on V_i x V_j.
Matrix oriented(const std::array<BipartiteKernel, 5>& h, int i, int j) {
  if (wrap(i + 1) == j) return h[i].values();
  if (wrap(j + 1) == i) return h[j].values().transposed();
  throw std::logic_error("indices are not adjacent");
}

// Rows of f_{ij} whose mean over V_j is at most bound.
std::vector<char> row_mask(const Matrix& fij, const ProbabilitySpace& vj, double bound) {
  std::vector<char> keep(fij.rows(), 0);
  for (std::size_t x = 0; x < fij.rows(); ++x) {
    double mean = 0.0;
    for (std::size_t y = 0; y < fij.cols(); ++y) mean += vj.weight(y) * fij(x, y);
    keep[x] = mean <= bound;
  }
  return keep;
}

Matrix apply_row_mask(const Matrix& m, const std::vector<char>& keep) {
  Matrix out = m;
  for (std::size_t x = 0; x < m.rows(); ++x)
    if (!keep[x])
      for (std::size_t y = 0; y < m.cols(); ++y) out(x, y) = 0.0;
  return out;
}

double inv_pow(double eps, int k) {
  return eps == 0.0 ? std::numeric_limits<double>::infinity() : std::pow(eps, -k);
}

}  // namespace

void to_json(nlohmann::json& j, const CountingLemmaInstance& inst) {
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& s : inst.spaces) sizes.push_back(s.size());
  j = nlohmann::json{{"sizes", sizes},
                     {"measured_epsilon", inst.measured_epsilon},
                     {"epsilon", inst.epsilon},
                     {"C", inst.c}};
}

CountingLemmaInstance make_counting_lemma_instance(std::array<BipartiteKernel, 5> f,
                                                   std::array<BipartiteKernel, 5> g,
                                                   std::optional<double> epsilon) {
  CountingLemmaInstance inst;
  for (int i = 0; i < 5; ++i) {
    if (!(f[i].left() == g[i].left()) || !(f[i].right() == g[i].right())) {
      throw std::invalid_argument("f and g must share their spaces");
    }
    if (!(f[i].right() == f[wrap(i + 1)].left())) {
      throw std::invalid_argument("consecutive kernels must share their middle space");
    }
    if (f[i].left().size() > kCertificateSpaceLimit) {
      throw PreconditionError("certificate spaces are limited to 14 points for exact cut norms");
    }
    for (double v : g[i].values().data())
      if (v > 1.0) throw std::invalid_argument("g must take values in [0, 1]");
    inst.spaces[i] = f[i].left();
  }
  double worst = 0.0;
  double c = 1.0;
  for (int i = 0; i < 5; ++i) {
    worst = std::max(worst, cut(f[i].left(), f[i].right(), f[i].values() - g[i].values()));
    const BipartiteKernel& prev = f[wrap(i - 1)];
    c = std::max(c, l2sq(prev.left(), f[i].right(), compose_values(prev.values(), f[i].left(), f[i].values())));
  }
  inst.measured_epsilon = std::pow(worst, 0.25);
  if (!(inst.measured_epsilon < 1.0)) {
    throw PreconditionError("measured epsilon " + std::to_string(inst.measured_epsilon) + " is not below 1");
  }
  inst.epsilon = inst.measured_epsilon;
  if (epsilon) {
    if (*epsilon < inst.measured_epsilon || *epsilon >= 1.0) {
      throw std::invalid_argument("epsilon override must lie in [measured epsilon, 1)");
    }
    inst.epsilon = *epsilon;
  }
  inst.c = c;
  inst.f = std::move(f);
  inst.g = std::move(g);
  return inst;
}

namespace {

ProbabilitySpace random_space(Rng& rng, std::size_t max_points) {
  const std::size_t n = 2 + uniform_below(rng, max_points - 1);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = 0.2 + uniform01(rng);
    total += x;
  }
  for (auto& x : w) x /= total;
  return ProbabilitySpace(std::move(w));
}

// Sparse-looking nonnegative matrix: zero with probability 1 - q, otherwise
// of size about 1 / q.
Matrix random_sparse(Rng& rng, std::size_t rows, std::size_t cols) {
  const double q = 0.3 + 0.7 * uniform01(rng);
  Matrix m(rows, cols);
  for (std::size_t x = 0; x < rows; ++x)
    for (std::size_t y = 0; y < cols; ++y)
      if (uniform01(rng) < q) m(x, y) = uniform01(rng) * 1.5 / q;
  return m;
}

Matrix block_average_clipped(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                             const Matrix& f, Rng& rng) {
  auto labels = [&](std::size_t n) {
    const std::size_t blocks = 1 + uniform_below(rng, std::min<std::size_t>(3, n));
    std::vector<std::size_t> lab(n);
    for (auto& l : lab) l = uniform_below(rng, blocks);
    return std::pair{lab, blocks};
  };
  const auto [rl, rb] = labels(f.rows());
  const auto [cl, cb] = labels(f.cols());
  Matrix mass(rb, cb), weight(rb, cb);
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t y = 0; y < f.cols(); ++y) {
      const double w = rows.weight(x) * cols.weight(y);
      mass(rl[x], cl[y]) += w * f(x, y);
      weight(rl[x], cl[y]) += w;
    }
  Matrix g(f.rows(), f.cols());
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t y = 0; y < f.cols(); ++y)
      g(x, y) = std::min(1.0, mass(rl[x], cl[y]) / weight(rl[x], cl[y]));
  return g;
}

}  // namespace

CountingLemmaInstance random_counting_lemma_instance(std::uint64_t seed, InstanceShape shape,
                                                     std::size_t max_points) {
  if (max_points < 2 || max_points > kCertificateSpaceLimit) {
    throw std::invalid_argument("max_points must lie in [2, 14]");
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    std::array<ProbabilitySpace, 5> spaces;
    for (auto& s : spaces) s = random_space(rng, max_points);
    std::array<BipartiteKernel, 5> f, g;
    for (int i = 0; i < 5; ++i) {
      const auto& l = spaces[i];
      const auto& r = spaces[wrap(i + 1)];
      Matrix fm, gm;
      if (shape == InstanceShape::BlockAverage) {
        fm = random_sparse(rng, l.size(), r.size());
        gm = block_average_clipped(l, r, fm, rng);
      } else {
        gm = Matrix(l.size(), r.size());
        fm = Matrix(l.size(), r.size());
        const double scale = 0.5 * uniform01(rng);
        for (std::size_t x = 0; x < l.size(); ++x)
          for (std::size_t y = 0; y < r.size(); ++y) {
            gm(x, y) = uniform01(rng);
            fm(x, y) = std::max(0.0, gm(x, y) + scale * (2.0 * uniform01(rng) - 1.0));
          }
      }
      f[i] = BipartiteKernel(l, r, std::move(fm));
      g[i] = BipartiteKernel(l, r, std::move(gm));
    }
    try {
      return make_counting_lemma_instance(std::move(f), std::move(g));
    } catch (const PreconditionError&) {
      // epsilon came out >= 1; draw again from the next stream.
    }
  }
}

double cycle_product(const std::array<ProbabilitySpace, 5>& spaces, const std::array<Matrix, 5>& h) {
  // tr(B_0 ... B_4) with B_i(x, y) = mu_i(x) h_i(x, y).
  Matrix acc(spaces[0].size(), spaces[0].size());
  for (std::size_t x = 0; x < spaces[0].size(); ++x) acc(x, x) = 1.0;
  for (int i = 0; i < 5; ++i) acc = compose_values(acc, spaces[i], h[i]);
  double t = 0.0;
  for (std::size_t x = 0; x < spaces[0].size(); ++x) t += acc(x, x);
  return t;
}

void to_json(nlohmann::json& j, const CountingLemmaResult& r) {
  j = nlohmann::json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}, {"holds", r.holds}};
}

CountingLemmaResult verify_counting_lemma(const CountingLemmaInstance& inst) {
  std::array<Matrix, 5> fv, gv;
  for (int i = 0; i < 5; ++i) {
    fv[i] = inst.f[i].values();
    gv[i] = inst.g[i].values();
  }
  CountingLemmaResult r;
  r.lhs = cycle_product(inst.spaces, fv);
  r.rhs = cycle_product(inst.spaces, gv) - 11.0 * inst.c * inst.epsilon;
  r.margin = r.lhs - r.rhs;
  r.holds = r.margin >= -kSlack;
  return r;
}

void to_json(nlohmann::json& j, const ChainCheck& c) {
  j = nlohmann::json{{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"holds", c.holds}};
}

void to_json(nlohmann::json& j, const TruncationChainReport& r) {
  j = nlohmann::json{{"holds", r.holds}, {"checks", r.checks}};
}

TruncationChainReport verify_truncation_chain(const CountingLemmaInstance& inst) {
  const double eps = inst.epsilon;
  const double e2 = eps * eps;
  const double c = inst.c;
  const auto& sp = inst.spaces;
  TruncationChainReport rep;
  auto check = [&](std::string name, double value, double bound) {
    rep.checks.push_back({std::move(name), value, bound, value <= bound + kSlack});
  };
  auto masked = [&](int i, int j) {
    const Matrix fij = oriented(inst.f, i, j);
    return apply_row_mask(fij, row_mask(fij, sp[j], inv_pow(eps, 2)));
  };

  for (int i = 0; i < 5; ++i) {
    for (int d : {1, -1}) {
      const int j = wrap(i + d);
      const std::string tag = std::to_string(i) + std::to_string(j);
      const Matrix fij = oriented(inst.f, i, j);
      const std::vector<char> keep = row_mask(fij, sp[j], inv_pow(eps, 2));
      double outside = 0.0;
      for (std::size_t x = 0; x < keep.size(); ++x)
        if (!keep[x]) outside += sp[i].weight(x);
      check("mask_measure_" + tag, outside, 2.0 * e2);
      check("masked_cut_" + tag, cut(sp[i], sp[j], apply_row_mask(fij, keep) - oriented(inst.g, i, j)), 3.0 * e2);
    }
  }

  for (int j = 0; j < 5; ++j) {
    for (int d : {1, -1}) {
      const int i = wrap(j - d), k = wrap(j + d);
      const std::string tag = std::to_string(i) + std::to_string(j) + std::to_string(k);
      const Matrix fij = oriented(inst.f, i, j), gij = oriented(inst.g, i, j);
      const Matrix gjk = oriented(inst.g, j, k);
      const Matrix fjk_masked = masked(j, k);
      const Matrix ff = compose_values(fij, sp[j], fjk_masked);
      const Matrix gg = compose_values(gij, sp[j], gjk);
      check("diff_compose_" + tag, cut(sp[i], sp[k], compose_values(fij - gij, sp[j], fjk_masked)), e2);
      check("g_compose_diff_" + tag, cut(sp[i], sp[k], compose_values(gij, sp[j], fjk_masked - gjk)), 3.0 * e2);
      check("compose_gap_" + tag, cut(sp[i], sp[k], ff - gg), 4.0 * e2);
      check("truncated_eps1_" + tag, cut(sp[i], sp[k], truncate_above(ff, inv_pow(eps, 1)) - gg), 5.0 * c * eps);
      check("truncated_eps2_" + tag, cut(sp[i], sp[k], truncate_above(ff, inv_pow(eps, 2)) - gg), 5.0 * c * e2);
    }
  }

  // The lower-bound chain over (x1, x3, x5), stored here as V0, V2, V4:
  // P(x3, x5) from V2-V3-V4, Q(x3, x1) from V2-V1-V0, R(x5, x1) on V4 x V0.
  auto triple = [&](const Matrix& p, const Matrix& q, const Matrix& r) {
    double s = 0.0;
    for (std::size_t a = 0; a < sp[2].size(); ++a)
      for (std::size_t b = 0; b < sp[4].size(); ++b)
        for (std::size_t x = 0; x < sp[0].size(); ++x)
          s += sp[2].weight(a) * sp[4].weight(b) * sp[0].weight(x) * p(a, b) * q(a, x) * r(b, x);
    return s;
  };
  std::array<Matrix, 5> fv;
  for (int i = 0; i < 5; ++i) fv[i] = inst.f[i].values();
  const Matrix p = compose_values(oriented(inst.f, 2, 3), sp[3], masked(3, 4));
  const Matrix q = compose_values(oriented(inst.f, 2, 1), sp[1], masked(1, 0));
  const Matrix pt = truncate_above(p, inv_pow(eps, 1));
  const Matrix qt = truncate_above(q, inv_pow(eps, 2));
  const Matrix gp = compose_values(oriented(inst.g, 2, 3), sp[3], oriented(inst.g, 3, 4));
  const Matrix gq = compose_values(oriented(inst.g, 2, 1), sp[1], oriented(inst.g, 1, 0));
  const Matrix& f51 = inst.f[4].values();
  const Matrix& g51 = inst.g[4].values();
  const double l0 = cycle_product(sp, fv);
  const double l1 = triple(p, q, f51);
  const double l2 = triple(pt, qt, f51);
  const double l3 = triple(pt, qt, g51);
  const double l4 = triple(pt, gq, g51);
  const double l5 = triple(gp, gq, g51);
  check("chain_masking", l1 - l0, 0.0);
  check("chain_truncation", l2 - l1, 0.0);
  check("chain_last_edge", l3 - l2, eps);
  check("chain_second_path", l4 - l3, 5.0 * c * e2);
  check("chain_first_path", l5 - l4, 5.0 * c * eps);

  rep.holds = std::all_of(rep.checks.begin(), rep.checks.end(), [](const ChainCheck& x) { return x.holds; });
  return rep;
}

}  // namespace sparsereg
