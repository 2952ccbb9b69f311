#include "sparsereg/cutnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sparsereg/parallel.hpp"

namespace sparsereg {

std::string to_string(CutNormKind k) {
  return k == CutNormKind::Exact ? "exact" : "lower-bound";
}

void to_json(nlohmann::json& j, const CutNormResult& r) {
  j = nlohmann::json{{"value", r.value}, {"kind", to_string(r.kind)}, {"a", r.a}, {"b", r.b}};
}

double cut_value(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& f,
                 const std::vector<int>& a, const std::vector<int>& b) {
  double s = 0.0;
  for (int x : a) {
    double r = 0.0;
    for (int y : b) r += cols.weight(y) * f(x, y);
    s += rows.weight(x) * r;
  }
  return std::abs(s);
}

namespace {

void check_shape(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& f) {
  if (f.rows() != rows.size() || f.cols() != cols.size()) {
    throw std::invalid_argument("cut norm: matrix shape does not match its spaces");
  }
}

Matrix weighted(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& f) {
  Matrix w(f.rows(), f.cols());
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t y = 0; y < f.cols(); ++y) w(x, y) = rows.weight(x) * cols.weight(y) * f(x, y);
  return w;
}

// Row subsets are enumerated on the rows of w (at most 24 of them).
struct ExactBest {
  double value = -1.0;
  std::uint64_t mask = 0;
  int sign = 1;
};

CutNormResult exact_on_rows(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                            const Matrix& f) {
  const Matrix w = weighted(rows, cols, f);
  const std::size_t n1 = w.rows();
  const std::size_t n2 = w.cols();
  const std::size_t low_bits = std::min<std::size_t>(n1, 12);
  const std::size_t high_bits = n1 - low_bits;
  const std::size_t low_count = std::size_t{1} << low_bits;
  const std::size_t high_count = std::size_t{1} << high_bits;

  // Column sums for every subset of each half, built from the subset with
  // its top bit removed so every entry is an exact short sum.
  auto table = [&](std::size_t offset, std::size_t bits) {
    const std::size_t count = std::size_t{1} << bits;
    std::vector<double> t(count * n2, 0.0);
    for (std::size_t m = 1; m < count; ++m) {
      const std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(m));
      const std::size_t rest = m & ~(std::size_t{1} << top);
      for (std::size_t y = 0; y < n2; ++y) t[m * n2 + y] = t[rest * n2 + y] + w(offset + top, y);
    }
    return t;
  };
  const std::vector<double> low = table(0, low_bits);
  const std::vector<double> high = table(low_bits, high_bits);

  std::vector<ExactBest> partial(thread_count() + 1);
  const std::size_t used = parallel_chunks(high_count, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    ExactBest best;
    for (std::size_t hm = b; hm < e; ++hm) {
      for (std::size_t lm = 0; lm < low_count; ++lm) {
        double pos = 0.0, neg = 0.0;
        for (std::size_t y = 0; y < n2; ++y) {
          const double s = low[lm * n2 + y] + high[hm * n2 + y];
          if (s > 0) pos += s; else neg -= s;
        }
        const std::uint64_t mask = (static_cast<std::uint64_t>(hm) << low_bits) | lm;
        if (pos > best.value) best = {pos, mask, 1};
        if (neg > best.value) best = {neg, mask, -1};
      }
    }
    partial[chunk] = best;
  });
  ExactBest best;
  for (std::size_t c = 0; c < used; ++c)
    if (partial[c].value > best.value) best = partial[c];

  CutNormResult r;
  r.kind = CutNormKind::Exact;
  for (std::size_t x = 0; x < n1; ++x)
    if (best.mask >> x & 1U) r.a.push_back(static_cast<int>(x));
  for (std::size_t y = 0; y < n2; ++y) {
    double s = 0.0;
    for (int x : r.a) s += w(x, y);
    if (best.sign * s > 0) r.b.push_back(static_cast<int>(y));
  }
  r.value = cut_value(rows, cols, f, r.a, r.b);
  return r;
}

CutNormResult swap_sides(CutNormResult r) {
  std::swap(r.a, r.b);
  return r;
}

}  // namespace

CutNormResult cut_norm_exact(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                             const Matrix& f) {
  check_shape(rows, cols, f);
  if (std::min(rows.size(), cols.size()) > kExactCutNormLimit) {
    throw PreconditionError("exact cut norm needs a side with at most 24 points; use the heuristic");
  }
  if (rows.size() <= cols.size()) return exact_on_rows(rows, cols, f);
  return swap_sides(exact_on_rows(cols, rows, f.transposed()));
}

CutNormResult cut_norm_exact(const Kernel& f) {
  return cut_norm_exact(f.space(), f.space(), f.values());
}

CutNormResult cut_norm_exact(const BipartiteKernel& f) {
  return cut_norm_exact(f.left(), f.right(), f.values());
}

namespace {

struct Candidate {
  double value = -1.0;
  std::vector<int> a, b;
};

bool better(const Candidate& x, const Candidate& y) {
  if (x.value != y.value) return x.value > y.value;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

// Alternating maximisation of sign * E[w 1_A 1_B] from a given start set A.
Candidate climb(const Matrix& w, std::vector<char> in_a, int sign) {
  const std::size_t n1 = w.rows(), n2 = w.cols();
  double previous = -std::numeric_limits<double>::infinity();
  for (int round = 0; round < 1000; ++round) {
    std::vector<char> in_b(n2, 0);
    for (std::size_t y = 0; y < n2; ++y) {
      double s = 0.0;
      for (std::size_t x = 0; x < n1; ++x)
        if (in_a[x]) s += w(x, y);
      in_b[y] = sign * s > 0;
    }
    double value = 0.0;
    std::vector<char> next_a(n1, 0);
    for (std::size_t x = 0; x < n1; ++x) {
      double s = 0.0;
      for (std::size_t y = 0; y < n2; ++y)
        if (in_b[y]) s += w(x, y);
      next_a[x] = sign * s > 0;
      if (next_a[x]) value += sign * s;
    }
    const bool fixpoint = next_a == in_a;
    in_a = std::move(next_a);
    if (fixpoint || value <= previous) break;
    previous = value;
  }
  // Final best response of B to the chosen A keeps the witness consistent.
  Candidate c;
  for (std::size_t x = 0; x < n1; ++x)
    if (in_a[x]) c.a.push_back(static_cast<int>(x));
  for (std::size_t y = 0; y < n2; ++y) {
    double s = 0.0;
    for (int x : c.a) s += w(x, y);
    if (sign * s > 0) c.b.push_back(static_cast<int>(y));
  }
  return c;
}

}  // namespace

CutNormResult cut_norm_lower(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                             const Matrix& f, std::size_t restarts, std::uint64_t seed) {
  check_shape(rows, cols, f);
  if (restarts == 0) throw std::invalid_argument("cut_norm_lower needs at least one restart");
  const Matrix w = weighted(rows, cols, f);
  std::vector<Candidate> found(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    Rng rng(mix_seed(seed, r));
    std::vector<char> start(w.rows());
    // The first restart starts from the full row set, which is optimal for
    // constant kernels.
    for (auto& s : start) s = r == 0 ? 1 : static_cast<char>(rng() & 1U);
    Candidate best;
    for (int sign : {1, -1}) {
      Candidate c = climb(w, start, sign);
      c.value = cut_value(rows, cols, f, c.a, c.b);
      if (better(c, best)) best = std::move(c);
    }
    found[r] = std::move(best);
  });
  Candidate best;
  for (auto& c : found)
    if (better(c, best)) best = std::move(c);
  CutNormResult r;
  r.value = best.value;
  r.a = std::move(best.a);
  r.b = std::move(best.b);
  r.kind = CutNormKind::LowerBound;
  return r;
}

CutNormResult cut_norm_lower(const Kernel& f, std::size_t restarts, std::uint64_t seed) {
  return cut_norm_lower(f.space(), f.space(), f.values(), restarts, seed);
}

CutNormResult cut_norm_auto(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                            const Matrix& f, std::size_t restarts, std::uint64_t seed) {
  if (std::min(rows.size(), cols.size()) <= kExactCutNormLimit) return cut_norm_exact(rows, cols, f);
  return cut_norm_lower(rows, cols, f, restarts, seed);
}

}  // namespace sparsereg
