#include <doctest.h>

#include "oracles.hpp"
#include "sparsereg/cutnorm.hpp"

using namespace sparsereg;

namespace {

Matrix random_signed(std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = 2.0 * uniform01(rng) - 1.0;
  return m;
}

ProbabilitySpace random_space(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double t = 0.0;
  for (auto& x : w) t += (x = 0.1 + uniform01(rng));
  for (auto& x : w) x /= t;
  return ProbabilitySpace(w);
}

}  // namespace

TEST_CASE("exact cut norm on small cases") {
  const auto u2 = ProbabilitySpace::uniform(2);
  const CutNormResult zero = cut_norm_exact(u2, u2, Matrix(2, 2));
  CHECK(zero.value == 0.0);
  CHECK(zero.a.empty());
  CHECK(zero.b.empty());

  const auto u3 = ProbabilitySpace::uniform(3);
  const CutNormResult c = cut_norm_exact(u3, u3, Matrix(3, 3, -0.7));
  CHECK(c.value == doctest::Approx(0.7));
  CHECK(c.a == std::vector<int>{0, 1, 2});
  CHECK(c.b == std::vector<int>{0, 1, 2});

  Matrix m(2, 2);
  m(0, 0) = m(1, 1) = 1.0;
  m(0, 1) = m(1, 0) = -1.0;
  const CutNormResult r = cut_norm_exact(u2, u2, m);
  CHECK(r.value == doctest::Approx(0.25));
  CHECK(r.a == std::vector<int>{0});
  CHECK(r.b == std::vector<int>{0});
  CHECK(r.kind == CutNormKind::Exact);
}

TEST_CASE("exact cut norm matches subset enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + uniform_below(rng, 6), c = 1 + uniform_below(rng, 6);
    const auto rows = random_space(r, rng), cols = random_space(c, rng);
    const Matrix m = random_signed(r, c, rng);
    const CutNormResult res = cut_norm_exact(rows, cols, m);
    CHECK(res.value == doctest::Approx(oracle::cut_norm(rows, cols, m)).epsilon(1e-12));
    CHECK(cut_value(rows, cols, m, res.a, res.b) == doctest::Approx(res.value));
  }
}

TEST_CASE("exact cut norm transposes when rows are the larger side") {
  Rng rng(32);
  const auto rows = ProbabilitySpace::uniform(30), cols = ProbabilitySpace::uniform(5);
  const Matrix m = random_signed(30, 5, rng);
  const CutNormResult res = cut_norm_exact(rows, cols, m);
  const CutNormResult t = cut_norm_exact(cols, rows, m.transposed());
  CHECK(res.value == doctest::Approx(t.value));
  CHECK(cut_value(rows, cols, m, res.a, res.b) == doctest::Approx(res.value));
  for (int x : res.a) CHECK(x < 30);
  CHECK_THROWS_AS(cut_norm_exact(ProbabilitySpace::uniform(25), ProbabilitySpace::uniform(25), Matrix(25, 25)),
                  PreconditionError);
}

TEST_CASE("heuristic is a lower bound and close on small instances") {
  Rng rng(33);
  double worst = 1.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = ProbabilitySpace::uniform(20);
    const Matrix m = random_signed(20, 20, rng);
    const double exact = cut_norm_exact(s, s, m).value;
    const CutNormResult low = cut_norm_lower(s, s, m, 32, trial);
    CHECK(low.kind == CutNormKind::LowerBound);
    CHECK(low.value <= exact + 1e-12);
    CHECK(cut_value(s, s, m, low.a, low.b) == doctest::Approx(low.value));
    worst = std::min(worst, low.value / exact);
  }
  CHECK(worst >= 0.9);

  const CutNormResult c = cut_norm_lower(Kernel::constant(8, 0.3), 1);
  CHECK(c.value == doctest::Approx(0.3));
}

TEST_CASE("heuristic is reproducible and thread-independent") {
  Rng rng(34);
  const auto s = ProbabilitySpace::uniform(50);
  const Matrix m = random_signed(50, 50, rng);
  const CutNormResult a = cut_norm_lower(s, s, m, 16, 9);
  const CutNormResult b = cut_norm_lower(s, s, m, 16, 9);
  CHECK(a.value == b.value);
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
  CHECK(cut_norm_auto(s, s, m, 16, 9).kind == CutNormKind::LowerBound);
  CHECK(cut_norm_auto(ProbabilitySpace::uniform(4), s, Matrix(4, 50), 16, 9).kind == CutNormKind::Exact);
}
