#include <doctest.h>

#include "oracles.hpp"
#include "sparsereg/constructions.hpp"
#include "sparsereg/regularity.hpp"

using namespace sparsereg;

TEST_CASE("phi") {
  CHECK(phi(1.0) == 1.0);
  CHECK(phi(2.0) == 4.0);
  CHECK(phi(3.0) == 8.0);
  CHECK(phi(0.0) == 0.0);
  CHECK_THROWS_AS(phi(-0.1), std::domain_error);
}

TEST_CASE("averaging over partitions") {
  Matrix m(4, 4);
  const double v[4][4] = {{0, 1, 2, 3}, {1, 0, 4, 5}, {2, 4, 0, 6}, {3, 5, 6, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[i][j];
  const Kernel f(ProbabilitySpace::uniform(4), m);

  const Kernel t = average_over(f, Partition::trivial(4));
  for (double x : t.values().data()) CHECK(x == doctest::Approx(f.mean()));
  CHECK(average_over(f, Partition::discrete(4)).values() == m);

  // Blocks {0,1} and {2,3}: within-block means (0+1+1+0)/4 and (0+6+6+0)/4,
  // cross mean (2+3+4+5)/4.
  const Kernel two = average_over(f, Partition(4, {{0, 1}, {2, 3}}));
  CHECK(two(0, 1) == doctest::Approx(0.5));
  CHECK(two(2, 3) == doctest::Approx(3.0));
  CHECK(two(0, 3) == doctest::Approx(3.5));
  CHECK(two(3, 0) == doctest::Approx(3.5));
}

TEST_CASE("energy") {
  CHECK(energy(Kernel::constant(5, 1.0), Partition::discrete(5)) == doctest::Approx(1.0));
  CHECK(energy(Kernel::constant(5, 3.0), Partition::trivial(5)) == doctest::Approx(8.0));
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = oracle::random_graph(8, 0.4, rng);
    const Kernel f = graph_to_kernel(g, 0.25);
    std::vector<int> labels(8);
    for (auto& l : labels) l = static_cast<int>(uniform_below(rng, 3));
    const Partition p = Partition::from_labels(labels);
    double brute = 0.0;
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) {
        double s = 0.0;
        int cnt = 0;
        for (int a : p.block(p.block_of(x)))
          for (int b : p.block(p.block_of(y))) {
            s += f(a, b);
            ++cnt;
          }
        brute += phi(s / cnt) / 64.0;
      }
    CHECK(energy(f, p) == doctest::Approx(brute));
  }
}

TEST_CASE("weak regularity on structured kernels") {
  const RegularityOutcome c = weak_regularity(Kernel::constant(6, 0.8), 0.2);
  CHECK(c.partition.size() == 1);
  CHECK(c.iterations == 0);
  CHECK(c.residual.value == doctest::Approx(0.0));
  CHECK(c.converged);

  const Graph kb = complete_bipartite(5, 7);
  const double p = 2.0 * 35.0 / 144.0;
  const RegularityOutcome r = weak_regularity(graph_to_kernel(kb, p), 0.2);
  CHECK(r.converged);
  CHECK(r.iterations <= 2);
  const Kernel f = graph_to_kernel(kb, p);
  CHECK(cut_norm_exact(ProbabilitySpace::uniform(12), ProbabilitySpace::uniform(12),
                       regularity_residual(f, r.partition))
            .value == doctest::Approx(0.0).epsilon(1e-12));
  for (const auto& block : r.partition.blocks()) {
    const bool left = block.front() < 5;
    for (int v : block) CHECK((v < 5) == left);
  }
}

TEST_CASE("weak regularity contract on random sparse graphs") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = gnp(40, 0.25, seed);
    const Kernel f = graph_to_kernel(g, 0.25);
    const RegularityOutcome r = weak_regularity(f, 0.2, {64, 16, seed});
    CHECK(within_regularity_bounds(r));
    for (std::size_t i = 1; i < r.energy_trace.size(); ++i)
      CHECK(r.energy_trace[i] - r.energy_trace[i - 1] >= 0.01 - 1e-12);
    if (r.converged) CHECK(r.residual.value <= 0.2);
  }
}

TEST_CASE("scaled regularity runs on f/K") {
  const Graph g = gnp(30, 0.3, 3);
  const Kernel f = graph_to_kernel(g, 0.3);
  const RegularityOutcome r = weak_regularity_scaled(f, 2.0, 0.4);
  CHECK(r.epsilon == doctest::Approx(0.2));
  CHECK(r.mean == doctest::Approx(f.mean() / 2.0));
}

TEST_CASE("budget exhaustion returns a partial outcome") {
  const Graph g = gnp(40, 0.3, 8);
  const RegularityOutcome r = weak_regularity(graph_to_kernel(g, 0.5), 0.05, {1, 8, 1});
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 1);
}

TEST_CASE("defect inequality") {
  const DefectSides c = defect_check({{0.7, 1.0}});
  CHECK(c.lhs == 0.0);
  CHECK(c.rhs == doctest::Approx(0.0));
  const DefectSides a = defect_check({{0.0, 0.5}, {2.0, 0.5}});
  CHECK(a.lhs == doctest::Approx(0.25));
  CHECK(a.rhs == doctest::Approx(1.0));
  const DefectSides b = defect_check({{0.0, 0.5}, {1.0, 0.5}});
  CHECK(b.lhs == doctest::Approx(1.0 / 16));
  CHECK(b.rhs == doctest::Approx(0.25));
  CHECK_THROWS_AS(defect_check({{3.0, 1.0}}), PreconditionError);
  CHECK_THROWS_AS(defect_check({{0.5, 0.7}}), PreconditionError);
  CHECK_THROWS_AS(defect_check({{-0.5, 1.0}}), PreconditionError);
}
