#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsereg/common.hpp"
#include "sparsereg/kernel.hpp"

namespace sparsereg {

// Largest space accepted by the certificates, which need exact cut norms.
inline constexpr std::size_t kCertificateSpaceLimit = 14;

// Five probability spaces V_0..V_4 with f[i], g[i] on V_i x V_{i+1 mod 5}.
struct CountingLemmaInstance {
  std::array<ProbabilitySpace, 5> spaces;
  std::array<BipartiteKernel, 5> f;
  std::array<BipartiteKernel, 5> g;
  double measured_epsilon = 0.0;  // max_i ||f_i - g_i||_cut^{1/4}
  double epsilon = 0.0;           // value used by the checks, >= measured
  double c = 1.0;                 // max(1, max_i ||f_{i-1} o f_i||_2^2)
};

void to_json(nlohmann::json& j, const CountingLemmaInstance& inst);

// Validates shapes and 0 <= g <= 1, then measures epsilon and C with exact
// cut norms. An epsilon override must lie in [measured, 1). Throws
// PreconditionError when a space exceeds kCertificateSpaceLimit points or the
// measured epsilon is not below 1.
CountingLemmaInstance make_counting_lemma_instance(std::array<BipartiteKernel, 5> f,
                                                   std::array<BipartiteKernel, 5> g,
                                                   std::optional<double> epsilon = std::nullopt);

enum class InstanceShape { BlockAverage, Perturbation };

// Seeded random instance with at most max_points points per space. Draws are
// repeated until the measured epsilon is below 1.
CountingLemmaInstance random_counting_lemma_instance(std::uint64_t seed, InstanceShape shape,
                                                     std::size_t max_points = 10);

// Multipartite 5-cycle density E prod_i h[i](x_i, x_{i+1}).
double cycle_product(const std::array<ProbabilitySpace, 5>& spaces,
                     const std::array<Matrix, 5>& h);

struct CountingLemmaResult {
  double lhs = 0.0;     // t(C5, f)
  double rhs = 0.0;     // t(C5, g) - 11 C eps
  double margin = 0.0;  // lhs - rhs
  bool holds = false;   // margin >= -1e-9
};

void to_json(nlohmann::json& j, const CountingLemmaResult& r);

CountingLemmaResult verify_counting_lemma(const CountingLemmaInstance& inst);

struct ChainCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool holds = false;  // value <= bound + 1e-9
};

void to_json(nlohmann::json& j, const ChainCheck& c);

struct TruncationChainReport {
  std::vector<ChainCheck> checks;
  bool holds = false;
};

void to_json(nlohmann::json& j, const TruncationChainReport& r);

// Every intermediate inequality of the counting-lemma argument: row-mean
// masks, cut-norm bounds for masked and truncated compositions on all ten
// oriented consecutive triples, and the five-step lower-bound chain.
TruncationChainReport verify_truncation_chain(const CountingLemmaInstance& inst);

}  // namespace sparsereg
