#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsereg/common.hpp"
#include "sparsereg/kernel.hpp"

namespace sparsereg {

enum class CutNormKind { Exact, LowerBound };

std::string to_string(CutNormKind k);

struct CutNormResult {
  double value = 0.0;
  std::vector<int> a;  // row subset
  std::vector<int> b;  // column subset
  CutNormKind kind = CutNormKind::Exact;
};

void to_json(nlohmann::json& j, const CutNormResult& r);

// Largest smaller side accepted by the exact routine.
inline constexpr std::size_t kExactCutNormLimit = 24;
inline constexpr std::size_t kDefaultRestarts = 32;

// |E[f 1_A(x) 1_B(y)]| under the product measure.
double cut_value(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& f,
                 const std::vector<int>& a, const std::vector<int>& b);

// Exact cut norm of a signed matrix. Throws PreconditionError when both sides
// exceed kExactCutNormLimit points; use cut_norm_lower there.
CutNormResult cut_norm_exact(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                             const Matrix& f);
CutNormResult cut_norm_exact(const Kernel& f);
CutNormResult cut_norm_exact(const BipartiteKernel& f);

// Alternating maximisation from `restarts` random starts. Never exceeds the
// true cut norm.
CutNormResult cut_norm_lower(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                             const Matrix& f, std::size_t restarts = kDefaultRestarts,
                             std::uint64_t seed = kDefaultSeed);
CutNormResult cut_norm_lower(const Kernel& f, std::size_t restarts = kDefaultRestarts,
                             std::uint64_t seed = kDefaultSeed);

// Exact when feasible, heuristic otherwise.
CutNormResult cut_norm_auto(const ProbabilitySpace& rows, const ProbabilitySpace& cols,
                            const Matrix& f, std::size_t restarts = kDefaultRestarts,
                            std::uint64_t seed = kDefaultSeed);

}  // namespace sparsereg
