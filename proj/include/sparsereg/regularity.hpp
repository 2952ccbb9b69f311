#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sparsereg/common.hpp"
#include "sparsereg/cutnorm.hpp"
#include "sparsereg/kernel.hpp"
#include "sparsereg/partition.hpp"

namespace sparsereg {

// x^2 on [0, 2], 4x - 4 beyond. Throws std::domain_error for x < 0.
double phi(double x);

// Block-pair averages of f over P, expanded back to a full kernel. Blocks of
// zero measure get value 0.
Kernel average_over(const Kernel& f, const Partition& p);

// Block-pair average matrix (|P| x |P|) and block measures.
struct BlockAverages {
  Matrix values;
  std::vector<double> measure;
};
BlockAverages block_averages(const Kernel& f, const Partition& p);

// E[phi(f_P)].
double energy(const Kernel& f, const Partition& p);

struct RegularityOptions {
  std::size_t budget = 64;  // maximum number of refinements
  std::size_t restarts = kDefaultRestarts;
  std::uint64_t seed = kDefaultSeed;
};

struct RegularityOutcome {
  Partition partition;
  CutNormResult residual;  // on (f - f_P) 1_{f_P <= 1} for the final partition
  std::size_t iterations = 0;
  std::vector<double> energy_trace;
  bool converged = false;
  double epsilon = 0.0;
  double mean = 0.0;  // E f, which drives the part and iteration bounds
};

void to_json(nlohmann::json& j, const RegularityOutcome& r);

// The truncated residual (f - f_P) 1_{f_P <= 1} as a signed matrix.
Matrix regularity_residual(const Kernel& f, const Partition& p);

// Energy-increment refinement starting from the trivial partition. Each
// accepted step is checked to raise the energy by at least eps^2/4 (a
// std::logic_error signals a broken invariant). Running out of budget returns
// the current partition with converged = false.
RegularityOutcome weak_regularity(const Kernel& f, double eps, const RegularityOptions& opts = {});

// Runs weak_regularity on f/K. `accuracy` is measured for f itself, so the
// scaled kernel is regularised at accuracy / K.
RegularityOutcome weak_regularity_scaled(const Kernel& f, double k, double accuracy,
                                         const RegularityOptions& opts = {});

// True when log2(parts) <= 32 E f / eps^2 and iterations <= 16 E f / eps^2.
bool within_regularity_bounds(const RegularityOutcome& r);

struct DefectSides {
  double lhs = 0.0;  // (E|X - mu|)^2 / 4
  double rhs = 0.0;  // E phi(X) - phi(mu)
};

// Both sides of the defect inequality for a finite distribution of
// (value, probability) pairs. Throws PreconditionError when the
// probabilities do not sum to 1, a value is negative, or the mean exceeds 1.
DefectSides defect_check(const std::vector<std::pair<double, double>>& distribution);

}  // namespace sparsereg
