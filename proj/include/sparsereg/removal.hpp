#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sparsereg/common.hpp"
#include "sparsereg/graph.hpp"
#include "sparsereg/kernel.hpp"
#include "sparsereg/partition.hpp"

namespace sparsereg {

// Edges inside block pairs (V_i, V_j), i = j allowed, whose ordered-pair
// count e(V_i, V_j) is at least q |V_i| |V_j| (strictly above it when
// strict is set). Throws std::invalid_argument for q <= 0.
std::vector<Edge> dense_pair_edges(const Graph& g, const Partition& p, double q, bool strict = false);

struct ReducedKernels {
  Kernel f_tilde;  // f 1_{f_P <= K}
  Kernel g_tilde;  // f_P 1_{f_P <= K}
};

ReducedKernels reduced_kernel(const Kernel& f, const Partition& p, double k);

struct CycleTargets {
  bool c3 = false;
  bool c5 = true;
};

struct ReducedCleaning {
  // Removed block pairs (i <= j), in removal order.
  std::vector<std::pair<int, int>> removed;
  // E over the part measure of the removed kernel mass, both orientations.
  double l1_mass = 0.0;
  Kernel cleaned;
};

inline constexpr std::size_t kMaxReducedParts = 64;

// Zeroes block pairs of the step kernel (one point per part, weighted by part
// measure) until its support carries no closed 5-walk (and no closed 3-walk
// when targets.c3), hence t(C5, cleaned) = 0. Each round removes, among
// pairs lying on such a walk, the one with the least L1 mass (ties: smaller
// pair). Throws PreconditionError above kMaxReducedParts parts.
ReducedCleaning clean_reduced_c5(const Kernel& reduced, CycleTargets targets = {});

// Greedy hitting set: while a target cycle remains, delete an edge lying on
// the most target cycles (ties: smallest edge). Returns deleted edges.
std::vector<Edge> greedy_cycle_hitting(const Graph& g, CycleTargets targets);
std::vector<Edge> greedy_c5_hitting(const Graph& g);

struct RemovalConfig {
  double epsilon = 0.5;
  std::optional<double> k;      // default 8 / epsilon
  double c = 1.0;
  std::optional<double> p;      // default n^{-1/2}
  std::optional<double> delta;  // default 0.05 epsilon
  std::size_t min_part = kDefaultSmallPart;
  std::size_t regularity_budget = 3;  // 4^3 = 64 parts at most
  std::size_t restarts = 32;
  std::uint64_t seed = kDefaultSeed;
};

struct StageBudget {
  std::size_t deleted = 0;
  double budget = 0.0;
  bool within = false;
};

struct DeletionReport {
  std::vector<Edge> dense_pairs;
  std::vector<Edge> small_parts;
  std::vector<Edge> reduced_clean;
  std::vector<Edge> fallback;
  Graph final_graph;

  // Recomputed on the final graph by the counting module.
  std::uint64_t final_c5 = 0;
  std::optional<std::uint64_t> final_c3;

  bool already_free = false;
  bool regularity_converged = true;
  std::size_t parts = 0;
  double p = 0.0, k = 0.0, delta = 0.0, epsilon = 0.0;
  std::uint64_t labelled_c5 = 0;  // 5-cycles respecting the five-way split
  double reduced_l1_mass = 0.0;   // in units of g~
  bool small_part_dominates = false;
  StageBudget dense_budget, small_budget, reduced_budget;

  std::size_t total_deleted() const {
    return dense_pairs.size() + small_parts.size() + reduced_clean.size() + fallback.size();
  }
};

void to_json(nlohmann::json& j, const StageBudget& b);
void to_json(nlohmann::json& j, const DeletionReport& r);
// Same report without per-stage edge lists.
nlohmann::json summary_json(const DeletionReport& r);

// Throws PreconditionError for parameters outside their ranges, including
// p < 1 / (C sqrt(n)) or p > 1.
DeletionReport sparse_removal_pipeline(const Graph& g, const RemovalConfig& cfg, CycleTargets targets = {});

struct ThreePartChain {
  BigInt sum_codeg_sq;   // sum over pairs in V_i of codeg_{i-1}^2
  BigInt pairs;          // binom(n, 2)
  BigInt c4_between;     // 4-cycles between V_{i-1} and V_i
  BigInt three_part_c4;  // sum over pairs of codeg_{i-1} codeg_{i+1}
  BigInt n_squared;
  bool first_step = false;   // sum_codeg_sq <= pairs + 4 c4_between
  bool second_step = false;  // pairs + 4 c4_between <= n^2
};

// Codegree chain bounding 4-cycles across V_{i-1}, V_i, V_{i+1} of a layered
// graph, with n the largest layer size.
ThreePartChain three_part_c4_chain(const LayeredGraph& g, std::size_t i);

}  // namespace sparsereg
