#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparsereg/common.hpp"
#include "sparsereg/graph.hpp"

namespace sparsereg {

// Partition of {0, ..., n-1} into nonempty disjoint blocks.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless the blocks are nonempty, disjoint and
  // cover [0, n). Blocks are stored sorted, ordered by their least element.
  Partition(std::size_t n, std::vector<std::vector<int>> blocks);

  static Partition trivial(std::size_t n);
  static Partition discrete(std::size_t n);
  // Builds a partition from a block label per point (labels need not be dense).
  static Partition from_labels(std::span<const int> labels);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  const std::vector<int>& block(std::size_t i) const { return blocks_[i]; }
  int block_of(std::size_t x) const { return block_of_[x]; }

  // Common refinement with the four-way split induced by membership in a and
  // b. Empty blocks are dropped.
  Partition refine(std::span<const char> a, std::span<const char> b) const;

  // True when every block of this partition lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.n_ == y.n_ && x.blocks_ == y.blocks_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// Graph whose vertices are split into k layers with every edge joining
// layers i and i+1 (mod k). With k = 1 every edge stays inside the single
// layer. Optional sublabels in {0, ..., 4} (or -1 for "unlabelled").
class LayeredGraph {
 public:
  LayeredGraph() = default;
  // Throws std::invalid_argument when an edge violates the layer structure
  // or sublabels are out of range.
  LayeredGraph(Graph graph, std::vector<int> layer_of, std::size_t layer_count,
               std::optional<std::vector<int>> sublabels = std::nullopt);

  // k layers of equal size `layer_size`; vertex (layer, index) has id
  // layer * layer_size + index.
  static LayeredGraph cyclic(std::size_t layer_count, std::size_t layer_size, std::vector<Edge> edges);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t layer_count() const noexcept { return layer_count_; }
  int layer_of(Vertex v) const { return layer_of_[v]; }
  std::vector<Vertex> layer(std::size_t i) const;
  bool has_sublabels() const noexcept { return sublabels_.has_value(); }
  const std::vector<int>& sublabels() const;

  // True when each layer's labelled classes differ in size by at most one.
  bool sublabels_balanced() const;

  LayeredGraph with_sublabels(std::vector<int> sublabels) const;

 private:
  Graph graph_;
  std::vector<int> layer_of_;
  std::size_t layer_count_ = 0;
  std::optional<std::vector<int>> sublabels_;
};

struct FiveSplit {
  // Class in {0, ..., 4} per vertex, or -1 for vertices in small parts.
  std::vector<int> labels;
  // Edges with an endpoint in a part of at most min_part vertices.
  std::vector<Edge> dropped;
};

inline constexpr std::size_t kDefaultSmallPart = 100;

// Splits every part with more than min_part vertices into five classes whose
// sizes differ by at most one (random order drawn from seed); edges touching
// smaller parts are returned as dropped.
FiveSplit split_into_five(const Partition& parts, const Graph& g,
                          std::size_t min_part = kDefaultSmallPart,
                          std::uint64_t seed = kDefaultSeed);

}  // namespace sparsereg
