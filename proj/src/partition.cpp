#include "sparsereg/partition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace sparsereg {

Partition::Partition(std::size_t n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n, -1) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw std::invalid_argument("partition element " + std::to_string(x) + " out of range");
      }
      if (block_of_[x] != -1) {
        throw std::invalid_argument("partition element " + std::to_string(x) + " appears twice");
      }
      block_of_[x] = static_cast<int>(i);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (block_of_[x] == -1) {
      throw std::invalid_argument("partition does not cover element " + std::to_string(x));
    }
  }
}

Partition Partition::trivial(std::size_t n) {
  if (n == 0) return Partition(0, {});
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  return Partition(n, {std::move(all)});
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({static_cast<int>(i)});
  return Partition(n, std::move(blocks));
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> blocks;
  for (auto& [label, members] : groups) blocks.push_back(std::move(members));
  return Partition(labels.size(), std::move(blocks));
}

Partition Partition::refine(std::span<const char> a, std::span<const char> b) const {
  if (a.size() != n_ || b.size() != n_) throw std::invalid_argument("refine: indicator size mismatch");
  std::vector<std::vector<int>> out;
  for (const auto& block : blocks_) {
    std::vector<int> parts[4];
    for (int x : block) parts[(a[x] ? 2 : 0) + (b[x] ? 1 : 0)].push_back(x);
    for (auto& p : parts)
      if (!p.empty()) out.push_back(std::move(p));
  }
  return Partition(n_, std::move(out));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.n_ != n_) return false;
  for (const auto& b : blocks_) {
    const int target = coarser.block_of(b.front());
    for (int x : b)
      if (coarser.block_of(x) != target) return false;
  }
  return true;
}

LayeredGraph::LayeredGraph(Graph graph, std::vector<int> layer_of, std::size_t layer_count,
                           std::optional<std::vector<int>> sublabels)
    : graph_(std::move(graph)),
      layer_of_(std::move(layer_of)),
      layer_count_(layer_count),
      sublabels_(std::move(sublabels)) {
  if (layer_of_.size() != graph_.vertex_count()) {
    throw std::invalid_argument("layer assignment size does not match vertex count");
  }
  if (layer_count_ == 0 && graph_.vertex_count() > 0) throw std::invalid_argument("no layers");
  const int k = static_cast<int>(layer_count_);
  for (int l : layer_of_)
    if (l < 0 || l >= k) throw std::invalid_argument("layer index out of range");
  for (const Edge& e : graph_.edges()) {
    const int a = layer_of_[e.u];
    const int b = layer_of_[e.v];
    const bool ok = (b == (a + 1) % k) || (a == (b + 1) % k);
    if (!ok) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  "} does not join consecutive layers");
    }
  }
  if (sublabels_) {
    if (sublabels_->size() != graph_.vertex_count()) {
      throw std::invalid_argument("sublabel count does not match vertex count");
    }
    for (int s : *sublabels_)
      if (s < -1 || s > 4) throw std::invalid_argument("sublabels must lie in {0..4} or be -1");
  }
}

LayeredGraph LayeredGraph::cyclic(std::size_t layer_count, std::size_t layer_size,
                                  std::vector<Edge> edges) {
  std::vector<int> layer_of(layer_count * layer_size);
  for (std::size_t v = 0; v < layer_of.size(); ++v) layer_of[v] = static_cast<int>(v / layer_size);
  return LayeredGraph(Graph(layer_count * layer_size, std::move(edges)), std::move(layer_of),
                      layer_count);
}

std::vector<Vertex> LayeredGraph::layer(std::size_t i) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < layer_of_.size(); ++v)
    if (layer_of_[v] == static_cast<int>(i)) out.push_back(static_cast<Vertex>(v));
  return out;
}

const std::vector<int>& LayeredGraph::sublabels() const {
  if (!sublabels_) throw PreconditionError("layered graph has no sublabels");
  return *sublabels_;
}

bool LayeredGraph::sublabels_balanced() const {
  if (!sublabels_) return false;
  std::vector<std::array<std::size_t, 5>> counts(layer_count_, std::array<std::size_t, 5>{});
  std::vector<char> labelled(layer_count_, 0);
  for (std::size_t v = 0; v < layer_of_.size(); ++v) {
    const int s = (*sublabels_)[v];
    if (s < 0) continue;
    ++counts[layer_of_[v]][s];
    labelled[layer_of_[v]] = 1;
  }
  for (std::size_t l = 0; l < layer_count_; ++l) {
    if (!labelled[l]) continue;
    auto [lo, hi] = std::minmax_element(counts[l].begin(), counts[l].end());
    if (*hi - *lo > 1) return false;
  }
  return true;
}

LayeredGraph LayeredGraph::with_sublabels(std::vector<int> sublabels) const {
  return LayeredGraph(graph_, layer_of_, layer_count_, std::move(sublabels));
}

FiveSplit split_into_five(const Partition& parts, const Graph& g, std::size_t min_part,
                          std::uint64_t seed) {
  if (parts.ground_size() != g.vertex_count()) {
    throw std::invalid_argument("partition and graph sizes differ");
  }
  FiveSplit out;
  out.labels.assign(g.vertex_count(), -1);
  std::vector<char> small(g.vertex_count(), 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> members = parts.block(i);
    if (members.size() <= min_part) {
      for (int x : members) small[x] = 1;
      continue;
    }
    shuffle_in_place(members, rng);
    for (std::size_t k = 0; k < members.size(); ++k) out.labels[members[k]] = static_cast<int>(k % 5);
  }
  for (const Edge& e : g.edges())
    if (small[e.u] || small[e.v]) out.dropped.push_back(e);
  return out;
}

}  // namespace sparsereg
