#pragma once

// Isomorphism classes of small graphs (n <= 10) for exhaustive tests.
//
// A graph is a vector of neighbourhood bitmasks. Its canonical code is the
// largest upper-triangle adjacency code over all leaves of an
// individualise-and-refine search; since both the refinement and the choice
// of target cell only look at label-free data, the leaf set is an invariant
// and so is its maximum. Classes on n + 1 vertices are obtained by adding a
// vertex with every possible neighbourhood to each class on n vertices and
// deduplicating codes.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace graph_classes {

using Masks = std::vector<std::uint32_t>;

// Bit position of pair (i, j), i < j, ordered by j then i.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline std::uint64_t code_under(const Masks& g, const std::vector<int>& label) {
  const int n = static_cast<int>(g.size());
  std::uint64_t code = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g[u] >> v & 1) {
        int a = label[u], b = label[v];
        if (a > b) std::swap(a, b);
        code |= 1ULL << pair_bit(a, b);
      }
  return code;
}

inline Masks from_code(std::uint64_t code, int n) {
  Masks g(n, 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code >> pair_bit(i, j) & 1) {
        g[i] |= 1u << j;
        g[j] |= 1u << i;
      }
  return g;
}

namespace detail {

// Ordered partition of the vertex set, one bitmask per cell.
struct Cells {
  std::uint32_t cell[16];
  int count;
};

// Splits cells by neighbour counts into each cell until stable. Sub-cells are
// ordered by count, so the result depends only on the labelled structure.
inline void refine(const Masks& g, Cells& c) {
  for (int s = 0; s < c.count;) {
    const std::uint32_t splitter = c.cell[s];
    Cells next;
    next.count = 0;
    for (int i = 0; i < c.count; ++i) {
      const std::uint32_t cell = c.cell[i];
      if (__builtin_popcount(cell) == 1) {
        next.cell[next.count++] = cell;
        continue;
      }
      std::uint32_t by_count[17] = {};
      for (std::uint32_t rest = cell; rest; rest &= rest - 1) {
        const int v = __builtin_ctz(rest);
        by_count[__builtin_popcount(g[v] & splitter)] |= 1u << v;
      }
      for (int k = 0; k < 17; ++k)
        if (by_count[k]) next.cell[next.count++] = by_count[k];
    }
    if (next.count != c.count) {
      c = next;
      s = 0;
    } else {
      ++s;
    }
  }
}

inline void search(const Masks& g, Cells c, std::uint64_t& best) {
  refine(g, c);
  int target = -1;
  for (int i = 0; i < c.count; ++i)
    if (__builtin_popcount(c.cell[i]) > 1) {
      target = i;
      break;
    }
  if (target < 0) {
    std::vector<int> label(g.size());
    for (int i = 0; i < c.count; ++i) label[__builtin_ctz(c.cell[i])] = i;
    best = std::max(best, code_under(g, label));
    return;
  }
  for (std::uint32_t rest = c.cell[target]; rest; rest &= rest - 1) {
    const int v = __builtin_ctz(rest);
    Cells child;
    child.count = 0;
    for (int i = 0; i < c.count; ++i) {
      if (i != target) {
        child.cell[child.count++] = c.cell[i];
      } else {
        child.cell[child.count++] = 1u << v;
        child.cell[child.count++] = c.cell[i] & ~(1u << v);
      }
    }
    search(g, child, best);
  }
}

}  // namespace detail

inline std::uint64_t canonical_code(const Masks& g) {
  if (g.empty()) return 0;
  detail::Cells c;
  c.count = 1;
  c.cell[0] = (1u << g.size()) - 1;
  std::uint64_t best = 0;
  detail::search(g, c, best);
  return best;
}

// Canonical codes of all graphs on exactly n vertices, one per class, sorted.
inline std::vector<std::uint64_t> classes(int n, unsigned threads = std::thread::hardware_concurrency()) {
  std::vector<std::uint64_t> level{0};  // the single graph on one vertex
  if (n <= 1) return level;
  for (int k = 1; k < n; ++k) {
    const unsigned t = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> out(t);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < level.size(); i += t) {
          const Masks base = from_code(level[i], k);
          for (std::uint32_t s = 0; s < (1u << k); ++s) {
            Masks g = base;
            g.push_back(s);
            for (int v = 0; v < k; ++v)
              if (s >> v & 1) g[v] |= 1u << k;
            out[w].push_back(canonical_code(g));
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    std::vector<std::uint64_t> next;
    for (auto& part : out) next.insert(next.end(), part.begin(), part.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

}  // namespace graph_classes
