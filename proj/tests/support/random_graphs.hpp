#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(items.size()) - 1))];
}

inline const std::vector<EntryLabel> signed_loops{EntryLabel::zero, EntryLabel::plus, EntryLabel::minus,
                                                  EntryLabel::unknown};
inline const std::vector<EntryLabel> pattern_loops{EntryLabel::zero, EntryLabel::cross, EntryLabel::unknown};

inline SignedDigraph random_signed(Rng& rng, int n, double density,
                                   const std::vector<EntryLabel>& loops = signed_loops) {
  SignedDigraph::EdgeMap edges;
  SignedDigraph::LoopMap loop_map;
  for (Node i = 0; i < n; ++i) {
    loop_map[i] = pick(rng, loops);
    for (Node j = 0; j < n; ++j) {
      if (i != j && uniform(rng, 0, 1) < density) edges[{i, j}] = uniform_int(rng, 0, 1) ? Sign::plus : Sign::minus;
    }
  }
  return SignedDigraph(n, edges, loop_map);
}

inline SignedDigraph random_symmetric_signed(Rng& rng, int n, double density,
                                             const std::vector<EntryLabel>& loops = signed_loops) {
  SignedDigraph::EdgeMap edges;
  SignedDigraph::LoopMap loop_map;
  for (Node i = 0; i < n; ++i) {
    loop_map[i] = pick(rng, loops);
    for (Node j = i + 1; j < n; ++j) {
      if (uniform(rng, 0, 1) < density) {
        const Sign s = uniform_int(rng, 0, 1) ? Sign::plus : Sign::minus;
        edges[{i, j}] = s;
        edges[{j, i}] = s;
      }
    }
  }
  return SignedDigraph(n, edges, loop_map);
}

inline PatternDigraph random_pattern(Rng& rng, int n, double density,
                                     const std::vector<EntryLabel>& loops = pattern_loops) {
  PatternDigraph::EdgeSet edges;
  PatternDigraph::LoopMap loop_map;
  for (Node i = 0; i < n; ++i) {
    loop_map[i] = pick(rng, loops);
    for (Node j = 0; j < n; ++j) {
      if (i != j && uniform(rng, 0, 1) < density) edges.insert({i, j});
    }
  }
  return PatternDigraph(n, edges, loop_map);
}

/// Uniformly random subset with size in [lo, hi].
inline NodeSet random_subset(Rng& rng, int n, int lo, int hi) {
  std::vector<Node> nodes(static_cast<std::size_t>(n));
  for (Node v = 0; v < n; ++v) nodes[static_cast<std::size_t>(v)] = v;
  std::shuffle(nodes.begin(), nodes.end(), rng);
  const int k = uniform_int(rng, lo, hi);
  return NodeSet(nodes.begin(), nodes.begin() + k);
}

}  // namespace zforce::test
