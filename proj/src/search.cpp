#include "zforce/search.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "zforce/errors.hpp"

namespace zforce {

std::string_view to_string(ForcingKind kind) noexcept {
  switch (kind) {
    case ForcingKind::classical: return "classical";
    case ForcingKind::strong: return "strong";
    case ForcingKind::signed_zfs: return "signed";
    case ForcingKind::positive_signed: return "positive";
    case ForcingKind::negative_signed: return "negative";
  }
  return "?";
}

std::optional<ForcingKind> parse_forcing_kind(std::string_view name) noexcept {
  if (name == "classical") return ForcingKind::classical;
  if (name == "strong") return ForcingKind::strong;
  if (name == "signed") return ForcingKind::signed_zfs;
  if (name == "positive" || name == "positive_signed") return ForcingKind::positive_signed;
  if (name == "negative" || name == "negative_signed") return ForcingKind::negative_signed;
  return std::nullopt;
}

namespace {

struct Evaluation {
  bool holds = false;
  bool exhaustive = true;
  std::size_t derived = 0;
};

using Evaluator = std::function<Evaluation(const NodeSet&)>;

Evaluator classical_evaluator(const PatternDigraph& g, ForcingKind kind) {
  if (is_signed_kind(kind)) {
    throw std::invalid_argument("forcing kind '" + std::string(to_string(kind)) +
                                "' needs a signed graph");
  }
  PatternDigraph played = kind == ForcingKind::strong ? looped_cross(g) : g;
  return [played = std::move(played)](const NodeSet& z) {
    const std::size_t derived = classical_derived_set(played, z).size();
    return Evaluation{static_cast<int>(derived) == played.size(), true, derived};
  };
}

Evaluator signed_evaluator(const SignedDigraph& g, ForcingKind kind, const GameOptions& game) {
  if (!is_signed_kind(kind)) return classical_evaluator(underlying_pattern(g), kind);
  return [g, kind, game](const NodeSet& z) {
    ForcingCheck c;
    switch (kind) {
      case ForcingKind::signed_zfs: c = check_signed_zfs(g, z, game); break;
      case ForcingKind::positive_signed: c = check_positive_signed_zfs(g, z, game); break;
      default: c = check_negative_signed_zfs(g, z, game); break;
    }
    return Evaluation{c.holds, c.exhaustive, c.sets.colored.size()};
  };
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<NodeSet> combinations(int n, int k) {
  std::vector<NodeSet> out;
  std::vector<Node> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.emplace(out.end(), idx.begin(), idx.end());
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

SearchResult exact_search(int n, const Evaluator& eval, const SearchOptions& options) {
  if (n > options.exact_node_bound) {
    throw ResourceLimitError("exact forcing-set search limited to " + std::to_string(options.exact_node_bound) +
                             " nodes, graph has " + std::to_string(n) + "; use the greedy heuristic");
  }
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  SearchResult result;
  result.exact = true;
  for (int k = 0; k <= n; ++k) {
    const std::vector<NodeSet> candidates = combinations(n, k);
    std::atomic<std::size_t> first{none};
    std::vector<char> inconclusive(candidates.size(), 0);
    detail::parallel_for(candidates.size(), options.jobs, [&](std::size_t i) {
      if (i > first.load()) return;
      const Evaluation e = eval(candidates[i]);
      if (e.holds) {
        std::size_t cur = first.load();
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
      } else if (!e.exhaustive) {
        inconclusive[i] = 1;
      }
    });
    const std::size_t hit = first.load();
    const std::size_t examined = hit == none ? candidates.size() : hit + 1;
    result.nodes_explored += examined;
    for (std::size_t i = 0; i < examined && i < candidates.size(); ++i) {
      if (inconclusive[i]) result.exact = false;
    }
    if (hit != none) {
      result.minimum_size = k;
      result.witness = candidates[hit];
      return result;
    }
  }
  // Unreachable: the full node set always passes.
  throw std::logic_error("no forcing set found, not even the full node set");
}

SearchResult greedy_search(int n, const Evaluator& eval) {
  SearchResult result;
  NodeSet z;
  Evaluation current = eval(z);
  ++result.nodes_explored;
  while (!current.holds) {
    Node pick = -1;
    Evaluation best;
    for (Node v = 0; v < n; ++v) {
      if (z.contains(v)) continue;
      NodeSet trial = z;
      trial.insert(v);
      const Evaluation e = eval(trial);
      ++result.nodes_explored;
      // holds <=> derived == n, so the largest derived set also prefers passing sets
      if (pick < 0 || e.derived > best.derived) {
        pick = v;
        best = e;
      }
    }
    z.insert(pick);
    current = best;
  }
  result.minimum_size = static_cast<int>(z.size());
  result.witness = std::move(z);
  result.exact = false;
  return result;
}

}  // namespace

bool passes(const SignedDigraph& g, ForcingKind kind, const NodeSet& z, const GameOptions& game) {
  return signed_evaluator(g, kind, game)(z).holds;
}

bool passes(const PatternDigraph& g, ForcingKind kind, const NodeSet& z) { return classical_evaluator(g, kind)(z).holds; }

SearchResult min_forcing_set(const SignedDigraph& g, ForcingKind kind, const SearchOptions& options) {
  return exact_search(g.size(), signed_evaluator(g, kind, options.game), options);
}

SearchResult min_forcing_set(const PatternDigraph& g, ForcingKind kind, const SearchOptions& options) {
  return exact_search(g.size(), classical_evaluator(g, kind), options);
}

SearchResult greedy_forcing_set(const SignedDigraph& g, ForcingKind kind, const SearchOptions& options) {
  return greedy_search(g.size(), signed_evaluator(g, kind, options.game));
}

SearchResult greedy_forcing_set(const PatternDigraph& g, ForcingKind kind, const SearchOptions&) {
  return greedy_search(g.size(), classical_evaluator(g, kind));
}

}  // namespace zforce
