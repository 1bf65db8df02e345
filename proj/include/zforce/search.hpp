#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "zforce/forcing.hpp"
#include "zforce/graph.hpp"

namespace zforce {

enum class ForcingKind { classical, strong, signed_zfs, positive_signed, negative_signed };

std::string_view to_string(ForcingKind kind) noexcept;
/// Accepts "classical", "strong", "signed", "positive", "negative" (and the
/// long forms "positive_signed", "negative_signed").
std::optional<ForcingKind> parse_forcing_kind(std::string_view name) noexcept;

constexpr bool is_signed_kind(ForcingKind kind) noexcept {
  return kind != ForcingKind::classical && kind != ForcingKind::strong;
}

struct SearchResult {
  int minimum_size = 0;
  NodeSet witness;
  /// Subsets (exact search) or derived-set evaluations (greedy) examined.
  std::size_t nodes_explored = 0;
  /// True only for a completed exact search whose every signed-game verdict
  /// came from exhaustive mode.
  bool exact = false;
};

struct SearchOptions {
  int exact_node_bound = 12;
  GameOptions game;
  unsigned jobs = 1;
};

/// Predicate dispatch. Signed kinds on a signed graph; classical and strong
/// kinds use the graph's underlying zero-nonzero pattern.
bool passes(const SignedDigraph& g, ForcingKind kind, const NodeSet& z, const GameOptions& game = {});
/// Only classical and strong kinds; throws std::invalid_argument otherwise.
bool passes(const PatternDigraph& g, ForcingKind kind, const NodeSet& z);

/// Minimum forcing set by subset enumeration in (size, lexicographic) order.
/// Throws ResourceLimitError above `exact_node_bound`.
SearchResult min_forcing_set(const SignedDigraph& g, ForcingKind kind, const SearchOptions& options = {});
SearchResult min_forcing_set(const PatternDigraph& g, ForcingKind kind, const SearchOptions& options = {});

/// Grows a set by the node whose addition blackens the most nodes (ties to
/// the lowest index) until it passes. Always returns a passing witness.
SearchResult greedy_forcing_set(const SignedDigraph& g, ForcingKind kind, const SearchOptions& options = {});
SearchResult greedy_forcing_set(const PatternDigraph& g, ForcingKind kind, const SearchOptions& options = {});

}  // namespace zforce
