#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

enum class Color : std::uint8_t { white, black };

/// Tentative relative sign of a white node; `star` means unmarked.
enum class Mark : std::uint8_t { star, plus, minus };

// ---------------------------------------------------------------------------
// Classical coloring rule

/// A black pivot, or a white pivot whose loop is not '?', with exactly one
/// white out-neighbour forces it. A white pivot with an x loop counts itself.
struct ClassicalForce {
  Node pivot;
  Node target;
};

/// Every force applicable in the given coloring, ascending by pivot.
std::vector<ClassicalForce> classical_forces(const PatternDigraph& g, const std::vector<Color>& color);

/// Fixpoint black set. The result does not depend on the order of forces.
NodeSet classical_derived_set(const PatternDigraph& g, const NodeSet& initially_black);

bool is_classical_zfs(const PatternDigraph& g, const NodeSet& z);

/// Classical zero forcing on looped_cross(g).
bool is_strong_zfs(const PatternDigraph& g, const NodeSet& z);

// ---------------------------------------------------------------------------
// Signing and coloring rule

/// One application of the signing and coloring rule.
///   clause 1: pivot has exactly one white out-neighbour, which turns black
///   clause 2: all white out-neighbours are marked with one orientation
///             relative to their edge sign; all of them turn black
///   clause 3: all but one white out-neighbour w are marked with a single
///             orientation s; w is marked with P(w, pivot) * inv(s)
///   clause 4: no white node is marked; a white node is marked +
/// Clause 4 has no pivot (pivot == -1).
struct Move {
  int clause = 0;
  Node pivot = -1;
  std::vector<Node> targets;
  std::optional<Sign> mark;

  friend bool operator==(const Move&, const Move&) = default;
};

using Trace = std::vector<Move>;

struct GameState {
  std::vector<Color> color;
  std::vector<Mark> mark;
  Trace trace;

  static GameState initial(int n, const NodeSet& black);

  NodeSet black() const;
  bool all_black() const;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Final colored and marked sets of a game run. Marks are kept on nodes that
/// were blackened after being marked; those are listed in `stale_marks`
/// since any claim about them is vacuous.
struct DerivedSets {
  NodeSet colored;
  std::map<Node, Sign> marked;
  NodeSet stale_marks;
  Trace trace;
};

enum class SearchMode { deterministic, exhaustive };

struct GameOptions {
  SearchMode mode = SearchMode::exhaustive;
  /// Exhaustive search is refused above this many nodes.
  int exhaustive_node_bound = 12;
  /// Distinct states the exhaustive search may visit.
  std::size_t state_budget = std::size_t{1} << 21;
};

/// Moves legal in `state` (all pivots, all clauses, every clause-4 choice),
/// ordered by clause then pivot then target.
std::vector<Move> legal_moves(const SignedDigraph& g, const GameState& state);

/// Applies `move` after checking it is legal; throws std::logic_error if not.
void apply_move(const SignedDigraph& g, GameState& state, const Move& move);

/// Re-executes a trace from the initial coloring; throws on an illegal move.
GameState replay(const SignedDigraph& g, const NodeSet& initially_black, const Trace& trace);

/// Runs the signing and coloring rule to termination.
///
/// Deterministic mode applies, until nothing applies, the first applicable
/// clause in priority 1 > 2 > 3 > 4 with pivots scanned in ascending order;
/// clause 4 marks the lowest-index white node.
///
/// Exhaustive mode explores every clause-3 and clause-4 choice and returns
/// the derivation with the largest final black set. Blackening moves
/// (clauses 1 and 2) are applied eagerly: they only shrink white
/// neighbourhoods, so a state with more black nodes and the same marks on
/// its white nodes can replay every derivation of the smaller one. Throws
/// ResourceLimitError above the node bound or the state budget.
DerivedSets signed_derived_sets(const SignedDigraph& g, const NodeSet& initially_black,
                                const GameOptions& options = {});

/// Outcome of a forcing-set predicate on a signed graph.
struct ForcingCheck {
  bool holds = false;
  /// False when the graph exceeded the exhaustive bounds and the verdict
  /// comes from a single deterministic derivation: `holds == true` is still
  /// sound, `holds == false` may be a miss.
  bool exhaustive = true;
  DerivedSets sets;
};

ForcingCheck check_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options = {});
/// Game played on looped_negative(g); certifies positive eigenvalues.
ForcingCheck check_positive_signed_zfs(const SignedDigraph& g, const NodeSet& z,
                                       const GameOptions& options = {});
/// Game played on looped_positive(g); certifies negative eigenvalues.
ForcingCheck check_negative_signed_zfs(const SignedDigraph& g, const NodeSet& z,
                                       const GameOptions& options = {});

bool is_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options = {});
bool is_positive_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options = {});
bool is_negative_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options = {});

/// One line per move, 1-based, e.g. "clause 3 pivot 4 -> 2 mark -".
std::string format_trace(const Trace& trace);

}  // namespace zforce
