#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "zforce/sign_algebra.hpp"

namespace zforce {

/// Node index. The library is 0-based; SGF files, the CLI and all reports
/// are 1-based.
using Node = int;
using NodeSet = std::set<Node>;

/// Dense n x n grid of pattern symbols, row-major. Entry (row, col) follows
/// matrix convention: a nonzero (row, col) entry is the edge col -> row.
class LabelGrid {
 public:
  LabelGrid() = default;
  explicit LabelGrid(int n, EntryLabel fill = EntryLabel::zero)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}
  LabelGrid(std::initializer_list<std::initializer_list<EntryLabel>> rows);

  int size() const noexcept { return n_; }
  EntryLabel& operator()(int row, int col) { return cells_[index(row, col)]; }
  EntryLabel operator()(int row, int col) const { return cells_[index(row, col)]; }

  friend bool operator==(const LabelGrid&, const LabelGrid&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int n_ = 0;
  std::vector<EntryLabel> cells_;
};

/// Outgoing arc v -> target; `label` is the matrix entry (target, v).
struct OutArc {
  Node target;
  EntryLabel label;
};

/// Signed digraph: off-diagonal edges carry + or -, self-loops carry +, - or
/// ?. An absent loop means a zero diagonal. Immutable once constructed.
class SignedDigraph {
 public:
  using EdgeMap = std::map<std::pair<Node, Node>, Sign>;
  using LoopMap = std::map<Node, EntryLabel>;

  explicit SignedDigraph(int n = 0);
  SignedDigraph(int n, EdgeMap edges, LoopMap loops = {});

  int size() const noexcept { return n_; }
  const EdgeMap& edges() const noexcept { return edges_; }
  const LoopMap& loops() const noexcept { return loops_; }

  EntryLabel loop(Node v) const;
  std::optional<Sign> edge(Node from, Node to) const;
  /// Sign-pattern entry (row, col).
  EntryLabel entry(Node row, Node col) const;
  /// Off-diagonal out-arcs of v, ascending by target.
  std::span<const OutArc> out_arcs(Node v) const { return out_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.loops_ == b.loops_;
  }

 private:
  int n_;
  EdgeMap edges_;
  LoopMap loops_;
  std::vector<std::vector<OutArc>> out_;
};

/// Zero-nonzero digraph: edges are x, loops are x or ?.
class PatternDigraph {
 public:
  using EdgeSet = std::set<std::pair<Node, Node>>;
  using LoopMap = std::map<Node, EntryLabel>;

  explicit PatternDigraph(int n = 0);
  PatternDigraph(int n, EdgeSet edges, LoopMap loops = {});

  int size() const noexcept { return n_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  const LoopMap& loops() const noexcept { return loops_; }

  EntryLabel loop(Node v) const;
  bool has_edge(Node from, Node to) const { return edges_.contains({from, to}); }
  EntryLabel entry(Node row, Node col) const;
  std::span<const OutArc> out_arcs(Node v) const { return out_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const PatternDigraph& a, const PatternDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.loops_ == b.loops_;
  }

 private:
  int n_;
  EdgeSet edges_;
  LoopMap loops_;
  std::vector<std::vector<OutArc>> out_;
};

SignedDigraph from_sign_pattern(const LabelGrid& pattern);
LabelGrid to_sign_pattern(const SignedDigraph& g);
PatternDigraph from_zero_nonzero_pattern(const LabelGrid& pattern);
LabelGrid to_zero_nonzero_pattern(const PatternDigraph& g);

/// Diagonal d -> d + x. Off-diagonal structure is untouched.
PatternDigraph looped_cross(const PatternDigraph& g);
/// Diagonal d -> d + (+).
SignedDigraph looped_positive(const SignedDigraph& g);
/// Diagonal d -> d + (-).
SignedDigraph looped_negative(const SignedDigraph& g);

/// Forgets edge and loop signs (+/- -> x, ? stays ?).
PatternDigraph underlying_pattern(const SignedDigraph& g);

/// Adds j -> i with the same sign for every edge i -> j. Throws GraphError if
/// a reverse edge already exists with the opposite sign.
SignedDigraph symmetrized(const SignedDigraph& g);
PatternDigraph symmetrized(const PatternDigraph& g);

bool is_symmetric(const SignedDigraph& g);

}  // namespace zforce
