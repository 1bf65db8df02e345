#include "zforce/graph.hpp"

#include <string>

#include "zforce/errors.hpp"

namespace zforce {

namespace {

void check_node(int n, Node v, const char* what) {
  if (v < 0 || v >= n) {
    throw GraphError(std::string(what) + " " + std::to_string(v + 1) + " out of range 1.." +
                     std::to_string(n));
  }
}

void check_size(int n) {
  if (n < 0) throw GraphError("negative node count");
}

}  // namespace

LabelGrid::LabelGrid(std::initializer_list<std::initializer_list<EntryLabel>> rows)
    : n_(static_cast<int>(rows.size())) {
  cells_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw GraphError("pattern grid is not square");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

// ---------------------------------------------------------------------------
// SignedDigraph

SignedDigraph::SignedDigraph(int n) : SignedDigraph(n, {}, {}) {}

SignedDigraph::SignedDigraph(int n, EdgeMap edges, LoopMap loops)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {
  check_size(n_);
  for (const auto& [arc, sign] : edges_) {
    check_node(n_, arc.first, "edge source");
    check_node(n_, arc.second, "edge target");
    if (arc.first == arc.second) throw GraphError("self-loops belong in the loop map, not as edges");
  }
  for (auto it = loops_.begin(); it != loops_.end();) {
    check_node(n_, it->first, "loop node");
    if (it->second == EntryLabel::zero) {
      it = loops_.erase(it);
      continue;
    }
    if (!in_sign_alphabet(it->second, true)) {
      throw AlphabetError("signed loop label must be +, - or ?, got '" +
                          std::string(to_token(it->second)) + "'");
    }
    ++it;
  }
  out_.resize(static_cast<std::size_t>(n_));
  for (const auto& [arc, sign] : edges_) {
    out_[static_cast<std::size_t>(arc.first)].push_back({arc.second, to_label(sign)});
  }
}

EntryLabel SignedDigraph::loop(Node v) const {
  auto it = loops_.find(v);
  return it == loops_.end() ? EntryLabel::zero : it->second;
}

std::optional<Sign> SignedDigraph::edge(Node from, Node to) const {
  auto it = edges_.find({from, to});
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

EntryLabel SignedDigraph::entry(Node row, Node col) const {
  if (row == col) return loop(row);
  auto s = edge(col, row);
  return s ? to_label(*s) : EntryLabel::zero;
}

// ---------------------------------------------------------------------------
// PatternDigraph

PatternDigraph::PatternDigraph(int n) : PatternDigraph(n, {}, {}) {}

PatternDigraph::PatternDigraph(int n, EdgeSet edges, LoopMap loops)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {
  check_size(n_);
  for (const auto& arc : edges_) {
    check_node(n_, arc.first, "edge source");
    check_node(n_, arc.second, "edge target");
    if (arc.first == arc.second) throw GraphError("self-loops belong in the loop map, not as edges");
  }
  for (auto it = loops_.begin(); it != loops_.end();) {
    check_node(n_, it->first, "loop node");
    if (it->second == EntryLabel::zero) {
      it = loops_.erase(it);
      continue;
    }
    if (!in_pattern_alphabet(it->second, true)) {
      throw AlphabetError("zero-nonzero loop label must be x or ?, got '" +
                          std::string(to_token(it->second)) + "'");
    }
    ++it;
  }
  out_.resize(static_cast<std::size_t>(n_));
  for (const auto& arc : edges_) {
    out_[static_cast<std::size_t>(arc.first)].push_back({arc.second, EntryLabel::cross});
  }
}

EntryLabel PatternDigraph::loop(Node v) const {
  auto it = loops_.find(v);
  return it == loops_.end() ? EntryLabel::zero : it->second;
}

EntryLabel PatternDigraph::entry(Node row, Node col) const {
  if (row == col) return loop(row);
  return has_edge(col, row) ? EntryLabel::cross : EntryLabel::zero;
}

// ---------------------------------------------------------------------------
// Pattern <-> graph

SignedDigraph from_sign_pattern(const LabelGrid& pattern) {
  const int n = pattern.size();
  SignedDigraph::EdgeMap edges;
  SignedDigraph::LoopMap loops;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const EntryLabel l = pattern(row, col);
      const bool diagonal = row == col;
      if (!in_sign_alphabet(l, diagonal)) {
        throw AlphabetError("sign pattern entry (" + std::to_string(row + 1) + "," +
                            std::to_string(col + 1) + ") = '" + std::string(to_token(l)) +
                            "' is not allowed");
      }
      if (l == EntryLabel::zero) continue;
      if (diagonal) {
        loops.emplace(row, l);
      } else {
        edges.emplace(std::pair{col, row}, *to_sign(l));
      }
    }
  }
  return SignedDigraph(n, std::move(edges), std::move(loops));
}

LabelGrid to_sign_pattern(const SignedDigraph& g) {
  LabelGrid grid(g.size());
  for (const auto& [arc, sign] : g.edges()) grid(arc.second, arc.first) = to_label(sign);
  for (const auto& [v, l] : g.loops()) grid(v, v) = l;
  return grid;
}

PatternDigraph from_zero_nonzero_pattern(const LabelGrid& pattern) {
  const int n = pattern.size();
  PatternDigraph::EdgeSet edges;
  PatternDigraph::LoopMap loops;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const EntryLabel l = pattern(row, col);
      const bool diagonal = row == col;
      if (!in_pattern_alphabet(l, diagonal)) {
        throw AlphabetError("zero-nonzero pattern entry (" + std::to_string(row + 1) + "," +
                            std::to_string(col + 1) + ") = '" + std::string(to_token(l)) +
                            "' is not allowed");
      }
      if (l == EntryLabel::zero) continue;
      if (diagonal) {
        loops.emplace(row, l);
      } else {
        edges.emplace(col, row);
      }
    }
  }
  return PatternDigraph(n, std::move(edges), std::move(loops));
}

LabelGrid to_zero_nonzero_pattern(const PatternDigraph& g) {
  LabelGrid grid(g.size());
  for (const auto& arc : g.edges()) grid(arc.second, arc.first) = EntryLabel::cross;
  for (const auto& [v, l] : g.loops()) grid(v, v) = l;
  return grid;
}

// ---------------------------------------------------------------------------
// Closures

PatternDigraph looped_cross(const PatternDigraph& g) {
  PatternDigraph::LoopMap loops;
  for (Node v = 0; v < g.size(); ++v) loops.emplace(v, label_add(g.loop(v), EntryLabel::cross));
  return PatternDigraph(g.size(), g.edges(), std::move(loops));
}

namespace {

SignedDigraph add_diagonal(const SignedDigraph& g, EntryLabel d) {
  SignedDigraph::LoopMap loops;
  for (Node v = 0; v < g.size(); ++v) loops.emplace(v, label_add(g.loop(v), d));
  return SignedDigraph(g.size(), g.edges(), std::move(loops));
}

}  // namespace

SignedDigraph looped_positive(const SignedDigraph& g) { return add_diagonal(g, EntryLabel::plus); }

SignedDigraph looped_negative(const SignedDigraph& g) { return add_diagonal(g, EntryLabel::minus); }

PatternDigraph underlying_pattern(const SignedDigraph& g) {
  PatternDigraph::EdgeSet edges;
  for (const auto& [arc, sign] : g.edges()) edges.insert(arc);
  PatternDigraph::LoopMap loops;
  for (const auto& [v, l] : g.loops()) {
    loops.emplace(v, l == EntryLabel::unknown ? EntryLabel::unknown : EntryLabel::cross);
  }
  return PatternDigraph(g.size(), std::move(edges), std::move(loops));
}

SignedDigraph symmetrized(const SignedDigraph& g) {
  SignedDigraph::EdgeMap edges = g.edges();
  for (const auto& [arc, sign] : g.edges()) {
    auto [it, inserted] = edges.emplace(std::pair{arc.second, arc.first}, sign);
    if (!inserted && it->second != sign) {
      throw GraphError("edges " + std::to_string(arc.first + 1) + "->" + std::to_string(arc.second + 1) +
                       " and its reverse carry opposite signs");
    }
  }
  return SignedDigraph(g.size(), std::move(edges), g.loops());
}

PatternDigraph symmetrized(const PatternDigraph& g) {
  PatternDigraph::EdgeSet edges = g.edges();
  for (const auto& arc : g.edges()) edges.emplace(arc.second, arc.first);
  return PatternDigraph(g.size(), std::move(edges), g.loops());
}

bool is_symmetric(const SignedDigraph& g) {
  for (const auto& [arc, sign] : g.edges()) {
    if (g.edge(arc.second, arc.first) != sign) return false;
  }
  return true;
}

}  // namespace zforce
