#include "zforce/forcing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "zforce/errors.hpp"

namespace zforce {

namespace {

bool is_white(const std::vector<Color>& color, Node v) {
  return color[static_cast<std::size_t>(v)] == Color::white;
}

void check_subset(int n, const NodeSet& z) {
  for (Node v : z) {
    if (v < 0 || v >= n) {
      throw GraphError("node " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Classical

std::vector<ClassicalForce> classical_forces(const PatternDigraph& g, const std::vector<Color>& color) {
  std::vector<ClassicalForce> forces;
  for (Node v = 0; v < g.size(); ++v) {
    const EntryLabel loop = g.loop(v);
    const bool white_pivot = is_white(color, v);
    if (white_pivot && loop == EntryLabel::unknown) continue;
    int whites = 0;
    Node only = -1;
    if (white_pivot && loop == EntryLabel::cross) {
      ++whites;
      only = v;
    }
    for (const OutArc& arc : g.out_arcs(v)) {
      if (is_white(color, arc.target)) {
        ++whites;
        only = arc.target;
      }
      if (whites > 1) break;
    }
    if (whites == 1) forces.push_back({v, only});
  }
  return forces;
}

NodeSet classical_derived_set(const PatternDigraph& g, const NodeSet& initially_black) {
  check_subset(g.size(), initially_black);
  std::vector<Color> color(static_cast<std::size_t>(g.size()), Color::white);
  for (Node v : initially_black) color[static_cast<std::size_t>(v)] = Color::black;
  for (;;) {
    const auto forces = classical_forces(g, color);
    if (forces.empty()) break;
    // Forces stay valid (or become redundant) as other nodes turn black.
    for (const ClassicalForce& f : forces) color[static_cast<std::size_t>(f.target)] = Color::black;
  }
  NodeSet black;
  for (Node v = 0; v < g.size(); ++v) {
    if (!is_white(color, v)) black.insert(v);
  }
  return black;
}

bool is_classical_zfs(const PatternDigraph& g, const NodeSet& z) {
  return static_cast<int>(classical_derived_set(g, z).size()) == g.size();
}

bool is_strong_zfs(const PatternDigraph& g, const NodeSet& z) { return is_classical_zfs(looped_cross(g), z); }

// ---------------------------------------------------------------------------
// GameState

GameState GameState::initial(int n, const NodeSet& black) {
  check_subset(n, black);
  GameState s;
  s.color.assign(static_cast<std::size_t>(n), Color::white);
  s.mark.assign(static_cast<std::size_t>(n), Mark::star);
  for (Node v : black) s.color[static_cast<std::size_t>(v)] = Color::black;
  return s;
}

NodeSet GameState::black() const {
  NodeSet out;
  for (std::size_t v = 0; v < color.size(); ++v) {
    if (color[v] == Color::black) out.insert(static_cast<Node>(v));
  }
  return out;
}

bool GameState::all_black() const {
  return std::all_of(color.begin(), color.end(), [](Color c) { return c == Color::black; });
}

// ---------------------------------------------------------------------------
// Signing and coloring rule

namespace {

Mark to_mark(Sign s) { return s == Sign::plus ? Mark::plus : Mark::minus; }

/// White out-neighbourhood W(v) split by mark orientation.
struct PivotView {
  std::vector<Node> white;
  std::vector<Node> same;      // m(u) == P(u, v)
  std::vector<Node> opposite;  // m(u) == inv(P(u, v))
  std::vector<Node> unmarked;
};

class SignedRule {
 public:
  explicit SignedRule(const SignedDigraph& g) : g_(g) {}

  int size() const { return g_.size(); }

  bool eligible(const GameState& s, Node v) const {
    return !is_white(s.color, v) || g_.loop(v) != EntryLabel::unknown;
  }

  PivotView view(const GameState& s, Node v) const {
    PivotView pv;
    const EntryLabel loop = g_.loop(v);
    bool self_pending = is_white(s.color, v) && (loop == EntryLabel::plus || loop == EntryLabel::minus);
    auto classify = [&](Node u, EntryLabel label) {
      pv.white.push_back(u);
      const Mark m = s.mark[static_cast<std::size_t>(u)];
      if (m == Mark::star) {
        pv.unmarked.push_back(u);
      } else if (m == to_mark(*to_sign(label))) {
        pv.same.push_back(u);
      } else {
        pv.opposite.push_back(u);
      }
    };
    for (const OutArc& arc : g_.out_arcs(v)) {
      if (self_pending && arc.target > v) {
        classify(v, loop);
        self_pending = false;
      }
      if (is_white(s.color, arc.target)) classify(arc.target, arc.label);
    }
    if (self_pending) classify(v, loop);
    return pv;
  }

  /// The move clause `clause` (1..3) yields at pivot v, if any.
  std::optional<Move> pivot_move(const GameState& s, Node v, int clause) const {
    if (!eligible(s, v)) return std::nullopt;
    const PivotView pv = view(s, v);
    return pivot_move(pv, v, clause);
  }

  std::optional<Move> pivot_move(const PivotView& pv, Node v, int clause) const {
    switch (clause) {
      case 1:
        if (pv.white.size() == 1) return Move{1, v, pv.white, std::nullopt};
        break;
      case 2:
        if (!pv.white.empty() && pv.unmarked.empty() && (pv.same.empty() || pv.opposite.empty())) {
          return Move{2, v, pv.white, std::nullopt};
        }
        break;
      case 3:
        if (pv.unmarked.size() == 1 && pv.same.empty() != pv.opposite.empty()) {
          const Sign s = pv.same.empty() ? Sign::minus : Sign::plus;
          const Node w = pv.unmarked.front();
          const Sign edge = *to_sign(g_.entry(w, v));
          return Move{3, v, {w}, sign_mul(edge, inv(s))};
        }
        break;
      default: break;
    }
    return std::nullopt;
  }

  static bool any_white_marked(const GameState& s) {
    for (std::size_t v = 0; v < s.color.size(); ++v) {
      if (s.color[v] == Color::white && s.mark[v] != Mark::star) return true;
    }
    return false;
  }

  static void apply_unchecked(GameState& s, const Move& m) {
    if (m.clause == 1 || m.clause == 2) {
      for (Node u : m.targets) s.color[static_cast<std::size_t>(u)] = Color::black;
    } else {
      s.mark[static_cast<std::size_t>(m.targets.front())] = to_mark(*m.mark);
    }
    s.trace.push_back(m);
  }

  bool legal(const GameState& s, const Move& m) const {
    if (m.clause == 4) {
      if (m.targets.size() != 1 || m.mark != Sign::plus) return false;
      const Node u = m.targets.front();
      return u >= 0 && u < size() && is_white(s.color, u) && !any_white_marked(s);
    }
    if (m.clause < 1 || m.clause > 3 || m.pivot < 0 || m.pivot >= size()) return false;
    const auto expected = pivot_move(s, m.pivot, m.clause);
    return expected && *expected == m;
  }

  /// Applies clause 1 and 2 moves until none is applicable.
  void saturate(GameState& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Node v = 0; v < size(); ++v) {
        if (!eligible(s, v)) continue;
        const PivotView pv = view(s, v);
        for (int clause : {1, 2}) {
          if (auto m = pivot_move(pv, v, clause)) {
            apply_unchecked(s, *m);
            changed = true;
            break;
          }
        }
      }
    }
  }

  /// Clause 3 and clause 4 moves; clause 3 moves with identical effect are
  /// reported once.
  std::vector<Move> branching_moves(const GameState& s) const {
    std::vector<Move> moves;
    std::set<std::pair<Node, Sign>> effects;
    for (Node v = 0; v < size(); ++v) {
      auto m = pivot_move(s, v, 3);
      if (m && effects.emplace(m->targets.front(), *m->mark).second) moves.push_back(std::move(*m));
    }
    if (!any_white_marked(s)) {
      for (Node u = 0; u < size(); ++u) {
        if (is_white(s.color, u)) moves.push_back(Move{4, -1, {u}, Sign::plus});
      }
    }
    return moves;
  }

  void run_deterministic(GameState& s) const {
    for (;;) {
      std::optional<Move> next;
      for (int clause = 1; clause <= 3 && !next; ++clause) {
        for (Node v = 0; v < size() && !next; ++v) next = pivot_move(s, v, clause);
      }
      if (!next && !any_white_marked(s)) {
        for (Node u = 0; u < size(); ++u) {
          if (is_white(s.color, u)) {
            next = Move{4, -1, {u}, Sign::plus};
            break;
          }
        }
      }
      if (!next) return;
      apply_unchecked(s, *next);
    }
  }

 private:
  const SignedDigraph& g_;
};

std::string state_key(const GameState& s) {
  std::string key(s.color.size(), '\0');
  for (std::size_t v = 0; v < s.color.size(); ++v) {
    key[v] = static_cast<char>(static_cast<int>(s.color[v]) * 3 + static_cast<int>(s.mark[v]));
  }
  return key;
}

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const SignedRule& rule, std::size_t budget) : rule_(rule), budget_(budget) {}

  GameState run(GameState start) {
    explore(std::move(start));
    return std::move(*best_);
  }

 private:
  void explore(GameState s) {
    rule_.saturate(s);
    if (!visited_.insert(state_key(s)).second) return;
    if (visited_.size() > budget_) {
      throw ResourceLimitError("exhaustive signed game exceeded its state budget of " + std::to_string(budget_));
    }
    const std::vector<Move> moves = rule_.branching_moves(s);
    if (moves.empty()) {
      const std::size_t black = s.black().size();
      if (!best_ || black > best_black_) {
        best_black_ = black;
        best_ = std::move(s);
        finished_ = static_cast<int>(best_black_) == rule_.size();
      }
      return;
    }
    for (const Move& m : moves) {
      if (finished_) return;
      GameState child = s;
      SignedRule::apply_unchecked(child, m);
      explore(std::move(child));
    }
  }

  const SignedRule& rule_;
  std::size_t budget_;
  std::unordered_set<std::string> visited_;
  std::optional<GameState> best_;
  std::size_t best_black_ = 0;
  bool finished_ = false;
};

DerivedSets to_derived(GameState s) {
  DerivedSets d;
  d.colored = s.black();
  for (std::size_t v = 0; v < s.mark.size(); ++v) {
    if (s.mark[v] == Mark::star) continue;
    const Node node = static_cast<Node>(v);
    d.marked.emplace(node, s.mark[v] == Mark::plus ? Sign::plus : Sign::minus);
    if (s.color[v] == Color::black) d.stale_marks.insert(node);
  }
  d.trace = std::move(s.trace);
  return d;
}

}  // namespace

std::vector<Move> legal_moves(const SignedDigraph& g, const GameState& state) {
  const SignedRule rule(g);
  std::vector<Move> moves;
  for (int clause = 1; clause <= 3; ++clause) {
    for (Node v = 0; v < g.size(); ++v) {
      if (auto m = rule.pivot_move(state, v, clause)) moves.push_back(std::move(*m));
    }
  }
  if (!SignedRule::any_white_marked(state)) {
    for (Node u = 0; u < g.size(); ++u) {
      if (is_white(state.color, u)) moves.push_back(Move{4, -1, {u}, Sign::plus});
    }
  }
  return moves;
}

void apply_move(const SignedDigraph& g, GameState& state, const Move& move) {
  const SignedRule rule(g);
  if (!rule.legal(state, move)) throw std::logic_error("illegal move: " + format_trace({move}));
  SignedRule::apply_unchecked(state, move);
}

GameState replay(const SignedDigraph& g, const NodeSet& initially_black, const Trace& trace) {
  GameState s = GameState::initial(g.size(), initially_black);
  for (const Move& m : trace) apply_move(g, s, m);
  return s;
}

DerivedSets signed_derived_sets(const SignedDigraph& g, const NodeSet& initially_black,
                                const GameOptions& options) {
  const SignedRule rule(g);
  GameState start = GameState::initial(g.size(), initially_black);
  if (options.mode == SearchMode::deterministic) {
    rule.run_deterministic(start);
    return to_derived(std::move(start));
  }
  if (g.size() > options.exhaustive_node_bound) {
    throw ResourceLimitError("exhaustive signed game limited to " + std::to_string(options.exhaustive_node_bound) +
                             " nodes, graph has " + std::to_string(g.size()));
  }
  return to_derived(ExhaustiveSearch(rule, options.state_budget).run(std::move(start)));
}

namespace {

ForcingCheck run_check(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  ForcingCheck check;
  GameOptions deterministic = options;
  deterministic.mode = SearchMode::deterministic;
  check.sets = signed_derived_sets(g, z, deterministic);
  check.holds = static_cast<int>(check.sets.colored.size()) == g.size();
  check.exhaustive = options.mode == SearchMode::exhaustive;
  // A successful deterministic derivation already settles the predicate.
  if (check.holds || options.mode == SearchMode::deterministic) return check;
  if (g.size() > options.exhaustive_node_bound) {
    check.exhaustive = false;
    return check;
  }
  try {
    check.sets = signed_derived_sets(g, z, options);
    check.holds = static_cast<int>(check.sets.colored.size()) == g.size();
  } catch (const ResourceLimitError&) {
    check.exhaustive = false;
  }
  return check;
}

}  // namespace

ForcingCheck check_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  return run_check(g, z, options);
}

ForcingCheck check_positive_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  return run_check(looped_negative(g), z, options);
}

ForcingCheck check_negative_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  return run_check(looped_positive(g), z, options);
}

bool is_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  return check_signed_zfs(g, z, options).holds;
}

bool is_positive_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  return check_positive_signed_zfs(g, z, options).holds;
}

bool is_negative_signed_zfs(const SignedDigraph& g, const NodeSet& z, const GameOptions& options) {
  return check_negative_signed_zfs(g, z, options).holds;
}

std::string format_trace(const Trace& trace) {
  std::ostringstream out;
  for (const Move& m : trace) {
    out << "clause " << m.clause;
    if (m.pivot >= 0) out << " pivot " << m.pivot + 1;
    out << " ->";
    for (Node u : m.targets) out << ' ' << u + 1;
    if (m.mark) out << " mark " << to_token(*m.mark);
    out << '\n';
  }
  return out.str();
}

}  // namespace zforce
