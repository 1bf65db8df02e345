#include "zforce/sgf.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "zforce/errors.hpp"

namespace zforce {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

enum class Alphabet { undecided, signed_, pattern };

struct RawGraph {
  int n = 0;
  std::map<std::pair<Node, Node>, EntryLabel> edges;
  std::map<Node, EntryLabel> loops;
  Alphabet alphabet = Alphabet::undecided;
};

class Parser {
 public:
  explicit Parser(const SgfOptions& options) : options_(options) {}

  RawGraph run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line(line_no, tokenize(text.substr(pos, end - pos)));
      pos = end + 1;
    }
    if (!seen_nodes_) throw ParseError(line_no, 1, "missing 'nodes N' directive");
    return std::move(g_);
  }

 private:
  void line(int line_no, const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const Token& head = tokens.front();
    if (head.text == "nodes") {
      expect_arity(line_no, tokens, 2);
      if (seen_nodes_) throw ParseError(line_no, head.column, "duplicate 'nodes' directive");
      const int n = integer(line_no, tokens[1]);
      if (n < 1) throw ParseError(line_no, tokens[1].column, "node count must be at least 1");
      g_.n = n;
      seen_nodes_ = true;
      return;
    }
    if (head.text != "edge" && head.text != "loop") {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
    if (!seen_nodes_) throw ParseError(line_no, head.column, "'nodes N' must come first");

    if (head.text == "edge") {
      expect_arity(line_no, tokens, 4);
      const Node from = node(line_no, tokens[1]);
      const Node to = node(line_no, tokens[2]);
      if (from == to) {
        throw ParseError(line_no, tokens[2].column, "edge endpoints must differ; use 'loop' for self-loops");
      }
      const EntryLabel l = label(line_no, tokens[3], false);
      add_edge(line_no, tokens[3].column, from, to, l);
      if (options_.undirected) add_edge(line_no, tokens[3].column, to, from, l);
    } else {
      expect_arity(line_no, tokens, 3);
      const Node v = node(line_no, tokens[1]);
      const EntryLabel l = label(line_no, tokens[2], true);
      auto [it, inserted] = g_.loops.emplace(v, l);
      if (!inserted && it->second != l) {
        throw ParseError(line_no, tokens[2].column, "conflicting label for loop on node " + std::to_string(v + 1));
      }
    }
  }

  void add_edge(int line_no, int column, Node from, Node to, EntryLabel l) {
    auto [it, inserted] = g_.edges.emplace(std::pair{from, to}, l);
    if (!inserted && it->second != l) {
      throw ParseError(line_no, column,
                       "duplicate edge " + std::to_string(from + 1) + " " + std::to_string(to + 1) +
                           " with conflicting sign");
    }
  }

  static void expect_arity(int line_no, const std::vector<Token>& tokens, std::size_t arity) {
    if (tokens.size() < arity) {
      throw ParseError(line_no, tokens.back().column, "'" + std::string(tokens.front().text) + "' expects " +
                                                          std::to_string(arity - 1) + " argument(s)");
    }
    if (tokens.size() > arity) {
      throw ParseError(line_no, tokens[arity].column, "unexpected token '" + std::string(tokens[arity].text) + "'");
    }
  }

  static int integer(int line_no, const Token& t) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      throw ParseError(line_no, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  Node node(int line_no, const Token& t) const {
    const int v = integer(line_no, t);
    if (v < 1 || v > g_.n) {
      throw ParseError(line_no, t.column,
                       "node index " + std::to_string(v) + " out of range 1.." + std::to_string(g_.n));
    }
    return v - 1;
  }

  EntryLabel label(int line_no, const Token& t, bool diagonal) {
    const std::optional<EntryLabel> l = parse_label(t.text);
    if (!l || *l == EntryLabel::zero || (!diagonal && *l == EntryLabel::unknown)) {
      throw ParseError(line_no, t.column, std::string("bad ") + (diagonal ? "loop" : "sign") + " token '" +
                                              std::string(t.text) + "'");
    }
    Alphabet a = Alphabet::undecided;
    if (*l == EntryLabel::cross) a = Alphabet::pattern;
    if (*l == EntryLabel::plus || *l == EntryLabel::minus) a = Alphabet::signed_;
    if (a != Alphabet::undecided) {
      if (g_.alphabet != Alphabet::undecided && g_.alphabet != a) {
        throw ParseError(line_no, t.column, "mixes zero-nonzero 'x' with signed labels");
      }
      g_.alphabet = a;
    }
    return *l;
  }

  SgfOptions options_;
  RawGraph g_;
  bool seen_nodes_ = false;
};

SignedDigraph to_signed(const RawGraph& raw) {
  SignedDigraph::EdgeMap edges;
  for (const auto& [arc, l] : raw.edges) edges.emplace(arc, *to_sign(l));
  return SignedDigraph(raw.n, std::move(edges), raw.loops);
}

PatternDigraph to_pattern(const RawGraph& raw) {
  PatternDigraph::EdgeSet edges;
  for (const auto& [arc, l] : raw.edges) edges.insert(arc);
  return PatternDigraph(raw.n, std::move(edges), raw.loops);
}

}  // namespace

AnyGraph parse_sgf(std::string_view text, const SgfOptions& options) {
  RawGraph raw = Parser(options).run(text);
  if (raw.alphabet == Alphabet::pattern) return to_pattern(raw);
  return to_signed(raw);
}

SignedDigraph parse_signed_sgf(std::string_view text, const SgfOptions& options) {
  AnyGraph g = parse_sgf(text, options);
  if (auto* s = std::get_if<SignedDigraph>(&g)) return std::move(*s);
  throw ParseError(1, 1, "expected a signed graph but the file uses zero-nonzero 'x' labels");
}

PatternDigraph parse_pattern_sgf(std::string_view text, const SgfOptions& options) {
  RawGraph raw = Parser(options).run(text);
  if (raw.alphabet == Alphabet::signed_) {
    throw ParseError(1, 1, "expected a zero-nonzero graph but the file uses signed labels");
  }
  return to_pattern(raw);
}

std::string to_sgf(const SignedDigraph& g) {
  std::ostringstream out;
  out << "nodes " << g.size() << '\n';
  for (const auto& [arc, sign] : g.edges()) {
    out << "edge " << arc.first + 1 << ' ' << arc.second + 1 << ' ' << to_token(sign) << '\n';
  }
  for (const auto& [v, l] : g.loops()) out << "loop " << v + 1 << ' ' << to_token(l) << '\n';
  return out.str();
}

std::string to_sgf(const PatternDigraph& g) {
  std::ostringstream out;
  out << "nodes " << g.size() << '\n';
  for (const auto& arc : g.edges()) out << "edge " << arc.first + 1 << ' ' << arc.second + 1 << " x\n";
  for (const auto& [v, l] : g.loops()) out << "loop " << v + 1 << ' ' << to_token(l) << '\n';
  return out.str();
}

AnyGraph read_sgf_file(const std::string& path, const SgfOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sgf(buffer.str(), options);
}

}  // namespace zforce
