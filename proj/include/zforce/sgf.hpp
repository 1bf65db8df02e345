#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "zforce/graph.hpp"

namespace zforce {

// SGF: line-oriented text graph format.
//
//   # comment
//   nodes N          first directive, N >= 1
//   edge I J S       I -> J, S in {+,-} (signed) or x (zero-nonzero)
//   loop V L         L in {+,-,?} (signed) or {x,?} (zero-nonzero)
//
// Indices are 1-based. A file is zero-nonzero if it uses 'x' anywhere and
// signed otherwise; mixing both alphabets is an error.

struct SgfOptions {
  /// Each `edge I J S` also adds J -> I with S.
  bool undirected = false;
};

using AnyGraph = std::variant<SignedDigraph, PatternDigraph>;

AnyGraph parse_sgf(std::string_view text, const SgfOptions& options = {});
SignedDigraph parse_signed_sgf(std::string_view text, const SgfOptions& options = {});
PatternDigraph parse_pattern_sgf(std::string_view text, const SgfOptions& options = {});

std::string to_sgf(const SignedDigraph& g);
std::string to_sgf(const PatternDigraph& g);

AnyGraph read_sgf_file(const std::string& path, const SgfOptions& options = {});

}  // namespace zforce
