#include "zforce/sign_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zforce/errors.hpp"

namespace zforce {

EntryLabel label_add(EntryLabel a, EntryLabel b) {
  using L = EntryLabel;
  if (a == L::unknown || b == L::unknown) return L::unknown;
  if (a == L::zero) return b;
  if (b == L::zero) return a;
  if (a == L::cross && b == L::cross) return L::unknown;
  if (a == L::cross || b == L::cross) {
    throw AlphabetError("cannot add '" + std::string(to_token(a)) + "' and '" +
                        std::string(to_token(b)) + "': zero-nonzero and sign symbols do not mix");
  }
  // both are signs
  return a == b ? a : L::unknown;
}

EntryLabel sign_of(double x, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("sign tolerance must be nonnegative");
  if (std::abs(x) <= tol) return EntryLabel::zero;
  return x > 0.0 ? EntryLabel::plus : EntryLabel::minus;
}

std::string_view to_token(EntryLabel l) noexcept {
  switch (l) {
    case EntryLabel::zero: return "0";
    case EntryLabel::cross: return "x";
    case EntryLabel::plus: return "+";
    case EntryLabel::minus: return "-";
    case EntryLabel::unknown: return "?";
  }
  return "?";
}

std::string_view to_token(Sign s) noexcept { return s == Sign::plus ? "+" : "-"; }

std::optional<EntryLabel> parse_label(std::string_view token) noexcept {
  if (token == "0") return EntryLabel::zero;
  if (token == "x" || token == "X" || token == "\xC3\x97") return EntryLabel::cross;  // also U+00D7
  if (token == "+") return EntryLabel::plus;
  if (token == "-" || token == "\xE2\x88\x92") return EntryLabel::minus;  // also U+2212
  if (token == "?") return EntryLabel::unknown;
  return std::nullopt;
}

}  // namespace zforce
