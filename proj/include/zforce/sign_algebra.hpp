#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace zforce {

enum class Sign : std::uint8_t { plus, minus };

/// Pattern symbol shared by zero-nonzero patterns {0, x, ?} and sign
/// patterns {0, +, -, ?}. Which subset is legal depends on context.
enum class EntryLabel : std::uint8_t { zero, cross, plus, minus, unknown };

constexpr Sign inv(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

constexpr Sign sign_mul(Sign a, Sign b) noexcept { return a == b ? Sign::plus : Sign::minus; }

constexpr EntryLabel to_label(Sign s) noexcept {
  return s == Sign::plus ? EntryLabel::plus : EntryLabel::minus;
}

constexpr std::optional<Sign> to_sign(EntryLabel l) noexcept {
  if (l == EntryLabel::plus) return Sign::plus;
  if (l == EntryLabel::minus) return Sign::minus;
  return std::nullopt;
}

/// Addition of pattern symbols:
///   ? + s = ?,  0 + s = s,  r + inv(r) = ?,  r + r = r,  x + x = ?
/// for s in {x, +, -, 0, ?} and r in {+, -}. Commutative. Throws
/// AlphabetError when x is combined with + or -.
EntryLabel label_add(EntryLabel a, EntryLabel b);

/// Thresholded sign: zero iff |x| <= tol. Throws std::invalid_argument if
/// tol is negative or NaN.
EntryLabel sign_of(double x, double tol);

// Alphabet guards. Off-diagonal entries never admit '?'.
constexpr bool in_sign_alphabet(EntryLabel l, bool diagonal) noexcept {
  switch (l) {
    case EntryLabel::zero:
    case EntryLabel::plus:
    case EntryLabel::minus: return true;
    case EntryLabel::unknown: return diagonal;
    case EntryLabel::cross: return false;
  }
  return false;
}

constexpr bool in_pattern_alphabet(EntryLabel l, bool diagonal) noexcept {
  switch (l) {
    case EntryLabel::zero:
    case EntryLabel::cross: return true;
    case EntryLabel::unknown: return diagonal;
    case EntryLabel::plus:
    case EntryLabel::minus: return false;
  }
  return false;
}

/// ASCII token used by SGF and reports: "0", "x", "+", "-", "?".
std::string_view to_token(EntryLabel l) noexcept;
std::string_view to_token(Sign s) noexcept;
std::optional<EntryLabel> parse_label(std::string_view token) noexcept;

}  // namespace zforce
