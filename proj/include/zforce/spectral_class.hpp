#pragma once

#include <optional>
#include <string_view>

namespace zforce {

enum class SpectralClass { zero, positive, negative, complex };

constexpr std::string_view to_string(SpectralClass c) noexcept {
  switch (c) {
    case SpectralClass::zero: return "zero";
    case SpectralClass::positive: return "positive";
    case SpectralClass::negative: return "negative";
    case SpectralClass::complex: return "complex";
  }
  return "?";
}

constexpr std::optional<SpectralClass> parse_spectral_class(std::string_view name) noexcept {
  if (name == "zero") return SpectralClass::zero;
  if (name == "positive") return SpectralClass::positive;
  if (name == "negative") return SpectralClass::negative;
  if (name == "complex") return SpectralClass::complex;
  return std::nullopt;
}

}  // namespace zforce
