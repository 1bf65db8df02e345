#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Core>

#include "zforce/graph.hpp"

namespace zforce {

/// Draws matrices from the qualitative class of a graph.
struct SamplerConfig {
  /// Magnitudes are log-uniform on [lo, hi].
  double magnitude_lo = 0.1;
  double magnitude_hi = 10.0;
  /// Probability that a '?' diagonal is sampled as exactly zero; otherwise it
  /// gets a random sign and magnitude.
  double unknown_zero_probability = 1.0 / 3.0;
  /// Fraction of samples whose magnitudes are all drawn from {1, 2} instead.
  /// Integer-valued members of the class hit eigenvalue coincidences and
  /// cancellations with positive probability.
  double lattice_probability = 0.5;
  int samples = 200;
  std::uint64_t seed = 1;
  /// Sample symmetric matrices; requires a symmetric pattern.
  bool symmetric = false;

  void validate() const {
    if (!(magnitude_lo > 0.0) || !(magnitude_hi >= magnitude_lo)) {
      throw std::invalid_argument("magnitude range must satisfy 0 < lo <= hi");
    }
    if (!(unknown_zero_probability >= 0.0 && unknown_zero_probability <= 1.0)) {
      throw std::invalid_argument("zero probability must lie in [0, 1]");
    }
    if (!(lattice_probability >= 0.0 && lattice_probability <= 1.0)) {
      throw std::invalid_argument("lattice probability must lie in [0, 1]");
    }
    if (samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  }
};

namespace detail {

/// Per-(seed, index) random stream; sample i never depends on sample j.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool coin(double p) { return uniform() < p; }
  double sign() { return (engine_() >> 63) != 0 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
};

class MagnitudeDraw {
 public:
  MagnitudeDraw(const SamplerConfig& config, SampleStream& stream)
      : stream_(stream),
        lattice_(stream.coin(config.lattice_probability)),
        log_lo_(std::log(config.magnitude_lo)),
        log_span_(std::log(config.magnitude_hi) - std::log(config.magnitude_lo)) {}

  double operator()() {
    if (lattice_) return stream_.coin(0.5) ? 2.0 : 1.0;
    return std::exp(log_lo_ + log_span_ * stream_.uniform());
  }

 private:
  SampleStream& stream_;
  bool lattice_;
  double log_lo_;
  double log_span_;
};

inline double diagonal_value(EntryLabel loop, const SamplerConfig& config, SampleStream& stream,
                             MagnitudeDraw& magnitude) {
  switch (loop) {
    case EntryLabel::zero: return 0.0;
    case EntryLabel::plus: return magnitude();
    case EntryLabel::minus: return -magnitude();
    case EntryLabel::cross: return stream.sign() * magnitude();
    case EntryLabel::unknown:
      if (stream.coin(config.unknown_zero_probability)) return 0.0;
      return stream.sign() * magnitude();
  }
  return 0.0;
}

}  // namespace detail

/// Sample `index` of the qualitative class of a signed graph: edge i -> j
/// sets entry (j, i) with the edge's sign, loops fix the diagonal sign.
/// Deterministic in (config.seed, index).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_matrix(const SignedDigraph& g,
                                                                    const SamplerConfig& config,
                                                                    std::uint64_t index) {
  config.validate();
  if (config.symmetric && !is_symmetric(g)) {
    throw std::invalid_argument("symmetric sampling needs a symmetric sign pattern");
  }
  const int n = g.size();
  detail::SampleStream stream(config.seed, index);
  detail::MagnitudeDraw magnitude(config, stream);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Node v = 0; v < n; ++v) a(v, v) = Scalar(detail::diagonal_value(g.loop(v), config, stream, magnitude));
  for (const auto& [arc, sign] : g.edges()) {
    const auto [from, to] = arc;
    if (config.symmetric && from > to) continue;
    const Scalar value = Scalar((sign == Sign::plus ? 1.0 : -1.0) * magnitude());
    a(to, from) = value;
    if (config.symmetric) a(from, to) = value;
  }
  return a;
}

/// Same for a zero-nonzero graph: every x entry gets a random sign.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_matrix(const PatternDigraph& g,
                                                                    const SamplerConfig& config,
                                                                    std::uint64_t index) {
  config.validate();
  const int n = g.size();
  if (config.symmetric) {
    for (const auto& arc : g.edges()) {
      if (!g.has_edge(arc.second, arc.first)) {
        throw std::invalid_argument("symmetric sampling needs a symmetric zero-nonzero pattern");
      }
    }
  }
  detail::SampleStream stream(config.seed, index);
  detail::MagnitudeDraw magnitude(config, stream);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Node v = 0; v < n; ++v) a(v, v) = Scalar(detail::diagonal_value(g.loop(v), config, stream, magnitude));
  for (const auto& arc : g.edges()) {
    const auto [from, to] = arc;
    if (config.symmetric && from > to) continue;
    const Scalar value = Scalar(stream.sign() * magnitude());
    a(to, from) = value;
    if (config.symmetric) a(from, to) = value;
  }
  return a;
}

}  // namespace zforce
