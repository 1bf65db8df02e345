#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zforce/certify.hpp"
#include "zforce/graph.hpp"
#include "zforce/numeric/sampler.hpp"
#include "zforce/numeric/spectrum.hpp"
#include "zforce/spectral_class.hpp"

namespace zforce {

struct VerifyOptions {
  Tolerances tol;
  unsigned jobs = 1;
  /// Truncate the report after the lowest-index sample with a violation.
  bool stop_at_first_violation = false;
};

struct ClassSummary {
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Smallest PBH margin seen; +inf when nothing was checked.
  double worst_margin = 0;
  std::optional<std::uint64_t> first_violation;
};

struct SampleFailure {
  std::uint64_t sample;
  std::string message;
};

struct PBHReport {
  SamplerConfig config;
  NodeSet controls;
  std::vector<SpectralClass> classes;
  /// Records of sample i, restricted to the requested classes.
  std::vector<std::vector<SpectralRecord>> samples;
  std::map<SpectralClass, ClassSummary> summary;
  /// Samples whose spectrum could not be computed.
  std::vector<SampleFailure> failures;

  std::size_t total_violations() const;
};

PBHReport monte_carlo_verify(const SignedDigraph& g, const NodeSet& controls, const std::vector<SpectralClass>& classes,
                             const SamplerConfig& config, const VerifyOptions& options = {});
PBHReport monte_carlo_verify(const PatternDigraph& g, const NodeSet& controls,
                             const std::vector<SpectralClass>& classes, const SamplerConfig& config,
                             const VerifyOptions& options = {});

/// Every spectrum record and PBH verdict of one matrix, in eigenvalue order.
std::vector<SpectralRecord> pbh_records(const MatrixX<double>& a, const NodeSet& controls, const Tolerances& tol = {});

/// One row per (sample, eigenvalue); numbers printed with %.17g.
std::string report_csv(const PBHReport& report);
std::string report_text(const PBHReport& report);
std::string report_kv(const PBHReport& report);

/// Empirical check that left eigenvectors vanishing on Z also vanish on the
/// derived colored set of the matching game, and that their signs agree
/// with the game's marks up to a global flip.
struct EigenvectorCheck {
  SpectralClass cls = SpectralClass::positive;
  NodeSet z;
  NodeSet colored;
  std::map<Node, Sign> marked;
  std::size_t samples = 0;
  std::size_t eigenvalues = 0;
  /// Basis vectors of {nu : nu^T A = lambda nu^T, nu_Z = 0} examined.
  std::size_t vectors = 0;
  /// max |nu_i| / ||nu|| over the colored set.
  double worst_ratio = 0;
  std::size_t vanish_failures = 0;
  std::size_t mark_failures = 0;
  std::optional<std::uint64_t> first_failure;
  std::vector<SampleFailure> failures;

  bool passed() const { return vanish_failures == 0 && mark_failures == 0 && failures.empty(); }
};

struct EigenvectorCheckOptions {
  Tolerances tol;
  /// Entries with |nu_i| <= vanish * ||nu|| count as zero.
  double vanish = 1e-7;
  GameOptions game;
};

/// `cls` is zero, positive or negative; the game is the signed rule on
/// g, looped_negative(g) or looped_positive(g) respectively.
EigenvectorCheck eigenvector_vanishing_check(const SignedDigraph& g, const NodeSet& z, SpectralClass cls, const SamplerConfig& config,
                              const EigenvectorCheckOptions& options = {});

struct MultiplicityProbe {
  std::size_t samples = 0;
  int max_positive = 0;
  int max_negative = 0;
  int positive_bound = 0;
  int negative_bound = 0;
  std::optional<std::uint64_t> first_excess;
  std::vector<SampleFailure> failures;

  bool within_bounds() const {
    return max_positive <= positive_bound && max_negative <= negative_bound && failures.empty();
  }
};

/// Largest sampled geometric multiplicity of positive and negative
/// eigenvalues against the forcing-number bounds.
MultiplicityProbe multiplicity_probe(const SignedDigraph& g, const MultiplicityBound& bound,
                                     const SamplerConfig& config, const VerifyOptions& options = {});

struct RealnessProbe {
  std::size_t samples = 0;
  std::size_t complex_samples = 0;
  std::optional<std::uint64_t> first_complex;
  std::vector<SampleFailure> failures;
};

/// Counts samples with a non-real eigenvalue. Finding none is evidence, not
/// proof, that the sign pattern only admits real spectra.
RealnessProbe realness_probe(const SignedDigraph& g, const SamplerConfig& config, const VerifyOptions& options = {});

}  // namespace zforce
