#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "zforce/forcing.hpp"
#include "zforce/graph.hpp"
#include "zforce/search.hpp"
#include "zforce/spectral_class.hpp"

namespace zforce {

/// Throws GraphError unless `controls` is a nonempty subset of
/// {0..n-1}.
void validate_controls(int n, const NodeSet& controls);

/// Exact verdict for a zero-nonzero pattern: every matrix of the class is
/// controllable iff the controls are both a classical and a strong zero
/// forcing set.
struct PatternVerdict {
  bool classical = false;
  bool strong = false;
  bool controllable = false;
  NodeSet classical_derived;
  NodeSet strong_derived;
};

PatternVerdict certify_pattern(const PatternDigraph& g, const NodeSet& controls);

/// Sufficient condition for one spectral class of a signed graph. A failed
/// check means only that this condition failed.
struct ClassCertificate {
  SpectralClass cls = SpectralClass::zero;
  bool certified = false;
  /// False when the verdict came from a single deterministic derivation.
  bool exhaustive = true;
  DerivedSets sets;
};

/// `cls` must be zero, positive or negative.
ClassCertificate certify_signed_class(const SignedDigraph& g, const NodeSet& controls, SpectralClass cls,
                                      const GameOptions& game = {});

struct Certificate {
  int nodes = 0;
  NodeSet controls;
  /// Zero, positive, negative, in that order.
  std::array<ClassCertificate, 3> classes;
  bool realness_asserted = false;
  bool certified_controllable = false;
  std::vector<std::string> reasons;
  /// Predicates that passed, e.g. "positive_signed_zfs".
  std::vector<std::string> witnesses;
  std::vector<std::string> method_refs;
};

Certificate certify_signed(const SignedDigraph& g, const NodeSet& controls, bool realness_asserted,
                           const GameOptions& game = {});

/// Forcing numbers of the positive and negative signed games, which bound
/// the geometric multiplicity of every positive (negative) eigenvalue over
/// the qualitative class.
struct MultiplicityBound {
  int positive_bound = 0;
  int negative_bound = 0;
  NodeSet positive_witness;
  NodeSet negative_witness;
  bool exact = false;
};

/// Throws ResourceLimitError above the exact search bound.
MultiplicityBound multiplicity_bounds(const SignedDigraph& g, const SearchOptions& options = {});

std::string_view predicate_name(SpectralClass cls);

/// Node sets in these reports are 1-based.
std::string certificate_text(const Certificate& c, bool with_traces = false);
std::string certificate_kv(const Certificate& c);
std::string pattern_verdict_text(const PatternVerdict& v, const NodeSet& controls, int nodes);
std::string pattern_verdict_kv(const PatternVerdict& v, const NodeSet& controls, int nodes);

/// "{1,3,4}" from a 0-based set.
std::string format_node_set(const NodeSet& s);

}  // namespace zforce
