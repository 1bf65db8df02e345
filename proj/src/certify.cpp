#include "zforce/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "zforce/errors.hpp"

namespace zforce {

void validate_controls(int n, const NodeSet& controls) {
  if (controls.empty()) throw GraphError("control set is empty");
  for (Node v : controls) {
    if (v < 0 || v >= n) {
      throw GraphError("control node " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n));
    }
  }
}

std::string format_node_set(const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  for (Node v : s) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

PatternVerdict certify_pattern(const PatternDigraph& g, const NodeSet& controls) {
  validate_controls(g.size(), controls);
  PatternVerdict v;
  v.classical_derived = classical_derived_set(g, controls);
  v.strong_derived = classical_derived_set(looped_cross(g), controls);
  v.classical = static_cast<int>(v.classical_derived.size()) == g.size();
  v.strong = static_cast<int>(v.strong_derived.size()) == g.size();
  v.controllable = v.classical && v.strong;
  return v;
}

std::string_view predicate_name(SpectralClass cls) {
  switch (cls) {
    case SpectralClass::zero: return "signed_zfs";
    case SpectralClass::positive: return "positive_signed_zfs";
    case SpectralClass::negative: return "negative_signed_zfs";
    case SpectralClass::complex: break;
  }
  throw std::invalid_argument("no forcing certificate for the complex class");
}

ClassCertificate certify_signed_class(const SignedDigraph& g, const NodeSet& controls, SpectralClass cls,
                                      const GameOptions& game) {
  validate_controls(g.size(), controls);
  ForcingCheck check;
  switch (cls) {
    case SpectralClass::zero: check = check_signed_zfs(g, controls, game); break;
    case SpectralClass::positive: check = check_positive_signed_zfs(g, controls, game); break;
    case SpectralClass::negative: check = check_negative_signed_zfs(g, controls, game); break;
    case SpectralClass::complex: throw std::invalid_argument("no forcing certificate for the complex class");
  }
  return {cls, check.holds, check.exhaustive, std::move(check.sets)};
}

Certificate certify_signed(const SignedDigraph& g, const NodeSet& controls, bool realness_asserted,
                           const GameOptions& game) {
  Certificate c;
  c.nodes = g.size();
  c.controls = controls;
  c.realness_asserted = realness_asserted;
  const std::array<SpectralClass, 3> order{SpectralClass::zero, SpectralClass::positive, SpectralClass::negative};
  bool all = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    c.classes[i] = certify_signed_class(g, controls, order[i], game);
    const ClassCertificate& cc = c.classes[i];
    const std::string name(predicate_name(cc.cls));
    if (cc.certified) {
      c.witnesses.push_back(name);
    } else {
      all = false;
      std::string reason = std::string(to_string(cc.cls)) + " eigenvalues: " + name + " failed, colored " +
                           std::to_string(cc.sets.colored.size()) + " of " + std::to_string(g.size());
      if (!cc.exhaustive) reason += " (single deterministic derivation, search bounds exceeded)";
      c.reasons.push_back(std::move(reason));
    }
  }
  c.method_refs = {"signed-zfs-sufficient-for-zero-eigenvalues", "positive-signed-zfs-sufficient-for-positive-eigenvalues",
                   "negative-signed-zfs-sufficient-for-negative-eigenvalues", "real-spectrum-aggregation"};
  if (all && !realness_asserted) c.reasons.emplace_back("realness unverified");
  c.certified_controllable = all && realness_asserted;
  return c;
}

MultiplicityBound multiplicity_bounds(const SignedDigraph& g, const SearchOptions& options) {
  const SearchResult pos = min_forcing_set(g, ForcingKind::positive_signed, options);
  const SearchResult neg = min_forcing_set(g, ForcingKind::negative_signed, options);
  return {pos.minimum_size, neg.minimum_size, pos.witness, neg.witness, pos.exact && neg.exact};
}

std::string certificate_text(const Certificate& c, bool with_traces) {
  std::ostringstream out;
  out << "controls: " << format_node_set(c.controls) << "\n";
  for (const ClassCertificate& cc : c.classes) {
    out << to_string(cc.cls) << " eigenvalues: " << (cc.certified ? "certified" : "not certified by this method")
        << " (" << predicate_name(cc.cls) << ", colored " << format_node_set(cc.sets.colored) << ")\n";
    if (with_traces && !cc.sets.trace.empty()) {
      std::istringstream lines(format_trace(cc.sets.trace));
      for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
    }
  }
  out << "realness: " << (c.realness_asserted ? "asserted by user" : "unverified") << "\n";
  out << "overall: " << (c.certified_controllable ? "certified controllable" : "inconclusive") << "\n";
  for (const std::string& r : c.reasons) out << "reason: " << r << "\n";
  for (const std::string& m : c.method_refs) out << "method: " << m << "\n";
  return out.str();
}

std::string certificate_kv(const Certificate& c) {
  std::ostringstream out;
  out << "controls=" << format_node_set(c.controls) << "\n";
  for (const ClassCertificate& cc : c.classes) {
    const std::string key(to_string(cc.cls));
    out << key << ".verdict=" << (cc.certified ? "certified" : "not_certified_by_this_method") << "\n";
    out << key << ".predicate=" << predicate_name(cc.cls) << "\n";
    out << key << ".exhaustive=" << (cc.exhaustive ? "true" : "false") << "\n";
    out << key << ".colored=" << format_node_set(cc.sets.colored) << "\n";
  }
  out << "realness=" << (c.realness_asserted ? "asserted_by_user" : "unverified") << "\n";
  out << "overall=" << (c.certified_controllable ? "certified_controllable" : "inconclusive") << "\n";
  for (std::size_t i = 0; i < c.reasons.size(); ++i) out << "reason." << i << "=" << c.reasons[i] << "\n";
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) out << "witness." << i << "=" << c.witnesses[i] << "\n";
  for (std::size_t i = 0; i < c.method_refs.size(); ++i) out << "method." << i << "=" << c.method_refs[i] << "\n";
  return out.str();
}

std::string pattern_verdict_text(const PatternVerdict& v, const NodeSet& controls, int nodes) {
  std::ostringstream out;
  out << "controls: " << format_node_set(controls) << "\n";
  out << "classical zero forcing: " << (v.classical ? "yes" : "no") << " (derived "
      << v.classical_derived.size() << " of " << nodes << ")\n";
  out << "strong zero forcing: " << (v.strong ? "yes" : "no") << " (derived " << v.strong_derived.size() << " of "
      << nodes << ")\n";
  out << "overall: " << (v.controllable ? "controllable" : "not controllable") << "\n";
  out << "method: classical-and-strong-zfs-characterization\n";
  return out.str();
}

std::string pattern_verdict_kv(const PatternVerdict& v, const NodeSet& controls, int nodes) {
  std::ostringstream out;
  out << "controls=" << format_node_set(controls) << "\n";
  out << "nodes=" << nodes << "\n";
  out << "classical=" << (v.classical ? "true" : "false") << "\n";
  out << "classical.derived=" << format_node_set(v.classical_derived) << "\n";
  out << "strong=" << (v.strong ? "true" : "false") << "\n";
  out << "strong.derived=" << format_node_set(v.strong_derived) << "\n";
  out << "overall=" << (v.controllable ? "controllable" : "not_controllable") << "\n";
  out << "method.0=classical-and-strong-zfs-characterization\n";
  return out.str();
}

}  // namespace zforce
