#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "zforce/certify.hpp"
#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"
#include "zforce/numeric/oracle.hpp"
#include "zforce/search.hpp"
#include "zforce/sgf.hpp"

namespace zforce::cli {

namespace {

enum Exit { ok = 0, negative = 1, usage = 2, resource = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "1,3,4" (1-based) -> {0,2,3}. Rejects empty tokens, signs, spaces,
/// duplicates and nodes outside 1..n.
NodeSet parse_node_set(const std::string& text, int n) {
  NodeSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size() || token[0] == '-' ||
        token[0] == '+') {
      throw UsageError("bad node '" + token + "' in node set '" + text + "'");
    }
    if (value < 1 || value > n) {
      throw UsageError("node " + token + " out of range 1.." + std::to_string(n));
    }
    if (!out.insert(value - 1).second) throw UsageError("node " + token + " listed twice");
    pos = comma + 1;
  }
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ZFORCE_JOBS")) {
    unsigned jobs = 0;
    const std::string_view s(env);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), jobs);
    if (ec == std::errc() && end == s.data() + s.size() && jobs > 0) return jobs;
  }
  return 1;
}

struct Common {
  std::string graph;
  bool undirected = false;
  std::string format = "text";
};

struct Sampling {
  int samples = 200;
  std::uint64_t seed = 1;
  double mag_lo = 0.1;
  double mag_hi = 10.0;
  double zero_prob = 1.0 / 3.0;
  double lattice = 0.5;

  SamplerConfig config(bool symmetric) const {
    SamplerConfig c;
    c.samples = samples;
    c.seed = seed;
    c.magnitude_lo = mag_lo;
    c.magnitude_hi = mag_hi;
    c.unknown_zero_probability = zero_prob;
    c.lattice_probability = lattice;
    c.symmetric = symmetric;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return c;
  }
};

void add_graph_options(CLI::App* cmd, Common& common) {
  cmd->add_option("--graph", common.graph, "SGF file")->required();
  cmd->add_flag("--undirected", common.undirected, "Read each edge directive as a pair of opposite edges");
}

void add_sampling_options(CLI::App* cmd, Sampling& s) {
  cmd->add_option("--samples", s.samples, "Number of sampled matrices")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", s.seed, "Sampler seed");
  cmd->add_option("--mag-lo", s.mag_lo, "Smallest sampled magnitude");
  cmd->add_option("--mag-hi", s.mag_hi, "Largest sampled magnitude");
  cmd->add_option("--zero-prob", s.zero_prob, "Probability that a '?' diagonal is sampled as zero");
  cmd->add_option("--lattice", s.lattice, "Fraction of samples with magnitudes drawn from {1, 2}");
}

AnyGraph load(const Common& common) { return read_sgf_file(common.graph, SgfOptions{common.undirected}); }

int graph_size(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.size(); }, g);
}

ForcingKind kind_or_throw(const std::string& name) {
  const auto kind = parse_forcing_kind(name);
  if (!kind) throw UsageError("unknown kind '" + name + "'");
  return *kind;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string set;
  std::string kind = "signed";
  std::string mode = "exhaustive";
  bool trace = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const AnyGraph graph = load(a.common);
  const NodeSet z = parse_node_set(a.set, graph_size(graph));
  const ForcingKind kind = kind_or_throw(a.kind);
  GameOptions game;
  game.mode = a.mode == "deterministic" ? SearchMode::deterministic : SearchMode::exhaustive;

  bool holds = false;
  bool exhaustive = true;
  NodeSet derived;
  std::string trace;
  if (const auto* pattern = std::get_if<PatternDigraph>(&graph)) {
    if (is_signed_kind(kind)) throw UsageError("kind '" + a.kind + "' needs a signed graph");
    const PatternDigraph played = kind == ForcingKind::strong ? looped_cross(*pattern) : *pattern;
    derived = classical_derived_set(played, z);
    holds = static_cast<int>(derived.size()) == played.size();
  } else {
    const auto& g = std::get<SignedDigraph>(graph);
    if (!is_signed_kind(kind)) {
      const PatternDigraph base = underlying_pattern(g);
      const PatternDigraph played = kind == ForcingKind::strong ? looped_cross(base) : base;
      derived = classical_derived_set(played, z);
      holds = static_cast<int>(derived.size()) == played.size();
    } else {
      ForcingCheck c;
      if (kind == ForcingKind::signed_zfs) c = check_signed_zfs(g, z, game);
      if (kind == ForcingKind::positive_signed) c = check_positive_signed_zfs(g, z, game);
      if (kind == ForcingKind::negative_signed) c = check_negative_signed_zfs(g, z, game);
      holds = c.holds;
      exhaustive = c.exhaustive;
      derived = c.sets.colored;
      trace = format_trace(c.sets.trace);
    }
  }

  if (a.common.format == "kv") {
    out << "kind=" << to_string(kind) << "\nset=" << format_node_set(z) << "\nholds=" << (holds ? "true" : "false")
        << "\nexhaustive=" << (exhaustive ? "true" : "false") << "\nderived=" << format_node_set(derived) << "\n";
  } else {
    out << to_string(kind) << " zero forcing set " << format_node_set(z) << ": " << (holds ? "yes" : "no") << "\n";
    out << "derived set: " << format_node_set(derived) << "\n";
    if (!exhaustive) out << "note: graph exceeds exhaustive search bounds; verdict from one deterministic derivation\n";
  }
  if (a.trace && !trace.empty()) out << trace;
  return holds ? ok : negative;
}

// ---------------------------------------------------------------------------

struct ClosureArgs {
  Common common;
  std::string which = "cross";
};

int cmd_closure(const ClosureArgs& a, std::ostream& out) {
  const AnyGraph graph = load(a.common);
  if (a.which == "cross") {
    const PatternDigraph base = std::holds_alternative<PatternDigraph>(graph)
                                    ? std::get<PatternDigraph>(graph)
                                    : underlying_pattern(std::get<SignedDigraph>(graph));
    out << to_sgf(looped_cross(base));
    return ok;
  }
  const auto* g = std::get_if<SignedDigraph>(&graph);
  if (g == nullptr) throw UsageError("closure '" + a.which + "' needs a signed graph");
  out << to_sgf(a.which == "plus" ? looped_positive(*g) : looped_negative(*g));
  return ok;
}

// ---------------------------------------------------------------------------

struct MinArgs {
  Common common;
  std::string kind = "signed";
  bool greedy = false;
  unsigned jobs = 1;
};

int cmd_min(const MinArgs& a, std::ostream& out) {
  const AnyGraph graph = load(a.common);
  const ForcingKind kind = kind_or_throw(a.kind);
  SearchOptions options;
  options.jobs = a.jobs;
  const SearchResult r = std::visit(
      [&](const auto& g) {
        return a.greedy ? greedy_forcing_set(g, kind, options) : min_forcing_set(g, kind, options);
      },
      graph);
  if (a.common.format == "kv") {
    out << "kind=" << to_string(kind) << "\nminimum_size=" << r.minimum_size << "\nwitness="
        << format_node_set(r.witness) << "\nnodes_explored=" << r.nodes_explored
        << "\nexact=" << (r.exact ? "true" : "false") << "\n";
  } else {
    out << (a.greedy ? "greedy " : "minimum ") << to_string(kind) << " zero forcing set: size " << r.minimum_size
        << ", witness " << format_node_set(r.witness) << "\n";
    out << "subsets examined: " << r.nodes_explored << "\n";
    if (!a.greedy && !r.exact) out << "note: some verdicts came from single derivations; size is an upper bound\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
  Common common;
  std::string controls;
  bool assert_real = false;
  bool trace = false;
  int probe_realness = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const AnyGraph graph = load(a.common);
  const NodeSet controls = parse_node_set(a.controls, graph_size(graph));
  const bool kv = a.common.format == "kv";
  if (const auto* pattern = std::get_if<PatternDigraph>(&graph)) {
    const PatternVerdict v = certify_pattern(*pattern, controls);
    out << (kv ? pattern_verdict_kv(v, controls, pattern->size()) : pattern_verdict_text(v, controls, pattern->size()));
    return v.controllable ? ok : negative;
  }
  const auto& g = std::get<SignedDigraph>(graph);
  const Certificate c = certify_signed(g, controls, a.assert_real);
  out << (kv ? certificate_kv(c) : certificate_text(c, a.trace));
  if (a.probe_realness > 0) {
    SamplerConfig config;
    config.samples = a.probe_realness;
    config.seed = a.seed;
    config.symmetric = a.common.undirected;
    const RealnessProbe p = realness_probe(g, config, VerifyOptions{{}, a.jobs, false});
    if (kv) {
      out << "realness_probe.samples=" << p.samples << "\nrealness_probe.complex_samples=" << p.complex_samples
          << "\n";
    } else {
      out << "realness probe: " << p.complex_samples << " of " << p.samples << " samples had non-real eigenvalues";
      if (p.first_complex) out << " (first: sample " << *p.first_complex << ")";
      out << "\n";
    }
  }
  return c.certified_controllable ? ok : negative;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  Sampling sampling;
  std::string controls;
  std::string classes = "zero,positive,negative,complex";
  std::string csv_out;
  bool stop_at_first = false;
  unsigned jobs = 1;
};

std::vector<SpectralClass> parse_classes(const std::string& text) {
  std::vector<SpectralClass> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    const auto c = parse_spectral_class(token);
    if (!c) throw UsageError("unknown spectral class '" + token + "'");
    if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    pos = comma + 1;
  }
  return out;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const AnyGraph graph = load(a.common);
  const NodeSet controls = parse_node_set(a.controls, graph_size(graph));
  const std::vector<SpectralClass> classes = parse_classes(a.classes);
  const SamplerConfig config = a.sampling.config(a.common.undirected);
  const VerifyOptions options{{}, a.jobs, a.stop_at_first};
  const PBHReport report =
      std::visit([&](const auto& g) { return monte_carlo_verify(g, controls, classes, config, options); }, graph);
  if (!a.csv_out.empty()) {
    std::ofstream file(a.csv_out, std::ios::binary);
    if (!file) throw Error("cannot write '" + a.csv_out + "'");
    file << report_csv(report);
  }
  if (a.common.format == "csv") {
    out << report_csv(report);
  } else if (a.common.format == "kv") {
    out << report_kv(report);
  } else {
    out << report_text(report);
  }
  return report.total_violations() == 0 ? ok : negative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero forcing and structural controllability of signed networks"};
  app.require_subcommand(1);
  const std::vector<std::string> text_kv{"text", "kv"};
  const std::vector<std::string> all_formats{"text", "csv", "kv"};

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a zero forcing predicate");
  add_graph_options(c, check.common);
  c->add_option("--set", check.set, "Initially black nodes, 1-based, comma-separated")->required();
  c->add_option("--kind", check.kind, "classical|strong|signed|positive|negative");
  c->add_option("--mode", check.mode, "Signed game search")->check(CLI::IsMember({"exhaustive", "deterministic"}));
  c->add_flag("--trace", check.trace, "Print the derivation");
  c->add_option("--format", check.common.format)->check(CLI::IsMember(text_kv));

  ClosureArgs closure;
  auto* cl = app.add_subcommand("closure", "Print a looped closure as SGF");
  add_graph_options(cl, closure.common);
  cl->add_option("--which", closure.which, "cross|plus|minus")->check(CLI::IsMember({"cross", "plus", "minus"}));

  MinArgs min;
  auto* m = app.add_subcommand("min", "Minimum zero forcing set");
  add_graph_options(m, min.common);
  m->add_option("--kind", min.kind, "classical|strong|signed|positive|negative");
  m->add_flag("--greedy", min.greedy, "Greedy upper bound instead of exact search");
  m->add_option("--jobs", min.jobs, "Worker threads (default $ZFORCE_JOBS or 1)")->check(CLI::PositiveNumber);
  m->add_option("--format", min.common.format)->check(CLI::IsMember(text_kv));

  CertifyArgs certify;
  auto* ce = app.add_subcommand("certify", "Controllability certificate for a control set");
  add_graph_options(ce, certify.common);
  ce->add_option("--controls", certify.controls, "Control nodes, 1-based, comma-separated")->required();
  ce->add_flag("--assert-real", certify.assert_real, "Assert that the sign pattern only admits real spectra");
  ce->add_flag("--trace", certify.trace, "Print each game's derivation");
  ce->add_option("--probe-realness", certify.probe_realness, "Sample this many matrices looking for complex spectra")
      ->check(CLI::NonNegativeNumber);
  ce->add_option("--seed", certify.seed, "Seed for --probe-realness");
  ce->add_option("--jobs", certify.jobs, "Worker threads (default $ZFORCE_JOBS or 1)")->check(CLI::PositiveNumber);
  ce->add_option("--format", certify.common.format)->check(CLI::IsMember(text_kv));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Monte Carlo PBH test over the qualitative class");
  add_graph_options(v, verify.common);
  v->add_option("--controls", verify.controls, "Control nodes, 1-based, comma-separated")->required();
  v->add_option("--classes", verify.classes, "Spectral classes to test, comma-separated");
  add_sampling_options(v, verify.sampling);
  v->add_option("--out", verify.csv_out, "Also write the CSV report to this file");
  v->add_flag("--stop-at-first", verify.stop_at_first, "Stop after the first sample with a violation");
  v->add_option("--jobs", verify.jobs, "Worker threads (default $ZFORCE_JOBS or 1)")->check(CLI::PositiveNumber);
  v->add_option("--format", verify.common.format)->check(CLI::IsMember(all_formats));

  min.jobs = certify.jobs = verify.jobs = default_jobs();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*c) return cmd_check(check, out);
    if (*cl) return cmd_closure(closure, out);
    if (*m) return cmd_min(min, out);
    if (*ce) return cmd_certify(certify, out);
    return cmd_verify(verify, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return resource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace zforce::cli
