#include "zforce/numeric/oracle.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "parallel.hpp"
#include "zforce/errors.hpp"

namespace zforce {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool wanted(const std::vector<SpectralClass>& classes, SpectralClass c) {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

struct SampleOutcome {
  std::vector<SpectralRecord> records;
  std::optional<std::string> error;
  bool violated = false;
};

template <typename Graph>
SampleOutcome run_sample(const Graph& g, const NodeSet& controls, const std::vector<SpectralClass>& classes,
                         const SamplerConfig& config, std::uint64_t index, const Tolerances& tol) {
  SampleOutcome out;
  try {
    const MatrixX<double> a = sample_matrix(g, config, index);
    for (SpectralRecord& r : pbh_records(a, controls, tol)) {
      if (!wanted(classes, r.cls)) continue;
      if (!r.controllable) out.violated = true;
      out.records.push_back(r);
    }
  } catch (const NumericError& e) {
    out.error = e.what();
  }
  return out;
}

template <typename Graph>
PBHReport verify(const Graph& g, const NodeSet& controls, const std::vector<SpectralClass>& classes,
                 const SamplerConfig& config, const VerifyOptions& options) {
  validate_controls(g.size(), controls);
  config.validate();
  const std::size_t total = static_cast<std::size_t>(config.samples);
  std::vector<SampleOutcome> outcomes(total);
  auto work = [&](std::size_t i) { outcomes[i] = run_sample(g, controls, classes, config, i, options.tol); };

  std::size_t used = total;
  if (!options.stop_at_first_violation) {
    detail::parallel_for(total, options.jobs, work);
  } else {
    // Blocks keep the cut point independent of thread scheduling.
    const std::size_t block = std::max(1u, options.jobs) * std::size_t{8};
    for (std::size_t start = 0; start < total && used == total; start += block) {
      const std::size_t count = std::min(block, total - start);
      detail::parallel_for(count, options.jobs, [&](std::size_t k) { work(start + k); });
      for (std::size_t i = start; i < start + count; ++i) {
        if (outcomes[i].violated) {
          used = i + 1;
          break;
        }
      }
    }
  }

  PBHReport report;
  report.config = config;
  report.controls = controls;
  report.classes = classes;
  for (SpectralClass c : classes) report.summary[c].worst_margin = infinity;
  report.samples.reserve(used);
  for (std::size_t i = 0; i < used; ++i) {
    SampleOutcome& o = outcomes[i];
    if (o.error) report.failures.push_back({i, *o.error});
    for (const SpectralRecord& r : o.records) {
      ClassSummary& s = report.summary[r.cls];
      ++s.checked;
      s.worst_margin = std::min(s.worst_margin, r.pbh_margin);
      if (!r.controllable) {
        ++s.violations;
        if (!s.first_violation) s.first_violation = i;
      }
    }
    report.samples.push_back(std::move(o.records));
  }
  return report;
}

std::string class_list(const std::vector<SpectralClass>& classes) {
  std::string out;
  for (SpectralClass c : classes) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

/// Orthonormal basis of the left eigenspace of a real eigenvalue of
/// geometric multiplicity `g`: the g weakest right singular directions of
/// (A - lambda I)^T.
MatrixX<double> left_basis(const MatrixX<double>& a, double lambda, int g) {
  MatrixX<double> shifted = a.transpose();
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<MatrixX<double>> svd(shifted, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(g);
}

/// Columns spanning {basis * c : (basis * c)_Z = 0}.
MatrixX<double> restrict_to_vanishing(const MatrixX<double>& basis, const NodeSet& z) {
  if (z.empty()) return basis;
  MatrixX<double> rows(static_cast<Eigen::Index>(z.size()), basis.cols());
  Eigen::Index r = 0;
  for (Node v : z) rows.row(r++) = basis.row(v);
  Eigen::JacobiSVD<MatrixX<double>> svd(rows, Eigen::ComputeFullV);
  // basis is orthonormal, so singular values of the restriction lie in [0, 1].
  const Eigen::Index rank = (svd.singularValues().array() > 1e-8).count();
  return basis * svd.matrixV().rightCols(basis.cols() - rank);
}

ForcingCheck game_for(const SignedDigraph& g, const NodeSet& z, SpectralClass cls, const GameOptions& game) {
  switch (cls) {
    case SpectralClass::zero: return check_signed_zfs(g, z, game);
    case SpectralClass::positive: return check_positive_signed_zfs(g, z, game);
    case SpectralClass::negative: return check_negative_signed_zfs(g, z, game);
    case SpectralClass::complex: break;
  }
  throw std::invalid_argument("eigenvector check needs the zero, positive or negative class");
}

}  // namespace

std::size_t PBHReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& [cls, s] : summary) total += s.violations;
  return total;
}

std::vector<SpectralRecord> pbh_records(const MatrixX<double>& a, const NodeSet& controls, const Tolerances& tol) {
  std::vector<SpectralRecord> records = left_eigen_analysis(a, tol);
  const double threshold = tol.pbh * spectral_norm(a);
  for (SpectralRecord& r : records) {
    r.pbh_margin = pbh_margin(a, controls, r.eigenvalue);
    r.controllable = r.pbh_margin > threshold;
  }
  return records;
}

PBHReport monte_carlo_verify(const SignedDigraph& g, const NodeSet& controls, const std::vector<SpectralClass>& classes,
                             const SamplerConfig& config, const VerifyOptions& options) {
  return verify(g, controls, classes, config, options);
}

PBHReport monte_carlo_verify(const PatternDigraph& g, const NodeSet& controls,
                             const std::vector<SpectralClass>& classes, const SamplerConfig& config,
                             const VerifyOptions& options) {
  return verify(g, controls, classes, config, options);
}

std::string report_csv(const PBHReport& report) {
  std::string out = "sample,eigen_index,re,im,class,alg_mult,geo_mult,pbh_margin,controllable\n";
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const auto& records = report.samples[i];
    for (std::size_t k = 0; k < records.size(); ++k) {
      const SpectralRecord& r = records[k];
      out += std::to_string(i) + ',' + std::to_string(k) + ',' + g17(r.eigenvalue.real()) + ',' +
             g17(r.eigenvalue.imag()) + ',' + std::string(to_string(r.cls)) + ',' +
             std::to_string(r.algebraic_multiplicity) + ',' + std::to_string(r.geometric_multiplicity) + ',' +
             g17(r.pbh_margin) + ',' + (r.controllable ? "1" : "0") + '\n';
    }
  }
  return out;
}

std::string report_text(const PBHReport& report) {
  std::ostringstream out;
  out << "samples: " << report.samples.size() << " of " << report.config.samples << " (seed " << report.config.seed
      << ")\n";
  out << "controls: " << format_node_set(report.controls) << "\n";
  out << "classes: " << class_list(report.classes) << "\n";
  for (const auto& [cls, s] : report.summary) {
    out << to_string(cls) << ": " << s.checked << " eigenvalues checked, " << s.violations << " violations";
    if (s.checked > 0) out << ", worst margin " << g17(s.worst_margin);
    if (s.first_violation) out << ", first violation in sample " << *s.first_violation;
    out << "\n";
  }
  for (const SampleFailure& f : report.failures) out << "sample " << f.sample << " failed: " << f.message << "\n";
  out << "result: " << (report.total_violations() == 0 ? "no violations" : "violations found") << "\n";
  return out.str();
}

std::string report_kv(const PBHReport& report) {
  std::ostringstream out;
  out << "samples=" << report.samples.size() << "\n";
  out << "requested_samples=" << report.config.samples << "\n";
  out << "seed=" << report.config.seed << "\n";
  out << "magnitude_lo=" << g17(report.config.magnitude_lo) << "\n";
  out << "magnitude_hi=" << g17(report.config.magnitude_hi) << "\n";
  out << "zero_probability=" << g17(report.config.unknown_zero_probability) << "\n";
  out << "lattice_probability=" << g17(report.config.lattice_probability) << "\n";
  out << "controls=" << format_node_set(report.controls) << "\n";
  out << "classes=" << class_list(report.classes) << "\n";
  for (const auto& [cls, s] : report.summary) {
    const std::string key(to_string(cls));
    out << key << ".checked=" << s.checked << "\n";
    out << key << ".violations=" << s.violations << "\n";
    out << key << ".worst_margin=" << g17(s.worst_margin) << "\n";
    if (s.first_violation) out << key << ".first_violation=" << *s.first_violation << "\n";
  }
  out << "failures=" << report.failures.size() << "\n";
  out << "violations=" << report.total_violations() << "\n";
  return out.str();
}

EigenvectorCheck eigenvector_vanishing_check(const SignedDigraph& g, const NodeSet& z, SpectralClass cls, const SamplerConfig& config,
                              const EigenvectorCheckOptions& options) {
  config.validate();
  const ForcingCheck game = game_for(g, z, cls, options.game);
  EigenvectorCheck res;
  res.cls = cls;
  res.z = z;
  res.colored = game.sets.colored;
  res.marked = game.sets.marked;

  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(config.samples); ++i) {
    ++res.samples;
    const MatrixX<double> a = sample_matrix(g, config, i);
    std::vector<SpectralRecord> records;
    try {
      records = left_eigen_analysis(a, options.tol);
    } catch (const NumericError& e) {
      res.failures.push_back({i, e.what()});
      continue;
    }
    bool failed = false;
    for (const SpectralRecord& r : records) {
      if (r.cls != cls) continue;
      ++res.eigenvalues;
      const MatrixX<double> vectors =
          restrict_to_vanishing(left_basis(a, r.eigenvalue.real(), r.geometric_multiplicity), z);
      for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        const VectorX<double> nu = vectors.col(c).normalized();
        ++res.vectors;
        bool vanishes = true;
        for (Node v : res.colored) {
          const double ratio = std::abs(nu(v));
          res.worst_ratio = std::max(res.worst_ratio, ratio);
          if (ratio > options.vanish) vanishes = false;
        }
        if (!vanishes) {
          ++res.vanish_failures;
          failed = true;
        }
        int agree = 0;
        int disagree = 0;
        for (const auto& [v, m] : res.marked) {
          if (std::abs(nu(v)) <= options.vanish) continue;
          const Sign s = nu(v) > 0 ? Sign::plus : Sign::minus;
          (s == m ? agree : disagree) += 1;
        }
        if (agree > 0 && disagree > 0) {
          ++res.mark_failures;
          failed = true;
        }
      }
    }
    if (failed && !res.first_failure) res.first_failure = i;
  }
  return res;
}

MultiplicityProbe multiplicity_probe(const SignedDigraph& g, const MultiplicityBound& bound,
                                     const SamplerConfig& config, const VerifyOptions& options) {
  config.validate();
  const std::size_t total = static_cast<std::size_t>(config.samples);
  std::vector<std::pair<int, int>> maxima(total, {0, 0});
  std::vector<std::optional<std::string>> errors(total);
  detail::parallel_for(total, options.jobs, [&](std::size_t i) {
    try {
      for (const SpectralRecord& r : left_eigen_analysis(sample_matrix(g, config, i), options.tol)) {
        if (r.cls == SpectralClass::positive) maxima[i].first = std::max(maxima[i].first, r.geometric_multiplicity);
        if (r.cls == SpectralClass::negative) maxima[i].second = std::max(maxima[i].second, r.geometric_multiplicity);
      }
    } catch (const NumericError& e) {
      errors[i] = e.what();
    }
  });
  MultiplicityProbe probe;
  probe.samples = total;
  probe.positive_bound = bound.positive_bound;
  probe.negative_bound = bound.negative_bound;
  for (std::size_t i = 0; i < total; ++i) {
    if (errors[i]) probe.failures.push_back({i, *errors[i]});
    probe.max_positive = std::max(probe.max_positive, maxima[i].first);
    probe.max_negative = std::max(probe.max_negative, maxima[i].second);
    if (!probe.first_excess && (maxima[i].first > bound.positive_bound || maxima[i].second > bound.negative_bound)) {
      probe.first_excess = i;
    }
  }
  return probe;
}

RealnessProbe realness_probe(const SignedDigraph& g, const SamplerConfig& config, const VerifyOptions& options) {
  config.validate();
  const std::size_t total = static_cast<std::size_t>(config.samples);
  std::vector<char> complex(total, 0);
  std::vector<std::optional<std::string>> errors(total);
  detail::parallel_for(total, options.jobs, [&](std::size_t i) {
    try {
      for (const SpectralRecord& r : left_eigen_analysis(sample_matrix(g, config, i), options.tol)) {
        if (r.cls == SpectralClass::complex) complex[i] = 1;
      }
    } catch (const NumericError& e) {
      errors[i] = e.what();
    }
  });
  RealnessProbe probe;
  probe.samples = total;
  for (std::size_t i = 0; i < total; ++i) {
    if (errors[i]) probe.failures.push_back({i, *errors[i]});
    if (complex[i]) {
      ++probe.complex_samples;
      if (!probe.first_complex) probe.first_complex = i;
    }
  }
  return probe;
}

}  // namespace zforce
