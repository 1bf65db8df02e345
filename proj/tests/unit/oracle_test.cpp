#include <gtest/gtest.h>

#include <sstream>

#include "support/random_graphs.hpp"
#include "zforce/numeric/oracle.hpp"
#include "zforce/sgf.hpp"

namespace zforce {
namespace {

const std::string fixtures = ZFORCE_FIXTURES;
const std::vector<SpectralClass> all_classes{SpectralClass::zero, SpectralClass::positive, SpectralClass::negative,
                                             SpectralClass::complex};

SignedDigraph fixture(const std::string& name) {
  return std::get<SignedDigraph>(read_sgf_file(fixtures + "/" + name));
}

SamplerConfig samples(int count, std::uint64_t seed = 1) {
  SamplerConfig cfg;
  cfg.samples = count;
  cfg.seed = seed;
  return cfg;
}

TEST(Oracle, CertifiedControlsSurviveSampling) {
  const PBHReport r = monte_carlo_verify(fixture("two_control_chain.sgf"), {3, 4}, all_classes, samples(200));
  EXPECT_EQ(r.total_violations(), 0u);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.samples.size(), 200u);
  std::size_t checked = 0;
  for (const auto& [cls, s] : r.summary) checked += s.checked;
  EXPECT_GT(checked, 200u);
}

TEST(Oracle, AllNodesAsControls) {
  test::Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const SignedDigraph g = test::random_signed(rng, 6, 0.4);
    NodeSet all;
    for (Node v = 0; v < 6; ++v) all.insert(v);
    EXPECT_EQ(monte_carlo_verify(g, all, all_classes, samples(50)).total_violations(), 0u);
  }
}

TEST(Oracle, MissingControlIsCaught) {
  // node 3 is isolated and unlooped, so every sample has a zero eigenvalue living on it
  const SignedDigraph g(3, {{{0, 1}, Sign::plus}});
  const PBHReport r = monte_carlo_verify(g, {0}, {SpectralClass::zero}, samples(20));
  EXPECT_EQ(r.summary.at(SpectralClass::zero).violations, 20u);
  EXPECT_EQ(r.summary.at(SpectralClass::zero).first_violation, 0u);
  EXPECT_NEAR(r.summary.at(SpectralClass::zero).worst_margin, 0, 1e-12);
}

TEST(Oracle, ClassFilter) {
  const PBHReport r = monte_carlo_verify(fixture("two_control_chain.sgf"), {3, 4}, {SpectralClass::positive}, samples(30));
  for (const auto& recs : r.samples) {
    for (const SpectralRecord& rec : recs) EXPECT_EQ(rec.cls, SpectralClass::positive);
  }
  EXPECT_EQ(r.summary.size(), 1u);
}

TEST(Oracle, StopAtFirstViolationIsJobIndependent) {
  const SignedDigraph g = fixture("four_node.sgf");
  VerifyOptions one;
  one.stop_at_first_violation = true;
  VerifyOptions three = one;
  three.jobs = 3;
  const PBHReport a = monte_carlo_verify(g, {2}, all_classes, samples(200, 5), one);
  const PBHReport b = monte_carlo_verify(g, {2}, all_classes, samples(200, 5), three);
  ASSERT_GT(a.total_violations(), 0u);
  EXPECT_EQ(report_csv(a), report_csv(b));
  EXPECT_LT(a.samples.size(), 200u);
}

TEST(Oracle, CsvLayout) {
  const PBHReport r = monte_carlo_verify(fixture("two_control_chain.sgf"), {3, 4}, all_classes, samples(3));
  std::istringstream in(report_csv(r));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "sample,eigen_index,re,im,class,alg_mult,geo_mult,pbh_margin,controllable");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8) << line;
  }
  std::size_t records = 0;
  for (const auto& s : r.samples) records += s.size();
  EXPECT_EQ(rows, records);
  EXPECT_NE(report_kv(r).find("violations"), std::string::npos);
}

TEST(Oracle, VerificationOfPatternGraphs) {
  const auto g = std::get<PatternDigraph>(read_sgf_file(fixtures + "/triangle_isolated_pattern.sgf"));
  EXPECT_EQ(monte_carlo_verify(g, {1, 3, 4}, all_classes, samples(100)).total_violations(), 0u);
  EXPECT_GT(monte_carlo_verify(g, {3, 4}, all_classes, samples(100)).total_violations(), 0u);
}

TEST(Oracle, EigenvectorCheckOnCertifiedControls) {
  const SignedDigraph g = fixture("two_control_chain.sgf");
  for (SpectralClass cls : {SpectralClass::zero, SpectralClass::positive, SpectralClass::negative}) {
    const EigenvectorCheck c = eigenvector_vanishing_check(g, {3, 4}, cls, samples(100));
    EXPECT_TRUE(c.passed()) << to_string(cls);
    EXPECT_EQ(c.colored.size(), 5u);
    EXPECT_EQ(c.samples, 100u);
  }
}

TEST(Oracle, EigenvectorCheckOnPartialDerivation) {
  // controls {3} leave the zero-class game short; the vectors that vanish on
  // the control still vanish on whatever the game did color
  const SignedDigraph g = fixture("four_node.sgf");
  const EigenvectorCheck c = eigenvector_vanishing_check(g, {2}, SpectralClass::zero, samples(200));
  EXPECT_TRUE(c.passed());
  EXPECT_LT(c.colored.size(), 4u);
  EXPECT_LE(c.worst_ratio, 1e-7);
}

TEST(Oracle, MultiplicityProbeRespectsBound) {
  test::Rng rng(67);
  for (int t = 0; t < 10; ++t) {
    const SignedDigraph g = test::random_signed(rng, 5, 0.4);
    const MultiplicityBound b = multiplicity_bounds(g);
    EXPECT_TRUE(multiplicity_probe(g, b, samples(60)).within_bounds());
  }
}

TEST(Oracle, RealnessProbe) {
  const SignedDigraph cycle(2, {{{0, 1}, Sign::plus}, {{1, 0}, Sign::minus}});
  const RealnessProbe complex = realness_probe(cycle, samples(20));
  EXPECT_EQ(complex.complex_samples, 20u);
  EXPECT_EQ(complex.first_complex, 0u);
  const SignedDigraph path(3, {{{0, 1}, Sign::plus}, {{1, 2}, Sign::minus}}, {{0, EntryLabel::plus}});
  EXPECT_EQ(realness_probe(path, samples(50)).complex_samples, 0u);
}

}  // namespace
}  // namespace zforce
