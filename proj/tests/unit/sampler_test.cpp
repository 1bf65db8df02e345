#include <gtest/gtest.h>

#include "support/random_graphs.hpp"
#include "zforce/numeric/sampler.hpp"

namespace zforce {
namespace {

using Eigen::MatrixXd;

// Sign pattern of a sample as labels, with '?' where the graph allows either.
bool fits_class(const SignedDigraph& g, const MatrixXd& a) {
  const int n = g.size();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double x = a(r, c);
      switch (g.entry(r, c)) {
        case EntryLabel::zero:
          if (x != 0) return false;
          break;
        case EntryLabel::plus:
          if (!(x > 0)) return false;
          break;
        case EntryLabel::minus:
          if (!(x < 0)) return false;
          break;
        default: break;
      }
    }
  }
  return true;
}

TEST(Sampler, SamplesRespectTheSignPattern) {
  test::Rng rng(47);
  SamplerConfig cfg;
  for (int t = 0; t < 50; ++t) {
    const SignedDigraph g = test::random_signed(rng, test::uniform_int(rng, 1, 7), 0.4);
    for (std::uint64_t i = 0; i < 20; ++i) EXPECT_TRUE(fits_class(g, sample_matrix(g, cfg, i)));
  }
}

TEST(Sampler, MagnitudesStayInRange) {
  const SignedDigraph g(2, {{{0, 1}, Sign::minus}}, {{0, EntryLabel::plus}});
  SamplerConfig cfg;
  cfg.magnitude_lo = 0.5;
  cfg.magnitude_hi = 4;
  cfg.lattice_probability = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const MatrixXd a = sample_matrix(g, cfg, i);
    EXPECT_GE(a(0, 0), 0.5);
    EXPECT_LE(a(0, 0), 4);
    EXPECT_GE(-a(1, 0), 0.5);
    EXPECT_LE(-a(1, 0), 4);
  }
}

TEST(Sampler, LatticeSamplesUseOneAndTwo) {
  const SignedDigraph g(2, {{{0, 1}, Sign::plus}, {{1, 0}, Sign::minus}}, {{0, EntryLabel::plus}});
  SamplerConfig cfg;
  cfg.lattice_probability = 1;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const MatrixXd a = sample_matrix(g, cfg, i);
    for (double x : {a(0, 0), a(1, 0), -a(0, 1)}) EXPECT_TRUE(x == 1 || x == 2) << x;
  }
}

TEST(Sampler, UnknownDiagonalTakesAllThreeSigns) {
  const SignedDigraph g(1, {}, {{0, EntryLabel::unknown}});
  SamplerConfig cfg;
  int zero = 0;
  int pos = 0;
  int neg = 0;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    const double x = sample_matrix(g, cfg, i)(0, 0);
    (x == 0 ? zero : x > 0 ? pos : neg)++;
  }
  EXPECT_NEAR(zero / 3000.0, 1.0 / 3.0, 0.04);
  EXPECT_NEAR(pos / 3000.0, 1.0 / 3.0, 0.04);
  EXPECT_NEAR(neg / 3000.0, 1.0 / 3.0, 0.04);
}

TEST(Sampler, DeterministicPerSeedAndIndex) {
  test::Rng rng(53);
  const SignedDigraph g = test::random_signed(rng, 6, 0.5);
  SamplerConfig cfg;
  cfg.seed = 99;
  EXPECT_EQ(sample_matrix(g, cfg, 7), sample_matrix(g, cfg, 7));
  EXPECT_NE(sample_matrix(g, cfg, 7), sample_matrix(g, cfg, 8));
  SamplerConfig other = cfg;
  other.seed = 100;
  EXPECT_NE(sample_matrix(g, cfg, 7), sample_matrix(g, other, 7));
}

TEST(Sampler, EmptyGraphGivesZeroMatrix) {
  EXPECT_EQ(sample_matrix(SignedDigraph(3), SamplerConfig{}, 0), MatrixXd::Zero(3, 3));
}

TEST(Sampler, SymmetricMode) {
  test::Rng rng(59);
  SamplerConfig cfg;
  cfg.symmetric = true;
  for (int t = 0; t < 30; ++t) {
    const SignedDigraph g = test::random_symmetric_signed(rng, test::uniform_int(rng, 1, 6), 0.5);
    const MatrixXd a = sample_matrix(g, cfg, static_cast<std::uint64_t>(t));
    EXPECT_EQ(a, a.transpose());
    EXPECT_TRUE(fits_class(g, a));
  }
  EXPECT_THROW(sample_matrix(SignedDigraph(2, {{{0, 1}, Sign::plus}}), cfg, 0), std::invalid_argument);
  EXPECT_THROW(sample_matrix(PatternDigraph(2, {{0, 1}}), cfg, 0), std::invalid_argument);
}

TEST(Sampler, PatternSamplesHaveBothSigns) {
  const PatternDigraph g(2, {{0, 1}}, {{0, EntryLabel::cross}});
  SamplerConfig cfg;
  int pos = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    const MatrixXd a = sample_matrix(g, cfg, i);
    EXPECT_NE(a(0, 0), 0);
    EXPECT_NE(a(1, 0), 0);
    EXPECT_EQ(a(0, 1), 0);
    EXPECT_EQ(a(1, 1), 0);
    if (a(1, 0) > 0) ++pos;
  }
  EXPECT_GT(pos, 150);
  EXPECT_LT(pos, 250);
}

TEST(Sampler, ConfigValidation) {
  const SignedDigraph g(1);
  auto bad = [&](auto tweak) {
    SamplerConfig cfg;
    tweak(cfg);
    EXPECT_THROW(sample_matrix(g, cfg, 0), std::invalid_argument);
  };
  bad([](SamplerConfig& c) { c.magnitude_lo = 0; });
  bad([](SamplerConfig& c) { c.magnitude_hi = 0.01; });
  bad([](SamplerConfig& c) { c.unknown_zero_probability = 1.5; });
  bad([](SamplerConfig& c) { c.lattice_probability = -0.1; });
  bad([](SamplerConfig& c) { c.samples = -1; });
}

}  // namespace
}  // namespace zforce
