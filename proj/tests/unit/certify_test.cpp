#include <gtest/gtest.h>

#include "zforce/certify.hpp"
#include "zforce/errors.hpp"
#include "zforce/numeric/oracle.hpp"
#include "zforce/sgf.hpp"

namespace zforce {
namespace {

const std::string fixtures = ZFORCE_FIXTURES;

SignedDigraph fixture(const std::string& name, bool undirected = false) {
  return std::get<SignedDigraph>(read_sgf_file(fixtures + "/" + name, SgfOptions{undirected}));
}

NodeSet all_nodes(int n) {
  NodeSet s;
  for (Node v = 0; v < n; ++v) s.insert(v);
  return s;
}

TEST(Certify, TwoControlsFeedingAChain) {
  const Certificate c = certify_signed(fixture("two_control_chain.sgf"), {3, 4}, true);
  for (const ClassCertificate& cc : c.classes) {
    EXPECT_TRUE(cc.certified) << to_string(cc.cls);
    EXPECT_TRUE(cc.exhaustive);
  }
  EXPECT_EQ(c.classes[0].cls, SpectralClass::zero);
  EXPECT_EQ(c.classes[1].cls, SpectralClass::positive);
  EXPECT_EQ(c.classes[2].cls, SpectralClass::negative);
  EXPECT_TRUE(c.certified_controllable);
  EXPECT_TRUE(c.reasons.empty());
  EXPECT_EQ(c.witnesses.size(), 3u);
  EXPECT_EQ(c.method_refs.size(), 4u);
}

TEST(Certify, RealnessGatesTheOverallVerdict) {
  const Certificate c = certify_signed(fixture("two_control_chain.sgf"), {3, 4}, false);
  EXPECT_FALSE(c.certified_controllable);
  ASSERT_EQ(c.reasons.size(), 1u);
  EXPECT_EQ(c.reasons.front(), "realness unverified");
  EXPECT_NE(certificate_text(c).find("overall: inconclusive"), std::string::npos);
  EXPECT_NE(certificate_kv(c).find("realness=unverified"), std::string::npos);
}

TEST(Certify, AllNodesAlwaysCertify) {
  const SignedDigraph g = fixture("four_node.sgf");
  const Certificate c = certify_signed(g, all_nodes(g.size()), true);
  EXPECT_TRUE(c.certified_controllable);
}

TEST(Certify, SingleControlOnFourNodeExample) {
  const Certificate c = certify_signed(fixture("four_node.sgf"), {2}, true);
  EXPECT_FALSE(c.classes[0].certified);
  // node 4 carries a negative loop once the diagonal is shifted, so it colors itself
  EXPECT_TRUE(c.classes[1].certified);
  EXPECT_TRUE(c.classes[2].certified);
  EXPECT_FALSE(c.certified_controllable);
  ASSERT_EQ(c.reasons.size(), 1u);
  EXPECT_EQ(c.reasons.front().rfind("zero eigenvalues: signed_zfs failed", 0), 0u) << c.reasons.front();
  EXPECT_EQ(c.witnesses, (std::vector<std::string>{"positive_signed_zfs", "negative_signed_zfs"}));
}

TEST(Certify, UndirectedFourCycle) {
  const SignedDigraph g = fixture("signed_square_undirected.sgf", true);
  EXPECT_TRUE(is_symmetric(g));
  const Certificate c = certify_signed(g, {0, 1}, true);
  EXPECT_TRUE(c.certified_controllable) << certificate_text(c);
}

TEST(Certify, PatternVerdicts) {
  const auto g = std::get<PatternDigraph>(read_sgf_file(fixtures + "/triangle_isolated_pattern.sgf"));
  const PatternVerdict both = certify_pattern(g, {1, 3, 4});
  EXPECT_TRUE(both.classical);
  EXPECT_TRUE(both.strong);
  EXPECT_TRUE(both.controllable);
  const PatternVerdict weak = certify_pattern(g, {3, 4});
  EXPECT_TRUE(weak.classical);
  EXPECT_FALSE(weak.strong);
  EXPECT_FALSE(weak.controllable);
  EXPECT_EQ(weak.strong_derived, (NodeSet{3, 4}));
  EXPECT_NE(pattern_verdict_kv(weak, {3, 4}, 5).find("strong=false"), std::string::npos);
}

TEST(Certify, ControlsAreValidated) {
  const SignedDigraph g = fixture("four_node.sgf");
  EXPECT_THROW(certify_signed(g, {}, true), GraphError);
  EXPECT_THROW(certify_signed(g, {4}, true), GraphError);
  EXPECT_THROW(certify_signed(g, {-1}, true), GraphError);
  EXPECT_THROW(certify_pattern(PatternDigraph(2), {2}), GraphError);
  EXPECT_THROW(certify_signed_class(g, {0}, SpectralClass::complex), std::invalid_argument);
}

TEST(Certify, MultiplicityBoundsOfSmallGraphs) {
  const MultiplicityBound one = multiplicity_bounds(SignedDigraph(1, {}, {{0, EntryLabel::plus}}));
  EXPECT_EQ(one.positive_bound, 1);
  EXPECT_EQ(one.negative_bound, 0);
  EXPECT_TRUE(one.exact);

  const MultiplicityBound empty = multiplicity_bounds(SignedDigraph(3));
  EXPECT_EQ(empty.positive_bound, 0);
  EXPECT_EQ(empty.negative_bound, 0);

  SignedDigraph::EdgeMap edges;
  SignedDigraph::LoopMap loops;
  for (Node i = 0; i < 3; ++i) {
    loops[i] = EntryLabel::plus;
    for (Node j = 0; j < 3; ++j) {
      if (i != j) edges[{i, j}] = Sign::plus;
    }
  }
  const SignedDigraph complete(3, edges, loops);
  const MultiplicityBound b = multiplicity_bounds(complete);
  EXPECT_EQ(b.positive_bound, 2);
  EXPECT_EQ(b.negative_bound, 2);
  SamplerConfig cfg;
  cfg.samples = 300;
  const MultiplicityProbe probe = multiplicity_probe(complete, b, cfg);
  EXPECT_TRUE(probe.within_bounds());
  EXPECT_GE(probe.max_positive, 1);

  // both bounds are attained inside the class: J + I has eigenvalue 1 twice, 2J - I has -1 twice
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(3, 3);
  for (const Eigen::MatrixXd& a : {Eigen::MatrixXd(ones + Eigen::MatrixXd::Identity(3, 3)),
                                   Eigen::MatrixXd(2 * ones - Eigen::MatrixXd::Identity(3, 3))}) {
    int repeated = 0;
    for (const SpectralRecord& r : left_eigen_analysis(a)) repeated = std::max(repeated, r.geometric_multiplicity);
    EXPECT_EQ(repeated, 2);
  }
}

TEST(Certify, NodeSetFormatting) {
  EXPECT_EQ(format_node_set({}), "{}");
  EXPECT_EQ(format_node_set({0, 2}), "{1,3}");
}

}  // namespace
}  // namespace zforce
