#include <gtest/gtest.h>

#include <optional>

#include "support/oracles.hpp"
#include "support/random_graphs.hpp"
#include "zforce/errors.hpp"
#include "zforce/search.hpp"
#include "zforce/sgf.hpp"

namespace zforce {
namespace {

const std::string fixtures = ZFORCE_FIXTURES;

NodeSet from_mask(int n, unsigned mask) {
  NodeSet s;
  for (Node v = 0; v < n; ++v) {
    if (mask & (1u << v)) s.insert(v);
  }
  return s;
}

// Smallest size of a set that blackens everything in the unpruned game on `p`.
int brute_force_signed_min(const LabelGrid& p) {
  const int n = p.size();
  test::SignedGameOracle oracle(p);
  std::optional<int> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const NodeSet z = from_mask(n, mask);
    if (best && static_cast<int>(z.size()) >= *best) continue;
    if (oracle.best_black(z) == n) best = static_cast<int>(z.size());
  }
  return *best;
}

int brute_force_classical_min(const LabelGrid& p) {
  const int n = p.size();
  test::Rng rng(0);
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const NodeSet z = from_mask(n, mask);
    if (static_cast<int>(z.size()) < best && static_cast<int>(test::classical_random_order(p, z, rng).size()) == n) {
      best = static_cast<int>(z.size());
    }
  }
  return best;
}

TEST(Search, KindNames) {
  for (ForcingKind k : {ForcingKind::classical, ForcingKind::strong, ForcingKind::signed_zfs,
                        ForcingKind::positive_signed, ForcingKind::negative_signed}) {
    EXPECT_EQ(parse_forcing_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_forcing_kind("bogus"), std::nullopt);
}

TEST(Search, ClassicalSmallCases) {
  const PatternDigraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const SearchResult r = min_forcing_set(path, ForcingKind::classical);
  EXPECT_EQ(r.minimum_size, 1);  // the source has no in-arc, everything else is forced along the path
  EXPECT_EQ(r.witness, (NodeSet{0}));
  EXPECT_TRUE(r.exact);

  const PatternDigraph unknown_loops(3, {}, {{0, EntryLabel::unknown}, {1, EntryLabel::unknown}, {2, EntryLabel::unknown}});
  EXPECT_EQ(min_forcing_set(unknown_loops, ForcingKind::classical).minimum_size, 3);
  EXPECT_EQ(min_forcing_set(PatternDigraph(4), ForcingKind::classical).minimum_size, 4);
  EXPECT_EQ(min_forcing_set(PatternDigraph(4), ForcingKind::strong).minimum_size, 0);
}

TEST(Search, TriangleWithIsolatedNodes) {
  const auto g = std::get<PatternDigraph>(read_sgf_file(fixtures + "/triangle_isolated_pattern.sgf"));
  const SearchResult classical = min_forcing_set(g, ForcingKind::classical);
  EXPECT_EQ(classical.minimum_size, 2);
  EXPECT_EQ(classical.witness, (NodeSet{3, 4}));
  const SearchResult strong = min_forcing_set(g, ForcingKind::strong);
  EXPECT_EQ(strong.minimum_size, 1);
  EXPECT_EQ(strong.witness, (NodeSet{0}));
}

TEST(Search, FourNodeExample) {
  const SignedDigraph g = parse_signed_sgf(
      "nodes 4\nedge 2 1 -\nedge 3 2 +\nedge 3 4 +\nloop 1 ?\nloop 2 -\nloop 3 +\n");
  const SearchResult r = min_forcing_set(g, ForcingKind::signed_zfs);
  EXPECT_EQ(r.minimum_size, brute_force_signed_min(to_sign_pattern(g)));
  EXPECT_EQ(r.minimum_size, 2);
  EXPECT_EQ(r.witness, (NodeSet{0, 2}));
  EXPECT_TRUE(passes(g, ForcingKind::signed_zfs, r.witness));
}

TEST(Search, SignedMinimaMatchBruteForce) {
  test::Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const int n = test::uniform_int(rng, 1, 6);
    const SignedDigraph g = test::random_signed(rng, n, test::uniform(rng, 0.1, 0.5));
    EXPECT_EQ(min_forcing_set(g, ForcingKind::signed_zfs).minimum_size, brute_force_signed_min(to_sign_pattern(g)));
    EXPECT_EQ(min_forcing_set(g, ForcingKind::positive_signed).minimum_size,
              brute_force_signed_min(to_sign_pattern(looped_negative(g))));
    EXPECT_EQ(min_forcing_set(g, ForcingKind::negative_signed).minimum_size,
              brute_force_signed_min(to_sign_pattern(looped_positive(g))));
  }
}

TEST(Search, ClassicalMinimaMatchBruteForce) {
  test::Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    const int n = test::uniform_int(rng, 1, 7);
    const PatternDigraph g = test::random_pattern(rng, n, test::uniform(rng, 0.1, 0.5));
    EXPECT_EQ(min_forcing_set(g, ForcingKind::classical).minimum_size,
              brute_force_classical_min(to_zero_nonzero_pattern(g)));
    EXPECT_EQ(min_forcing_set(g, ForcingKind::strong).minimum_size,
              brute_force_classical_min(to_zero_nonzero_pattern(looped_cross(g))));
  }
}

TEST(Search, WitnessIsLexicographicallyFirstAndJobIndependent) {
  test::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const SignedDigraph g = test::random_signed(rng, 7, 0.3);
    SearchOptions one;
    SearchOptions three;
    three.jobs = 3;
    const SearchResult a = min_forcing_set(g, ForcingKind::signed_zfs, one);
    const SearchResult b = min_forcing_set(g, ForcingKind::signed_zfs, three);
    EXPECT_EQ(a.minimum_size, b.minimum_size);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Search, GreedyPassesAndIsNoSmallerThanExact) {
  test::Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    const SignedDigraph g = test::random_signed(rng, test::uniform_int(rng, 1, 7), 0.35);
    for (ForcingKind k : {ForcingKind::signed_zfs, ForcingKind::positive_signed, ForcingKind::classical}) {
      const SearchResult greedy = greedy_forcing_set(g, k);
      EXPECT_FALSE(greedy.exact);
      EXPECT_TRUE(passes(g, k, greedy.witness));
      EXPECT_EQ(greedy.minimum_size, static_cast<int>(greedy.witness.size()));
      EXPECT_GE(greedy.minimum_size, min_forcing_set(g, k).minimum_size);
    }
  }
}

TEST(Search, ExactSearchRefusesLargeGraphs) {
  EXPECT_THROW(min_forcing_set(SignedDigraph(13), ForcingKind::signed_zfs), ResourceLimitError);
  EXPECT_THROW(min_forcing_set(PatternDigraph(13), ForcingKind::classical), ResourceLimitError);
  SearchOptions wide;
  wide.exact_node_bound = 13;
  EXPECT_EQ(min_forcing_set(PatternDigraph(13), ForcingKind::strong, wide).minimum_size, 0);
  EXPECT_EQ(greedy_forcing_set(PatternDigraph(20), ForcingKind::classical).minimum_size, 20);
}

TEST(Search, SignedKindNeedsSignedGraph) {
  EXPECT_THROW(min_forcing_set(PatternDigraph(2), ForcingKind::signed_zfs), std::invalid_argument);
  EXPECT_THROW(passes(PatternDigraph(2), ForcingKind::negative_signed, {}), std::invalid_argument);
}

}  // namespace
}  // namespace zforce
