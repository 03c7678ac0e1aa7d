#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "flowkit/apps.hpp"
#include "flowkit/error.hpp"
#include "oracles.hpp"

using namespace flowkit;

namespace {

BipartiteGraph random_bipartite(std::mt19937_64& rng) {
  BipartiteGraph g;
  g.n = oracle::uniform(rng, 1, 6);
  const int density = oracle::uniform(rng, 15, 70);
  for (int v = 0; v < g.n; ++v)
    for (int w = 0; w < g.n; ++w)
      if (oracle::uniform(rng, 1, 100) <= density) g.edges.emplace_back(v, w);
  return g;
}

bool cover_disjoint(const std::vector<std::vector<int>>& chains) {
  std::set<std::pair<int, int>> seen;
  for (const auto& c : chains)
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (!seen.insert({c[i], c[i + 1]}).second) return false;
  return true;
}

}  // namespace

TEST(Matching, PerfectMatchingIsReturned) {
  const BipartiteGraph g{3, {{0, 0}, {0, 1}, {1, 0}, {2, 2}}};
  const auto r = perfect_matching(g);
  ASSERT_TRUE(r.perfect);
  EXPECT_EQ(r.mate, (std::vector<int>{1, 0, 2}));
  EXPECT_TRUE(r.violation.empty());
}

TEST(Matching, HallViolationIsReported) {
  const BipartiteGraph g{3, {{0, 0}, {1, 0}, {2, 1}, {2, 2}}};
  const auto r = perfect_matching(g);
  EXPECT_FALSE(r.perfect);
  EXPECT_EQ(r.violation, (std::vector<int>{0, 1}));
  EXPECT_EQ(neighborhood(g, r.violation), std::vector<int>{0});
}

TEST(Matching, IsolatedVertexViolatesAlone) {
  const auto r = perfect_matching(BipartiteGraph{2, {{0, 0}, {0, 1}}});
  EXPECT_FALSE(r.perfect);
  EXPECT_TRUE(oracle::hall_violated(BipartiteGraph{2, {{0, 0}, {0, 1}}}, r.violation));
}

TEST(Matching, RejectsEdgesOutsideTheParts) {
  EXPECT_THROW(perfect_matching(BipartiteGraph{2, {{0, 2}}}), FlowError);
}

TEST(Matching, AgreesWithPermutationEnumeration) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_bipartite(rng);
    const auto r = perfect_matching(g);
    EXPECT_EQ(r.perfect, oracle::has_perfect_matching(g));
    if (r.perfect) {
      std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
      std::set<int> used;
      for (int v = 0; v < g.n; ++v) {
        EXPECT_TRUE(edges.contains({v, r.mate[static_cast<std::size_t>(v)]}));
        used.insert(r.mate[static_cast<std::size_t>(v)]);
      }
      EXPECT_EQ(used.size(), static_cast<std::size_t>(g.n));
    } else {
      EXPECT_TRUE(oracle::hall_violated(g, r.violation));
    }
  }
}

TEST(Poset, ClosureAndCovers) {
  const Poset p = Poset::build({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_TRUE(p.less(0, 3));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.less(2, 0));
  EXPECT_TRUE(p.covers(0, 1));
  EXPECT_FALSE(p.covers(0, 3));
  EXPECT_EQ(p.cover_pairs().size(), 3u);
  EXPECT_EQ(p.bottom(), 0);
  EXPECT_EQ(p.top(), 3);
}

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset::build({"a", "b"}, {{0, 1}, {1, 0}}), FlowError);
  EXPECT_THROW(Poset::build({"a"}, {{0, 1}}), FlowError);
}

TEST(Poset, UnboundedPosetHasNoChains) {
  const Poset p = Poset::build({"a", "b", "c"}, {{0, 1}, {0, 2}});
  EXPECT_FALSE(p.top());
  EXPECT_THROW(max_disjoint_chains(p), FlowError);
}

TEST(Chains, DiamondHasTwoDisjointChains) {
  const Poset p = Poset::build({"0", "x", "y", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto chains = max_disjoint_chains(p);
  ASSERT_EQ(chains.size(), 2u);
  for (const auto& c : chains) EXPECT_TRUE(is_maximal_chain(p, c));
  EXPECT_TRUE(cover_disjoint(chains));
  EXPECT_FALSE(is_maximal_chain(p, {0, 3}));
  EXPECT_FALSE(is_maximal_chain(p, {0, 1}));
}

TEST(Chains, AgreeWithExhaustiveSearch) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Poset p = oracle::random_poset(rng);
    const auto chains = max_disjoint_chains(p);
    EXPECT_EQ(chains.size(), oracle::brute_max_cover_disjoint(p));
    for (const auto& c : chains) EXPECT_TRUE(is_maximal_chain(p, c));
    EXPECT_TRUE(cover_disjoint(chains));
  }
}

TEST(Segmentation, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PixelImage img = oracle::random_image(rng, 3, 3);
    const Segmentation seg = segment_image(img);
    EXPECT_EQ(seg.score, oracle::brute_best_segmentation(img));
    EXPECT_EQ(seg.score, oracle::score(img, seg.foreground));
    EXPECT_EQ(seg.score + seg.cost, seg.total);
    EXPECT_EQ(seg.cost, seg.cut_value);
  }
}

TEST(Segmentation, ScoreAndCostSplitTheTotal) {
  std::mt19937_64 rng(4);
  const PixelImage img = oracle::random_image(rng, 2, 3);
  Rational total = 0;
  for (int v = 0; v < img.pixel_count(); ++v) total += img.a[static_cast<std::size_t>(v)] + img.b[static_cast<std::size_t>(v)];
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<bool> fg(6);
    for (int v = 0; v < 6; ++v) fg[static_cast<std::size_t>(v)] = mask >> v & 1;
    EXPECT_EQ(segmentation_score(img, fg) + segmentation_cost(img, fg), total);
    EXPECT_EQ(segmentation_score(img, fg), oracle::score(img, fg));
  }
}

TEST(Segmentation, TiesGoToTheBackground) {
  PixelImage img;
  img.width = 1;
  img.height = 1;
  img.a = {Rational(1, 2)};
  img.b = {Rational(1, 2)};
  EXPECT_FALSE(segment_image(img).foreground[0]);
}

TEST(Segmentation, CheckRejectsBadInput) {
  PixelImage img;
  img.width = 2;
  img.height = 1;
  img.a = {1, 0};
  img.b = {0, 1};
  img.horizontal = {Rational(-1)};
  EXPECT_THROW(img.check(), FlowError);
  img.horizontal = {0};
  img.a[0] = 2;
  EXPECT_THROW(img.check(), FlowError);
  img.a = {1};
  EXPECT_THROW(img.check(), FlowError);
}

TEST(Segmentation, NeighborPairs) {
  PixelImage img;
  img.width = 2;
  img.height = 2;
  img.a = img.b = {0, 0, 0, 0};
  img.horizontal = {1, 2};
  img.vertical = {3, 4};
  const auto pairs = img.neighbor_pairs();
  ASSERT_EQ(pairs.size(), 4u);
  std::set<std::tuple<int, int, Rational>> got(pairs.begin(), pairs.end());
  EXPECT_TRUE(got.contains({0, 1, Rational(1)}));
  EXPECT_TRUE(got.contains({2, 3, Rational(2)}));
  EXPECT_TRUE(got.contains({0, 2, Rational(3)}));
  EXPECT_TRUE(got.contains({1, 3, Rational(4)}));
}

TEST(Segmentation, GrayImageHeuristic) {
  std::istringstream in("P2\n# tiny\n2 1\n4\n0 4\n");
  const GrayImage g = read_pgm(in);
  const PixelImage img = image_from_gray(g, Rational(1, 8));
  EXPECT_EQ(img.a, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(img.b, (std::vector<Rational>{1, 0}));
  const auto seg = segment_image(img);
  EXPECT_EQ(seg.foreground, (std::vector<bool>{false, true}));
  std::ostringstream out;
  write_pbm(out, 2, 1, seg.foreground);
  EXPECT_EQ(out.str(), "P1\n2 1\n0 1\n");
}
