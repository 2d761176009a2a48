#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "vlab/chain.hpp"
#include "vlab/error.hpp"
#include "vlab/rec.hpp"

namespace {

using vlab::Permutation;
using vlab::TwoConfig;
namespace chain = vlab::chain;

const Permutation kWorking({23, 4, 21, 6, 25, 24, 14, 22, 18, 20, 16, 13, 11, 19, 7, 5, 2, 8, 17, 12, 10, 1, 15, 3, 9});
const char* const kStep7 =
    "9 3 | 12 10 8 2 | 15 3 1 | 17 2 | 19 11 | 20 18 11 | 21 18 5 4 | 22 16 14 4 | 23 | 25 24 14 13 7 6";

std::vector<Permutation> avoiders(int n) { return vlab::enumerate_avoiders(n, vlab::pattern_1_23_4()); }

TEST(Chain, WorkingExampleStages) {
  vlab::ChainTrace trace;
  const auto a = vlab::p_to_a(kWorking, &trace);
  EXPECT_EQ(a, TwoConfig::parse(kStep7));
  EXPECT_EQ(trace.at("overlines"),
            "[23] / [4 21 [6 25 24 [14 22 [18 20] 16] 13 [11 19] 7] 5] / [2 [8 17 12 10]] / [1 15 [3 9]]");
  EXPECT_EQ(trace.at("step2"), "23 / 4 21 5 | 6 25 24 13 7 | 14 22 16 | 18 20 | 11 19 / 2 | 8 17 12 10 / 1 15 | 3 9");
  EXPECT_EQ(trace.at("step3"),
            "23 / 4 21 5 | 6 25 24 13 7 | 14 22 16 | 18 20 | 11 19 / 17 | 8 2 12 10 / 1 15 | 3 9");
  EXPECT_EQ(trace.at("step5"),
            "23 / 19 11 | 20 18 | 21 5 4 | 22 16 14 | 25 24 13 7 6 / 12 10 8 2 | 17 / 9 3 | 15 1");
  EXPECT_EQ(trace.at("step6"),
            "23 / 19 11 | 20 18 11 | 21 18 5 4 | 22 16 14 4 | 25 24 14 13 7 6 / 12 10 8 2 | 17 2 / 9 3 | 15 3 1");
  EXPECT_EQ(trace.at("step7"), kStep7);
  EXPECT_THROW(trace.at("step8"), vlab::DomainError);
  EXPECT_EQ(vlab::a_to_p(a), kWorking);
}

TEST(Chain, SmallExamples) {
  EXPECT_EQ(vlab::p_to_a(Permutation({2, 1})), TwoConfig::parse("1 | 2"));
  EXPECT_EQ(vlab::p_to_a(Permutation({1, 2})), TwoConfig::parse("2 1"));
  EXPECT_EQ(vlab::a_to_p(TwoConfig::parse("1 | 2")), Permutation({2, 1}));
  EXPECT_EQ(vlab::a_to_p(TwoConfig::parse("2 1")), Permutation({1, 2}));
  EXPECT_EQ(vlab::a_to_s(TwoConfig::parse("2 1")), TwoConfig::parse("2 1"));
  EXPECT_EQ(vlab::perm_to_tree(Permutation({1})), vlab::IncOrderedTree({{1}, {}}));
  EXPECT_EQ(vlab::perm_to_tree(Permutation({2, 1})), vlab::IncOrderedTree({{1, 2}, {}, {}}));
}

TEST(Chain, RejectsNonAvoiders) {
  EXPECT_THROW(vlab::p_to_a(Permutation({1, 2, 3, 4})), vlab::DomainError);
  EXPECT_THROW(vlab::p_to_a(Permutation()), vlab::DomainError);
  EXPECT_THROW(vlab::a_to_p(TwoConfig::parse("1 | 1")), vlab::DomainError);
  EXPECT_THROW(vlab::tree_to_perm(vlab::IncOrderedTree({{2, 3, 1}, {}, {}, {}})), vlab::DomainError);
}

TEST(StirlingConfigs, DisplayedExample) {
  const vlab::MultisetPermutation j{1, 3, 5, 5, 3, 1, 2, 6, 7, 7, 6, 4, 8, 9, 9, 8, 4, 2, 10, 10};
  EXPECT_EQ(vlab::j_to_s(j), TwoConfig::parse("5 3 1 | 7 6 4 | 9 8 4 2 | 10"));
  EXPECT_EQ(vlab::s_to_j(TwoConfig::parse("5 3 1 | 7 6 4 | 9 8 4 2 | 10")), j);
  EXPECT_EQ(vlab::j_to_s({1, 1}), TwoConfig::parse("1"));
  EXPECT_EQ(vlab::j_to_s({1, 2, 2, 1}), TwoConfig::parse("2 1"));
  EXPECT_EQ(vlab::s_to_j(TwoConfig::parse("1")), (vlab::MultisetPermutation{1, 1}));
  EXPECT_EQ(vlab::s_to_j(TwoConfig::parse("2 1")), (vlab::MultisetPermutation{1, 2, 2, 1}));
  EXPECT_THROW(vlab::j_to_s({2, 2, 1, 1}), vlab::DomainError);
  EXPECT_FALSE(vlab::is_increasing_plateau({2, 2, 1, 1}));
}

TEST(Overlines, LaminarAndCovering) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : avoiders(n)) {
      const auto lines = chain::overlines(p);
      for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = 0; b < lines.size(); ++b) {
          const auto& x = lines[a];
          const auto& y = lines[b];
          const bool disjoint = x.stop <= y.start || y.stop <= x.start;
          const bool nested = (x.start <= y.start && y.stop <= x.stop) || (y.start <= x.start && x.stop <= y.stop);
          ASSERT_TRUE(disjoint || nested);
        }
      }
      std::vector<int> cover_count(p.size(), 0);
      for (const auto& o : lines) {
        for (auto q = o.start; q < o.stop; ++q) cover_count[q] = 1;
      }
      ASSERT_TRUE(std::all_of(cover_count.begin(), cover_count.end(), [](int c) { return c == 1; }));
    }
  }
}

TEST(Steps, EachStepInvertsOnAvoiders) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : avoiders(n)) {
      const auto s2 = chain::extract_blocks(p);
      ASSERT_EQ(chain::coalesce(s2), p);
      const auto s3 = chain::swap_first_third(s2);
      ASSERT_EQ(chain::swap_first_third(s3), s2);
      const auto s4 = chain::sort_blocks_decreasing(s3);
      const auto s5 = chain::order_by_first_entry(s4);
      ASSERT_EQ(chain::restore_block_order(s5), s4);
      ASSERT_EQ(chain::unsort_blocks(s4), s3);
      const auto s6 = chain::link(s5);
      ASSERT_EQ(chain::unlink(s6), s5);
      const auto c = chain::merge(s6, n);
      ASSERT_EQ(chain::split(c), s6);
    }
  }
}

TEST(Chain, ExhaustiveRoundTripsThroughSeven) {
  for (int n = 1; n <= 7; ++n) {
    std::set<TwoConfig> images;
    std::set<vlab::IncOrderedTree> trees;
    for (const auto& p : avoiders(n)) {
      const auto a = vlab::p_to_a(p);
      ASSERT_TRUE(vlab::in_family(a, vlab::ConfigFamily::A));
      ASSERT_EQ(vlab::components(a).components.size(), vlab::lrmin_segments(p).size());
      ASSERT_EQ(vlab::a_to_p(a), p);
      const auto s = vlab::a_to_s(a);
      ASSERT_TRUE(vlab::in_family(s, vlab::ConfigFamily::S));
      ASSERT_EQ(vlab::s_to_a(s), a);
      const auto j = vlab::s_to_j(s);
      ASSERT_EQ(vlab::j_to_s(j), s);
      const auto t = vlab::perm_to_tree(p);
      ASSERT_TRUE(vlab::has_increasing_leaves(t));
      ASSERT_EQ(vlab::tree_to_perm(t), p);
      images.insert(a);
      trees.insert(t);
    }
    EXPECT_EQ(vlab::BigInt(images.size()), vlab::u_total(n));
    EXPECT_EQ(vlab::BigInt(trees.size()), vlab::u_total(n));
    if (n <= 6) {
      const auto family = vlab::enumerate_configs(n, vlab::family_properties(vlab::ConfigFamily::A));
      EXPECT_EQ(images, std::set<TwoConfig>(family.begin(), family.end()));
    }
  }
}

TEST(Chain, TreesMapBackToAvoiders) {
  for (int n = 1; n <= 7; ++n) {
    vlab::for_each_tree(n, [](const vlab::IncOrderedTree& t) {
      if (!vlab::has_increasing_leaves(t)) return;
      const auto p = vlab::tree_to_perm(t);
      ASSERT_FALSE(oracle::contains_1_23_4({p.values().begin(), p.values().end()}));
      ASSERT_EQ(vlab::perm_to_tree(p), t);
    });
  }
}

TEST(Chain, StepFiveInverseWithThreeBlocks) {
  // A telltale segment whose blocks are not in decreasing first-entry order
  // after Step 4.
  const Permutation p({1, 2, 5, 3, 4});
  EXPECT_EQ(vlab::a_to_p(vlab::p_to_a(p)), p);
}

}  // namespace
