#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vdyn/pstrict.hpp"

using namespace vdyn;

namespace {

PStrictLabeling lab(int q, std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  const int ell = static_cast<int>(a.size());
  return PStrictLabeling(ell, q, {std::move(a), std::move(b), std::move(c)});
}

std::vector<Position> positions(const std::vector<std::pair<int, int>>& xs) {
  std::vector<Position> out;
  for (auto [p, i] : xs) out.push_back({static_cast<Letter>(p), i + 1});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> sorted(std::vector<Position> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

TEST(Restriction, VIntervals) {
  const auto v = std::make_shared<Poset>(make_v());
  auto r = restriction_rq(v, 9);
  EXPECT_EQ(r.at(0), (LabelInterval{1, 8}));
  EXPECT_EQ(r.at(1), (LabelInterval{2, 9}));
  EXPECT_EQ(r.at(2), (LabelInterval{2, 9}));
  r = restriction_rq(v, 3);
  EXPECT_EQ(r.at(0), (LabelInterval{1, 2}));
  EXPECT_EQ(r.at(2), (LabelInterval{2, 3}));
}

TEST(Restriction, ForcedChain) {
  const auto c = std::make_shared<Poset>(make_chain(2));
  const auto r = restriction_rq(c, 2);
  EXPECT_EQ(r.at(0), (LabelInterval{1, 1}));
  EXPECT_EQ(r.at(1), (LabelInterval{2, 2}));
  EXPECT_THROW(restriction_rq(c, 1), Error);
}

TEST(Labelings, SmallCounts) {
  EXPECT_EQ(enumerate_labelings(1, 3).size(), 5u);
  EXPECT_EQ(enumerate_labelings(2, 3).size(), 14u);
}

TEST(Labelings, MatchBruteForce) {
  for (int ell = 0; ell <= 3; ++ell)
    for (int q = 2; q <= 6 - (ell == 3); ++q) {
      const auto got = enumerate_labelings(ell, q);
      const auto brute = oracle::all_labelings(ell, q);
      ASSERT_EQ(got.size(), brute.size()) << ell << "," << q;
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].fibers(), brute[i]);
    }
}

TEST(Labelings, FigureLabelingStream) {
  // The full (6,9) stream has 573,667,380 labelings; the figure labeling is
  // valid and the stream is checked for order and early stop.
  const auto f = lab(9, {1, 2, 3, 3, 4, 6}, {3, 3, 4, 6, 7, 9}, {2, 4, 4, 5, 8, 8});
  EXPECT_TRUE(labeling_violation(6, 9, f.fibers()).empty());
  std::vector<PStrictLabeling> prefix;
  for_each_labeling(6, 9, [&](const PStrictLabeling& g) {
    prefix.push_back(g);
    return prefix.size() < 10000;
  });
  ASSERT_EQ(prefix.size(), 10000u);
  EXPECT_TRUE(std::is_sorted(prefix.begin(), prefix.end()));
  EXPECT_EQ(std::adjacent_find(prefix.begin(), prefix.end()), prefix.end());
  EXPECT_THROW(enumerate_labelings(6, 9, 1000), Error);
}

TEST(Labelings, Validation) {
  EXPECT_THROW(lab(3, {1}, {1}, {2}), Error);     // not strict
  EXPECT_THROW(lab(3, {3}, {3}, {3}), Error);     // A outside R(A)
  EXPECT_THROW(lab(3, {1, 1}, {3, 2}, {2, 2}), Error);  // decreasing fiber
  EXPECT_THROW(PStrictLabeling(2, 3, {std::vector<int>{1}, {2}, {2}}), Error);
  EXPECT_THROW(enumerate_labelings(1, 1), Error);
  EXPECT_THROW(enumerate_labelings(3, 7, 10), Error);
}

TEST(FreeLabels, Examples) {
  auto fl = free_labels(1, lab(3, {1}, {3}, {3}));
  EXPECT_EQ(fl.raisable, (std::vector<Position>{{Letter::A, 1}}));
  EXPECT_TRUE(fl.lowerable.empty());

  fl = free_labels(2, lab(3, {1}, {2}, {3}));
  EXPECT_EQ(fl.raisable, (std::vector<Position>{{Letter::B, 1}}));
  EXPECT_EQ(fl.lowerable, (std::vector<Position>{{Letter::C, 1}}));

  fl = free_labels(2, lab(4, {2}, {3}, {4}));
  EXPECT_TRUE(fl.raisable.empty());
  EXPECT_TRUE(fl.lowerable.empty());
}

TEST(FreeLabels, MatchDefinition) {
  for (int ell = 1; ell <= 3; ++ell)
    for (int q = 3; q <= 6 - (ell == 3); ++q)
      for (const auto& f : enumerate_labelings(ell, q))
        for (int k = 1; k < q; ++k) {
          const auto fl = free_labels(k, f);
          const auto want = oracle::free_labels(f.fibers(), q, k);
          ASSERT_EQ(sorted(fl.raisable), positions(want.raisable));
          ASSERT_EQ(sorted(fl.lowerable), positions(want.lowerable));
        }
}

TEST(FreeLabels, IndexOutOfRange) {
  const auto f = lab(3, {1}, {2}, {3});
  EXPECT_THROW(free_labels(0, f), Error);
  EXPECT_THROW(free_labels(3, f), Error);
  EXPECT_THROW(bender_knuth_tau(3, f), Error);
}

TEST(Tau, Examples) {
  EXPECT_EQ(bender_knuth_tau(2, lab(3, {1}, {2}, {3})), lab(3, {1}, {3}, {2}));
  EXPECT_EQ(bender_knuth_tau(2, lab(4, {2}, {3}, {4})), lab(4, {2}, {3}, {4}));
}

TEST(Tau, InvolutionAndOracle) {
  for (int ell = 1; ell <= 2; ++ell)
    for (int q = 3; q <= 5; ++q)
      for (const auto& f : enumerate_labelings(ell, q))
        for (int k = 1; k < q; ++k) {
          const auto g = bender_knuth_tau(k, f);
          EXPECT_EQ(bender_knuth_tau(k, g), f);
          EXPECT_EQ(g.fibers(), oracle::tau(f.fibers(), q, k));
        }
}

TEST(Promote, Examples) {
  EXPECT_EQ(promote_pstrict(lab(3, {1}, {3}, {3})), lab(3, {2}, {3}, {3}));
}

TEST(Promote, Order2qOnSmallGrid) {
  for (const auto& f : enumerate_labelings(1, 4)) {
    auto x = f;
    for (int i = 0; i < 8; ++i) x = promote_pstrict(x);
    EXPECT_EQ(x, f);
  }
}

TEST(Promote, MatchesOracleAndSwap) {
  for (int ell = 1; ell <= 2; ++ell)
    for (int q = 3; q <= 5; ++q)
      for (const auto& f : enumerate_labelings(ell, q)) {
        EXPECT_EQ(promote_pstrict(f).fibers(), oracle::promote(f.fibers(), q));
        auto x = f;
        for (int i = 0; i < q; ++i) x = promote_pstrict(x);
        EXPECT_EQ(x, swap_bc(f));
      }
}

TEST(Promote, RandomLargerLabelings) {
  std::mt19937 rng(7);
  const auto all = enumerate_labelings(3, 7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& f = all[pick(rng)];
    auto x = f;
    for (int i = 0; i < 7; ++i) x = promote_pstrict(x);
    EXPECT_EQ(x, swap_bc(f));
    EXPECT_EQ(swap_bc(swap_bc(f)), f);
  }
}
