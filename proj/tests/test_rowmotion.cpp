#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vdyn/orbits.hpp"
#include "vdyn/pstrict.hpp"
#include "vdyn/rowmotion.hpp"

using namespace vdyn;

namespace {

const PosetPtr& v_poset() {
  static const PosetPtr v = std::make_shared<Poset>(make_v());
  return v;
}

PPartition pp(const PosetPtr& p, int ell, std::vector<int> values) { return PPartition(p, ell, std::move(values)); }

std::vector<std::uint64_t> sizes_of(const OrbitReport& r) { return r.orbit_sizes; }

}  // namespace

TEST(PPartitions, Counts) {
  EXPECT_EQ(enumerate_ppartitions(v_poset(), 1).size(), 5u);
  EXPECT_EQ(enumerate_ppartitions(v_poset(), 2).size(), 14u);
  EXPECT_EQ(enumerate_ppartitions(v_times_chain(2), 1).size(), 14u);
}

TEST(PPartitions, MatchBruteForce) {
  for (int k = 1; k <= 3; ++k)
    for (int ell = 0; ell <= 3; ++ell) {
      const auto got = enumerate_ppartitions(v_times_chain(k), ell);
      const auto brute = oracle::all_ppartitions(k, ell);
      ASSERT_EQ(got.size(), brute.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].values(), brute[i]);
    }
}

TEST(PPartitions, Validation) {
  EXPECT_THROW(pp(v_poset(), 1, {1, 0, 0}), Error);
  EXPECT_THROW(pp(v_poset(), 1, {0, 2, 0}), Error);
  EXPECT_THROW(pp(v_poset(), 1, {0, 0}), Error);
  EXPECT_THROW(enumerate_ppartitions(v_times_chain(3), 3, 10), Error);
}

TEST(Toggle, Examples) {
  EXPECT_EQ(toggle(0, pp(v_poset(), 1, {0, 1, 1})), pp(v_poset(), 1, {1, 1, 1}));
  EXPECT_EQ(toggle(1, pp(v_poset(), 1, {0, 0, 0})), pp(v_poset(), 1, {0, 1, 0}));
}

TEST(Toggle, Involution) {
  for (const auto& f : enumerate_ppartitions(v_poset(), 2))
    for (int p = 0; p < 3; ++p) EXPECT_EQ(toggle(p, toggle(p, f)), f);
  for (const auto& f : enumerate_ppartitions(v_times_chain(2), 2))
    for (int p = 0; p < 6; ++p) EXPECT_EQ(toggle(p, toggle(p, f)), f);
}

TEST(Rowmotion, Examples) {
  EXPECT_EQ(rowmotion(pp(v_poset(), 1, {0, 0, 0})), pp(v_poset(), 1, {1, 1, 1}));
  EXPECT_EQ(rowmotion(pp(v_poset(), 1, {0, 0, 1})), pp(v_poset(), 1, {0, 1, 0}));
}

TEST(Rowmotion, BinaryCaseIsIdealRowmotion) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& f : enumerate_ppartitions(v_times_chain(k), 1))
      EXPECT_EQ(rowmotion(f).values(), oracle::rowmotion_ideal(f.values(), k));
}

TEST(Rowmotion, ExtensionIndependent) {
  const auto p = v_times_chain(2);
  const auto exts = linear_extensions(p);
  for (const auto& f : enumerate_ppartitions(p, 2)) {
    const auto want = rowmotion(f);
    for (const auto& e : exts) EXPECT_EQ(rowmotion(f, e), want);
  }
  std::mt19937 rng(3);
  const auto p3 = v_times_chain(3);
  const auto exts3 = linear_extensions(p3);
  const auto all3 = enumerate_ppartitions(p3, 2);
  std::uniform_int_distribution<std::size_t> pe(0, exts3.size() - 1), pf(0, all3.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto& f = all3[pf(rng)];
    EXPECT_EQ(rowmotion(f, exts3[pe(rng)]), rowmotion(f));
  }
}

TEST(Rowmotion, RejectsForeignExtension) {
  const auto f = pp(v_times_chain(1), 1, {0, 0, 0});
  EXPECT_THROW(rowmotion(f, first_linear_extension(v_times_chain(2))), Error);
}

TEST(Rowmotion, OrderOnSmallCases) {
  const auto parts = enumerate_ppartitions(v_times_chain(1), 1);
  const auto r = orbit_decomposition("row", Json::object(), parts, [](const PPartition& f) { return rowmotion(f); });
  EXPECT_EQ(sizes_of(r), (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(r.order, 6u);
}

TEST(TogPro, Examples) {
  EXPECT_EQ(togpro(pp(v_times_chain(1), 1, {0, 0, 0}), 3), pp(v_times_chain(1), 1, {0, 1, 1}));
  EXPECT_EQ(togpro(pp(v_times_chain(1), 2, {0, 0, 0}), 3), pp(v_times_chain(1), 2, {0, 2, 2}));
}

TEST(TogPro, Schedule) {
  // q = 4 on V x [2]: step k toggles (A, 3-k) and (B, 4-k), (C, 4-k).
  const auto p = v_times_chain(2);
  const auto s = togpro_schedule(*p, 4);
  std::vector<std::vector<std::string>> names;
  for (const auto& group : s) {
    std::vector<std::string> g;
    for (int e : group) g.push_back(p->element(e).str());
    names.push_back(g);
  }
  const std::vector<std::vector<std::string>> expected{
      {"(A,2)"}, {"(A,1)", "(B,2)", "(C,2)"}, {"(B,1)", "(C,1)"}};
  EXPECT_EQ(names, expected);
  EXPECT_THROW(togpro_schedule(*p, 5), Error);
}

TEST(TogPro, OrbitsMatchPromotion) {
  const auto parts = enumerate_ppartitions(v_times_chain(1), 1);
  const auto tog = orbit_decomposition("togpro", Json::object(), parts, [](const PPartition& f) { return togpro(f, 3); });
  const auto pro = orbit_decomposition("pro", Json::object(), enumerate_labelings(1, 3), promote_pstrict);
  EXPECT_EQ(tog.orbit_sizes, (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(tog.orbit_sizes, pro.orbit_sizes);
}

TEST(Flip, SwapsBandC) {
  const auto psi = flip(v_times_chain(1));
  const auto f = pp(v_times_chain(1), 1, {0, 1, 0});
  EXPECT_EQ(apply_automorphism(psi, f), pp(v_times_chain(1), 1, {0, 0, 1}));
  const auto psi2 = flip(v_times_chain(2));
  for (const auto& g : enumerate_ppartitions(v_times_chain(2), 2))
    EXPECT_EQ(apply_automorphism(psi2, apply_automorphism(psi2, g)), g);
}

TEST(Flip, RowQIsFlip) {
  const auto p = v_times_chain(1);
  const auto psi = flip(p);
  for (const auto& f : enumerate_ppartitions(p, 1)) {
    auto x = f;
    for (int i = 0; i < 3; ++i) x = rowmotion(x);
    EXPECT_EQ(x, apply_automorphism(psi, f));
  }
}

TEST(Flip, ConjugatesToggles) {
  const auto p = v_times_chain(3);
  const auto psi = flip(p);
  const auto inv = psi.inverse();
  for (const auto& f : enumerate_ppartitions(p, 1))
    for (int e = 0; e < 9; ++e)
      EXPECT_EQ(apply_automorphism(psi, toggle(e, f)), toggle(inv(e), apply_automorphism(psi, f)));
}

TEST(Automorphism, Validation) {
  const auto p = v_times_chain(1);
  EXPECT_THROW(PosetAutomorphism(p, {0, 0, 1}), Error);
  EXPECT_THROW(PosetAutomorphism(p, {1, 0, 2}), Error);  // A <-> B breaks covers
  EXPECT_NO_THROW(PosetAutomorphism(p, {0, 2, 1}));
}

TEST(Toggles, CommuteIffNoCover) {
  const auto p = v_times_chain(2);
  const auto all = enumerate_ppartitions(p, 2);
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) {
      bool commute = true;
      for (const auto& f : all)
        if (!(toggle(x, toggle(y, f)) == toggle(y, toggle(x, f)))) commute = false;
      EXPECT_EQ(commute, !(p->is_cover(x, y) || p->is_cover(y, x))) << x << "," << y;
    }
}
