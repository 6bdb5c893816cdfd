#pragma once

#include <array>
#include <compare>
#include <functional>
#include <vector>

#include "vdyn/kreweras.hpp"
#include "vdyn/poset.hpp"

namespace vdyn {

struct LabelInterval {
  int lo = 0;
  int hi = -1;
  bool contains(int v) const { return lo <= v && v <= hi; }
  auto operator<=>(const LabelInterval&) const = default;
};

/// Per-element label intervals inside [1, q].
class RestrictionFunction {
 public:
  RestrictionFunction(PosetPtr poset, int q, std::vector<LabelInterval> intervals);

  const Poset& poset() const { return *poset_; }
  int q() const { return q_; }
  const LabelInterval& at(int element) const { return intervals_.at(element); }
  const std::vector<LabelInterval>& intervals() const { return intervals_; }

 private:
  PosetPtr poset_;
  int q_;
  std::vector<LabelInterval> intervals_;
};

/// R^q on a graded poset of rank n: R(p) = [rk(p)+1, q-n+rk(p)]. Needs q > n.
RestrictionFunction restriction_rq(const PosetPtr& poset, int q);

/// Fiber index of a letter of V.
constexpr int fiber_index(Letter p) { return static_cast<int>(p); }
constexpr std::array<Letter, 3> kLetters{Letter::A, Letter::B, Letter::C};

/// A V-strict labeling of V x [ell] with restriction R^q, stored fiberwise.
class PStrictLabeling {
 public:
  using Fibers = std::array<std::vector<int>, 3>;

  PStrictLabeling(int ell, int q, Fibers fibers);

  int ell() const { return ell_; }
  int q() const { return q_; }
  /// f(p, layer), layer 1-based.
  int at(Letter p, int layer) const { return fibers_[fiber_index(p)][layer - 1]; }
  const std::vector<int>& fiber(Letter p) const { return fibers_[fiber_index(p)]; }
  const Fibers& fibers() const { return fibers_; }
  /// Labels of layer L_i as (A, B, C).
  std::array<int, 3> layer(int i) const { return {at(Letter::A, i), at(Letter::B, i), at(Letter::C, i)}; }
  LabelInterval range(Letter p) const;

  auto operator<=>(const PStrictLabeling&) const = default;

 private:
  int ell_;
  int q_;
  Fibers fibers_;
};

/// Empty string when valid, else the violated condition.
std::string labeling_violation(int ell, int q, const PStrictLabeling::Fibers& fibers);

/// Streams L_{V x [ell]}(R^q) in lexicographic order of the concatenated
/// fibers; stops early when `visit` returns false.
void for_each_labeling(int ell, int q, const std::function<bool(const PStrictLabeling&)>& visit);

/// L_{V x [ell]}(R^q) in lexicographic order of the concatenated fibers.
std::vector<PStrictLabeling> enumerate_labelings(int ell, int q,
                                                 std::size_t limit = 5'000'000);

struct Position {
  Letter p = Letter::A;
  int layer = 1;
  auto operator<=>(const Position&) const = default;
};

struct FreeLabels {
  std::vector<Position> raisable;   // positions labeled k
  std::vector<Position> lowerable;  // positions labeled k + 1
};

FreeLabels free_labels(int k, const PStrictLabeling& f);
PStrictLabeling bender_knuth_tau(int k, const PStrictLabeling& f);
/// tau_{q-1} o ... o tau_1.
PStrictLabeling promote_pstrict(const PStrictLabeling& f);
/// Exchanges the B and C fibers.
PStrictLabeling swap_bc(const PStrictLabeling& f);

}  // namespace vdyn
