#pragma once

#include <compare>
#include <vector>

#include "vdyn/poset.hpp"

namespace vdyn {

/// An ell-bounded P-partition: order-preserving values in {0..ell}. The
/// virtual bounds 0̂ -> 0 and 1̂ -> ell are implicit.
class PPartition {
 public:
  PPartition(PosetPtr poset, int ell, std::vector<int> values);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  int ell() const { return ell_; }
  int value(int element) const { return values_[element]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const PPartition& other) const {
    return ell_ == other.ell_ && values_ == other.values_;
  }
  auto operator<=>(const PPartition& other) const {
    if (auto c = ell_ <=> other.ell_; c != 0) return c;
    return values_ <=> other.values_;
  }

 private:
  PosetPtr poset_;
  int ell_;
  std::vector<int> values_;
};

/// PP^ell(P) in lexicographic order of the values read in element order.
std::vector<PPartition> enumerate_ppartitions(const PosetPtr& poset, int ell,
                                              std::size_t limit = 5'000'000);

/// Piecewise-linear toggle at `element`.
PPartition toggle(int element, const PPartition& f);

/// row = tau_{p_1} o ... o tau_{p_m} for the extension (p_1, ..., p_m).
PPartition rowmotion(const PPartition& f, const LinearExtension& ext);
/// Rowmotion along the lexicographically first linear extension.
PPartition rowmotion(const PPartition& f);

/// Toggle-promotion on PP^ell(P x [q-n-1]) for a graded base P of rank n:
/// the k-th step toggles every (p, i) with i = q - n + rk(p) - k.
PPartition togpro(const PPartition& f, int q);

/// Toggle groups of togpro in application order (element indices).
std::vector<std::vector<int>> togpro_schedule(const Poset& product, int q);

/// Automorphism of a poset, as an element permutation.
class PosetAutomorphism {
 public:
  PosetAutomorphism(PosetPtr poset, std::vector<int> mapping);

  const Poset& poset() const { return *poset_; }
  int operator()(int element) const { return mapping_[element]; }
  const std::vector<int>& mapping() const { return mapping_; }
  PosetAutomorphism inverse() const;

 private:
  PosetPtr poset_;
  std::vector<int> mapping_;
};

/// Exchange of B and C in every layer of V x [k].
PosetAutomorphism flip(const PosetPtr& v_times_k);

/// (psi f)(e) = f(psi(e)).
PPartition apply_automorphism(const PosetAutomorphism& psi, const PPartition& f);

}  // namespace vdyn
