#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdyn/error.hpp"

namespace vdyn {

/// Opaque element token. Elements of a product P x [k] carry the base token
/// plus a 1-based layer; plain elements have layer 0.
struct ElementId {
  std::string token;
  int layer = 0;

  auto operator<=>(const ElementId&) const = default;
  std::string str() const;
};

/// Finite poset given by its cover relations. The order relation and the
/// rank function (when graded) are computed once at construction.
class Poset {
 public:
  using Cover = std::pair<int, int>;

  Poset(std::vector<ElementId> elements, std::vector<Cover> covers);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const ElementId& element(int index) const { return elements_.at(index); }
  int index_of(const ElementId& id) const;

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int e) const { return upper_[e]; }
  const std::vector<int>& lower_covers(int e) const { return lower_[e]; }
  bool is_cover(int lower, int upper) const;

  bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  bool graded() const { return rank_of_poset_.has_value(); }
  /// Rank n of a graded poset; throws when not graded.
  int rank() const;
  /// rk(e); throws when not graded.
  int rank(int e) const;

  bool operator==(const Poset& other) const {
    return elements_ == other.elements_ && covers_ == other.covers_;
  }

 private:
  std::vector<ElementId> elements_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<char> leq_;
  std::vector<int> ranks_;
  std::optional<int> rank_of_poset_;
};

using PosetPtr = std::shared_ptr<const Poset>;

/// The poset V on {A, B, C} with A covered by B and by C.
Poset make_v();
/// The chain [n] with elements "1" < ... < "n".
Poset make_chain(int n);
/// P x [k]; elements are ordered base-major: (p,1), ..., (p,k) for each p.
Poset product_with_chain(const Poset& base, int k);

/// Shared V x [k], built once per k.
PosetPtr v_times_chain(int k);
/// Returns k when `poset` is exactly product_with_chain(make_v(), k).
std::optional<int> v_chain_length(const Poset& poset);

/// An order-preserving bijection P -> {1..m}.
class LinearExtension {
 public:
  LinearExtension(PosetPtr poset, std::vector<int> labels);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  int label(int element) const { return labels_[element]; }
  /// Element carrying `label` (1-based).
  int element_at(int label) const { return order_[label - 1]; }
  const std::vector<int>& labels() const { return labels_; }
  /// Elements listed in label order.
  const std::vector<int>& order() const { return order_; }

  bool operator==(const LinearExtension& other) const {
    return labels_ == other.labels_;
  }
  auto operator<=>(const LinearExtension& other) const {
    return labels_ <=> other.labels_;
  }

 private:
  PosetPtr poset_;
  std::vector<int> labels_;
  std::vector<int> order_;
};

/// Every linear extension, sorted lexicographically by label sequence read
/// in element order. Throws kCeilingExceeded past `limit` extensions.
std::vector<LinearExtension> linear_extensions(const PosetPtr& poset,
                                               std::size_t limit = 5'000'000);

/// Lexicographically first linear extension, built greedily.
LinearExtension first_linear_extension(const PosetPtr& poset);

}  // namespace vdyn
