#include "vdyn/rowmotion.hpp"

#include <algorithm>
#include <functional>

#include "vdyn/error.hpp"

namespace vdyn {

PPartition::PPartition(PosetPtr poset, int ell, std::vector<int> values)
    : poset_(std::move(poset)), ell_(ell), values_(std::move(values)) {
  if (ell_ < 0) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 0");
  if (values_.size() != poset_->size())
    throw Error(ErrorCode::kInvalidArgument, "one value per element required");
  for (int v : values_)
    if (v < 0 || v > ell_) throw Error(ErrorCode::kInvalidArgument, "value outside [0, ell]");
  for (const auto& [a, b] : poset_->covers())
    if (values_[a] > values_[b])
      throw Error(ErrorCode::kInvalidArgument, "P-partition is not order preserving");
}

std::vector<PPartition> enumerate_ppartitions(const PosetPtr& poset, int ell, std::size_t limit) {
  if (ell < 0) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 0");
  const int m = static_cast<int>(poset->size());
  std::vector<PPartition> out;
  std::vector<int> values(m, 0);
  std::function<void(int)> assign = [&](int e) {
    if (e == m) {
      if (out.size() >= limit)
        throw Error(ErrorCode::kCeilingExceeded, "P-partition count exceeds ceiling");
      out.emplace_back(poset, ell, values);
      return;
    }
    int lo = 0;
    int hi = ell;
    for (int x = 0; x < e; ++x) {
      if (poset->less(x, e)) lo = std::max(lo, values[x]);
      if (poset->less(e, x)) hi = std::min(hi, values[x]);
    }
    for (int v = lo; v <= hi; ++v) {
      values[e] = v;
      assign(e + 1);
    }
  };
  assign(0);
  return out;
}

PPartition toggle(int element, const PPartition& f) {
  const auto& poset = f.poset();
  if (element < 0 || element >= static_cast<int>(poset.size()))
    throw Error(ErrorCode::kNotPresent, "toggle at unknown element");
  int above = f.ell();
  for (int u : poset.upper_covers(element)) above = std::min(above, f.value(u));
  int below = 0;
  for (int l : poset.lower_covers(element)) below = std::max(below, f.value(l));
  auto values = f.values();
  values[element] = above + below - values[element];
  return PPartition(f.poset_ptr(), f.ell(), std::move(values));
}

PPartition rowmotion(const PPartition& f, const LinearExtension& ext) {
  if (ext.poset_ptr() != f.poset_ptr() && !(ext.poset() == f.poset()))
    throw Error(ErrorCode::kShapeMismatch, "linear extension is over a different poset");
  PPartition g = f;
  const auto& order = ext.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) g = toggle(*it, g);
  return g;
}

PPartition rowmotion(const PPartition& f) {
  return rowmotion(f, first_linear_extension(f.poset_ptr()));
}

std::vector<std::vector<int>> togpro_schedule(const Poset& product, int q) {
  const int n_total = product.rank();
  int layers = 0;
  for (const auto& e : product.elements()) {
    if (e.layer == 0) throw Error(ErrorCode::kShapeMismatch, "togpro needs a product P x [k]");
    layers = std::max(layers, e.layer);
  }
  // rk((p,i)) = rk(p) + i - 1, so the base has rank n = n_total - layers + 1.
  const int n = n_total - layers + 1;
  if (layers != q - n - 1)
    throw Error(ErrorCode::kShapeMismatch,
                "togpro at q = " + std::to_string(q) + " needs P x [" +
                    std::to_string(q - n - 1) + "], got " + std::to_string(layers) + " layers");

  std::vector<std::vector<int>> schedule;
  for (int k = 1;; ++k) {
    std::vector<int> group;
    bool any_left = false;
    for (int e = 0; e < static_cast<int>(product.size()); ++e) {
      const int layer = product.element(e).layer;
      const int base_rank = product.rank(e) - (layer - 1);
      const int target = q - n + base_rank - k;
      if (target >= 1) any_left = true;
      if (target == layer) group.push_back(e);
    }
    if (!any_left) break;
    schedule.push_back(std::move(group));
  }
  return schedule;
}

PPartition togpro(const PPartition& f, int q) {
  PPartition g = f;
  for (const auto& group : togpro_schedule(f.poset(), q))
    for (int e : group) g = toggle(e, g);
  return g;
}

PosetAutomorphism::PosetAutomorphism(PosetPtr poset, std::vector<int> mapping)
    : poset_(std::move(poset)), mapping_(std::move(mapping)) {
  const int m = static_cast<int>(poset_->size());
  if (static_cast<int>(mapping_.size()) != m)
    throw Error(ErrorCode::kInvalidArgument, "automorphism size mismatch");
  std::vector<char> hit(m, 0);
  for (int x : mapping_) {
    if (x < 0 || x >= m || hit[x]) throw Error(ErrorCode::kNotBijective, "mapping is not a bijection");
    hit[x] = 1;
  }
  std::vector<Poset::Cover> image;
  for (const auto& [a, b] : poset_->covers()) image.emplace_back(mapping_[a], mapping_[b]);
  std::sort(image.begin(), image.end());
  if (image != poset_->covers())
    throw Error(ErrorCode::kInvalidArgument, "mapping does not preserve covers");
}

PosetAutomorphism PosetAutomorphism::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (std::size_t e = 0; e < mapping_.size(); ++e) inv[mapping_[e]] = static_cast<int>(e);
  return PosetAutomorphism(poset_, std::move(inv));
}

PosetAutomorphism flip(const PosetPtr& v_times_k) {
  if (!v_chain_length(*v_times_k))
    throw Error(ErrorCode::kShapeMismatch, "Flip is defined on V x [k]");
  std::vector<int> mapping(v_times_k->size());
  for (int e = 0; e < static_cast<int>(v_times_k->size()); ++e) {
    ElementId id = v_times_k->element(e);
    if (id.token == "B") id.token = "C";
    else if (id.token == "C") id.token = "B";
    mapping[e] = v_times_k->index_of(id);
  }
  return PosetAutomorphism(v_times_k, std::move(mapping));
}

PPartition apply_automorphism(const PosetAutomorphism& psi, const PPartition& f) {
  if (!(psi.poset() == f.poset()))
    throw Error(ErrorCode::kShapeMismatch, "automorphism is over a different poset");
  std::vector<int> values(f.values().size());
  for (std::size_t e = 0; e < values.size(); ++e) values[e] = f.value(psi(static_cast<int>(e)));
  return PPartition(f.poset_ptr(), f.ell(), std::move(values));
}

}  // namespace vdyn
