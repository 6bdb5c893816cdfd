#include "vdyn/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>

#include "vdyn/error.hpp"

namespace vdyn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kCountMismatch: return "count_mismatch";
    case ErrorCode::kPrefixViolation: return "prefix_violation";
    case ErrorCode::kHasDoubleArcs: return "has_double_arcs";
    case ErrorCode::kNotPresent: return "not_present";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kNotBijective: return "not_bijective";
    case ErrorCode::kCeilingExceeded: return "ceiling_exceeded";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

std::string ElementId::str() const {
  if (layer == 0) return token;
  return "(" + token + "," + std::to_string(layer) + ")";
}

Poset::Poset(std::vector<ElementId> elements, std::vector<Cover> covers)
    : elements_(std::move(elements)), covers_(std::move(covers)) {
  const int m = static_cast<int>(elements_.size());
  {
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::kInvalidArgument, "duplicate poset element");
  }
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

  upper_.assign(m, {});
  lower_.assign(m, {});
  std::vector<int> indegree(m, 0);
  for (const auto& [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      throw Error(ErrorCode::kInvalidArgument, "bad cover pair");
    upper_[a].push_back(b);
    lower_[b].push_back(a);
    ++indegree[b];
  }

  // Kahn's algorithm; leftover vertices mean a cycle.
  std::vector<int> topo;
  topo.reserve(m);
  std::queue<int> ready;
  for (int e = 0; e < m; ++e)
    if (indegree[e] == 0) ready.push(e);
  while (!ready.empty()) {
    int e = ready.front();
    ready.pop();
    topo.push_back(e);
    for (int u : upper_[e])
      if (--indegree[u] == 0) ready.push(u);
  }
  if (static_cast<int>(topo.size()) != m)
    throw Error(ErrorCode::kInvalidArgument, "covers contain a cycle");

  leq_.assign(static_cast<std::size_t>(m) * m, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int e = *it;
    leq_[e * m + e] = 1;
    for (int u : upper_[e])
      for (int x = 0; x < m; ++x)
        if (leq_[u * m + x]) leq_[e * m + x] = 1;
  }

  for (const auto& [a, b] : covers_)
    for (int c = 0; c < m; ++c)
      if (c != a && c != b && leq(a, c) && leq(c, b))
        throw Error(ErrorCode::kInvalidArgument,
                    "redundant cover " + elements_[a].str() + " < " +
                        elements_[b].str());

  // Grading: minima at rank 0, +1 along every cover, all maxima equal.
  ranks_.assign(m, -1);
  bool consistent = true;
  for (int e : topo) {
    if (lower_[e].empty()) {
      ranks_[e] = 0;
      continue;
    }
    int r = ranks_[lower_[e].front()] + 1;
    for (int l : lower_[e])
      if (ranks_[l] + 1 != r) consistent = false;
    ranks_[e] = r;
  }
  std::optional<int> top;
  for (int e = 0; e < m && consistent; ++e) {
    if (!upper_[e].empty()) continue;
    if (top && *top != ranks_[e]) consistent = false;
    top = ranks_[e];
  }
  if (consistent) rank_of_poset_ = top.value_or(0);
}

int Poset::index_of(const ElementId& id) const {
  auto it = std::find(elements_.begin(), elements_.end(), id);
  if (it == elements_.end())
    throw Error(ErrorCode::kNotPresent, "unknown element " + id.str());
  return static_cast<int>(it - elements_.begin());
}

bool Poset::is_cover(int lower, int upper) const {
  return std::binary_search(covers_.begin(), covers_.end(),
                            Cover{lower, upper});
}

int Poset::rank() const {
  if (!rank_of_poset_) throw Error(ErrorCode::kShapeMismatch, "poset is not graded");
  return *rank_of_poset_;
}

int Poset::rank(int e) const {
  if (!rank_of_poset_) throw Error(ErrorCode::kShapeMismatch, "poset is not graded");
  return ranks_.at(e);
}

Poset make_v() {
  return Poset({{"A", 0}, {"B", 0}, {"C", 0}}, {{0, 1}, {0, 2}});
}

Poset make_chain(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "chain length must be >= 1");
  std::vector<ElementId> elements;
  std::vector<Poset::Cover> covers;
  for (int i = 0; i < n; ++i) {
    elements.push_back({std::to_string(i + 1), 0});
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset(std::move(elements), std::move(covers));
}

Poset product_with_chain(const Poset& base, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "chain length must be >= 1");
  for (const auto& e : base.elements())
    if (e.layer != 0)
      throw Error(ErrorCode::kInvalidArgument, "base is already a product");

  const int m = static_cast<int>(base.size());
  auto index = [k](int p, int layer) { return p * k + (layer - 1); };
  std::vector<ElementId> elements;
  elements.reserve(static_cast<std::size_t>(m) * k);
  for (int p = 0; p < m; ++p)
    for (int i = 1; i <= k; ++i) elements.push_back({base.element(p).token, i});

  std::vector<Poset::Cover> covers;
  for (int i = 1; i <= k; ++i)
    for (const auto& [a, b] : base.covers()) covers.emplace_back(index(a, i), index(b, i));
  for (int p = 0; p < m; ++p)
    for (int i = 1; i < k; ++i) covers.emplace_back(index(p, i), index(p, i + 1));
  return Poset(std::move(elements), std::move(covers));
}

PosetPtr v_times_chain(int k) {
  static std::mutex mu;
  static std::map<int, PosetPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_shared<const Poset>(product_with_chain(make_v(), k));
  return slot;
}

std::optional<int> v_chain_length(const Poset& poset) {
  if (poset.size() == 0 || poset.size() % 3 != 0) return std::nullopt;
  int k = static_cast<int>(poset.size() / 3);
  if (poset == *v_times_chain(k)) return k;
  return std::nullopt;
}

LinearExtension::LinearExtension(PosetPtr poset, std::vector<int> labels)
    : poset_(std::move(poset)), labels_(std::move(labels)) {
  const int m = static_cast<int>(poset_->size());
  if (static_cast<int>(labels_.size()) != m)
    throw Error(ErrorCode::kInvalidArgument, "label count differs from poset size");
  order_.assign(m, -1);
  for (int e = 0; e < m; ++e) {
    int l = labels_[e];
    if (l < 1 || l > m || order_[l - 1] != -1)
      throw Error(ErrorCode::kInvalidArgument, "labels are not a bijection onto [m]");
    order_[l - 1] = e;
  }
  for (const auto& [a, b] : poset_->covers())
    if (labels_[a] >= labels_[b])
      throw Error(ErrorCode::kInvalidArgument, "labels are not order preserving");
}

std::vector<LinearExtension> linear_extensions(const PosetPtr& poset,
                                               std::size_t limit) {
  const int m = static_cast<int>(poset->size());
  std::vector<std::vector<int>> found;
  std::vector<int> labels(m, 0);
  std::vector<int> missing(m);
  for (int e = 0; e < m; ++e)
    missing[e] = static_cast<int>(poset->lower_covers(e).size());

  std::function<void(int)> place = [&](int next_label) {
    if (next_label > m) {
      if (found.size() >= limit)
        throw Error(ErrorCode::kCeilingExceeded, "linear extension count exceeds ceiling");
      found.push_back(labels);
      return;
    }
    for (int e = 0; e < m; ++e) {
      if (labels[e] != 0 || missing[e] != 0) continue;
      labels[e] = next_label;
      for (int u : poset->upper_covers(e)) --missing[u];
      place(next_label + 1);
      for (int u : poset->upper_covers(e)) ++missing[u];
      labels[e] = 0;
    }
  };
  place(1);

  std::sort(found.begin(), found.end());
  std::vector<LinearExtension> out;
  out.reserve(found.size());
  for (auto& l : found) out.emplace_back(poset, std::move(l));
  return out;
}

LinearExtension first_linear_extension(const PosetPtr& poset) {
  // Placing each element (in index order) right after its unplaced
  // down-set minimizes the label of every element given the earlier ones.
  const int m = static_cast<int>(poset->size());
  std::vector<int> labels(m, 0);
  int next = 1;
  std::function<void(int)> place = [&](int e) {
    if (labels[e] != 0) return;
    for (int x = 0; x < m; ++x)
      if (poset->less(x, e)) place(x);
    labels[e] = next++;
  };
  for (int e = 0; e < m; ++e) place(e);
  return LinearExtension(poset, std::move(labels));
}

}  // namespace vdyn
