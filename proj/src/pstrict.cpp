#include "vdyn/pstrict.hpp"

#include <algorithm>
#include <functional>

#include "vdyn/error.hpp"

namespace vdyn {

RestrictionFunction::RestrictionFunction(PosetPtr poset, int q,
                                         std::vector<LabelInterval> intervals)
    : poset_(std::move(poset)), q_(q), intervals_(std::move(intervals)) {
  if (intervals_.size() != poset_->size())
    throw Error(ErrorCode::kInvalidArgument, "one interval per element required");
  for (const auto& r : intervals_)
    if (r.lo > r.hi || r.lo < 1 || r.hi > q_)
      throw Error(ErrorCode::kInvalidArgument, "restriction interval outside [1,q]");
}

RestrictionFunction restriction_rq(const PosetPtr& poset, int q) {
  const int n = poset->rank();
  if (q < n + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "q = " + std::to_string(q) + " admits no labeling of a rank " +
                    std::to_string(n) + " poset");
  std::vector<LabelInterval> intervals;
  intervals.reserve(poset->size());
  for (int e = 0; e < static_cast<int>(poset->size()); ++e) {
    const int rk = poset->rank(e);
    intervals.push_back({rk + 1, q - n + rk});
  }
  return RestrictionFunction(poset, q, std::move(intervals));
}

namespace {

// R^q on V: R(A) = [1, q-1], R(B) = R(C) = [2, q].
LabelInterval v_range(Letter p, int q) {
  return p == Letter::A ? LabelInterval{1, q - 1} : LabelInterval{2, q};
}

}  // namespace

LabelInterval PStrictLabeling::range(Letter p) const { return v_range(p, q_); }

std::string labeling_violation(int ell, int q, const PStrictLabeling::Fibers& fibers) {
  if (ell < 0) return "ell must be >= 0";
  if (q < 2) return "q must be >= 2";
  for (Letter p : kLetters) {
    const auto& fiber = fibers[fiber_index(p)];
    if (static_cast<int>(fiber.size()) != ell)
      return std::string("fiber ") + to_char(p) + " has wrong length";
    const auto r = v_range(p, q);
    for (int i = 0; i < ell; ++i) {
      if (!r.contains(fiber[i]))
        return std::string("label outside R(") + to_char(p) + ")";
      if (i > 0 && fiber[i - 1] > fiber[i])
        return std::string("fiber ") + to_char(p) + " decreases";
    }
  }
  for (int i = 0; i < ell; ++i)
    if (fibers[0][i] >= fibers[1][i] || fibers[0][i] >= fibers[2][i])
      return "layer " + std::to_string(i + 1) + " is not strict";
  return {};
}

PStrictLabeling::PStrictLabeling(int ell, int q, Fibers fibers)
    : ell_(ell), q_(q), fibers_(std::move(fibers)) {
  if (auto why = labeling_violation(ell_, q_, fibers_); !why.empty())
    throw Error(ErrorCode::kInvalidArgument, "invalid P-strict labeling: " + why);
}

void for_each_labeling(int ell, int q, const std::function<bool(const PStrictLabeling&)>& visit) {
  if (ell < 0 || q < 2)
    throw Error(ErrorCode::kInvalidArgument, "labeling enumeration needs ell >= 0, q >= 2");
  PStrictLabeling::Fibers fibers;
  for (auto& f : fibers) f.assign(ell, 0);

  // Fibers are filled A, then B, then C, each position increasing from its
  // smallest admissible value, which yields lexicographic order.
  bool stop = false;
  std::function<void(int, int)> fill = [&](int fiber, int i) {
    if (fiber == 3) {
      stop = !visit(PStrictLabeling(ell, q, fibers));
      return;
    }
    if (i == ell) {
      fill(fiber + 1, 0);
      return;
    }
    const auto r = v_range(kLetters[fiber], q);
    int lo = r.lo;
    if (i > 0) lo = std::max(lo, fibers[fiber][i - 1]);
    if (fiber > 0) lo = std::max(lo, fibers[0][i] + 1);
    for (int v = lo; v <= r.hi && !stop; ++v) {
      fibers[fiber][i] = v;
      fill(fiber, i + 1);
    }
  };
  fill(0, 0);
}

std::vector<PStrictLabeling> enumerate_labelings(int ell, int q, std::size_t limit) {
  std::vector<PStrictLabeling> out;
  for_each_labeling(ell, q, [&](const PStrictLabeling& f) {
    if (out.size() >= limit) throw Error(ErrorCode::kCeilingExceeded, "labeling count exceeds ceiling");
    out.push_back(f);
    return true;
  });
  return out;
}

namespace {

// Free labels of one fiber as (first index, count of free k, count of free
// k+1). Free k's are a suffix of the run of k's and free k+1's a prefix of
// the run of k+1's, so together they form one contiguous segment.
struct FreeSegment {
  int start = 0;
  int raisable = 0;
  int lowerable = 0;
};

FreeSegment free_segment(int k, Letter p, const PStrictLabeling& f) {
  const auto& fiber = f.fiber(p);
  const auto r = f.range(p);
  const auto run_k_begin = std::lower_bound(fiber.begin(), fiber.end(), k) - fiber.begin();
  const auto run_k_end = std::upper_bound(fiber.begin(), fiber.end(), k) - fiber.begin();
  const auto run_k1_end = std::upper_bound(fiber.begin(), fiber.end(), k + 1) - fiber.begin();

  FreeSegment seg;
  seg.start = static_cast<int>(run_k_end);
  if (r.contains(k + 1)) {
    // Raising (p,i) forces every later k in the fiber to k+1 as well.
    for (auto j = run_k_end - 1; j >= run_k_begin; --j) {
      if (p == Letter::A) {
        const int layer = static_cast<int>(j) + 1;
        if (f.at(Letter::B, layer) <= k + 1 || f.at(Letter::C, layer) <= k + 1) break;
      }
      ++seg.raisable;
      seg.start = static_cast<int>(j);
    }
  }
  if (r.contains(k)) {
    // Lowering (p,i) forces every earlier k+1 in the fiber to k as well.
    for (auto j = run_k_end; j < run_k1_end; ++j) {
      if (p != Letter::A && f.at(Letter::A, static_cast<int>(j) + 1) >= k) break;
      ++seg.lowerable;
    }
  }
  return seg;
}

void check_k(int k, const PStrictLabeling& f) {
  if (k < 1 || k > f.q() - 1)
    throw Error(ErrorCode::kIndexOutOfRange,
                "Bender-Knuth index " + std::to_string(k) + " outside [1, q-1]");
}

}  // namespace

FreeLabels free_labels(int k, const PStrictLabeling& f) {
  check_k(k, f);
  FreeLabels out;
  for (Letter p : kLetters) {
    const auto seg = free_segment(k, p, f);
    for (int j = 0; j < seg.raisable; ++j) out.raisable.push_back({p, seg.start + j + 1});
    for (int j = 0; j < seg.lowerable; ++j)
      out.lowerable.push_back({p, seg.start + seg.raisable + j + 1});
  }
  return out;
}

PStrictLabeling bender_knuth_tau(int k, const PStrictLabeling& f) {
  check_k(k, f);
  auto fibers = f.fibers();
  for (Letter p : kLetters) {
    const auto seg = free_segment(k, p, f);
    auto& fiber = fibers[fiber_index(p)];
    for (int j = 0; j < seg.lowerable; ++j) fiber[seg.start + j] = k;
    for (int j = 0; j < seg.raisable; ++j) fiber[seg.start + seg.lowerable + j] = k + 1;
  }
  return PStrictLabeling(f.ell(), f.q(), std::move(fibers));
}

PStrictLabeling promote_pstrict(const PStrictLabeling& f) {
  PStrictLabeling g = f;
  for (int k = 1; k <= f.q() - 1; ++k) g = bender_knuth_tau(k, g);
  return g;
}

PStrictLabeling swap_bc(const PStrictLabeling& f) {
  auto fibers = f.fibers();
  std::swap(fibers[1], fibers[2]);
  return PStrictLabeling(f.ell(), f.q(), std::move(fibers));
}

}  // namespace vdyn
