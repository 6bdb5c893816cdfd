#pragma once

// Brute-force reference implementations. Each one works from the
// definitions directly and shares no code with the library routines it
// checks.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Fibers A, B, C of a labeling of V x [ell].
using Fibers = std::array<std::vector<int>, 3>;

inline bool valid_labeling(const Fibers& f, int q) {
  const std::size_t ell = f[0].size();
  if (f[1].size() != ell || f[2].size() != ell) return false;
  for (std::size_t i = 0; i < ell; ++i) {
    if (f[0][i] < 1 || f[0][i] > q - 1) return false;
    for (int p = 1; p < 3; ++p)
      if (f[p][i] < 2 || f[p][i] > q || f[p][i] <= f[0][i]) return false;
    if (i > 0)
      for (int p = 0; p < 3; ++p)
        if (f[p][i] < f[p][i - 1]) return false;
  }
  return true;
}

// Every map V x [ell] -> [q], filtered by validity.
inline std::vector<Fibers> all_labelings(int ell, int q) {
  std::vector<Fibers> out;
  const int m = 3 * ell;
  std::vector<int> v(m, 1);
  while (true) {
    Fibers f;
    for (int p = 0; p < 3; ++p) f[p].assign(v.begin() + p * ell, v.begin() + (p + 1) * ell);
    if (valid_labeling(f, q)) out.push_back(f);
    int i = m - 1;
    while (i >= 0 && v[i] == q) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Weakly increasing sequences of length ell over [1, q].
inline std::vector<std::vector<int>> monotone_fibers(int ell, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> v;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(v.size()) == ell) {
      out.push_back(v);
      return;
    }
    for (int x = lo; x <= q; ++x) {
      v.push_back(x);
      rec(x);
      v.pop_back();
    }
  };
  rec(1);
  return out;
}

// Free labels straight from the definition: (p, i) labeled k is raisable when
// some labeling that differs from f only on fiber p has a larger value at
// (p, i); (p, i) labeled k+1 is lowerable likewise with a smaller value.
struct Free {
  std::vector<std::pair<int, int>> raisable;  // (fiber, 0-based layer)
  std::vector<std::pair<int, int>> lowerable;
};

inline Free free_labels(const Fibers& f, int q, int k) {
  Free out;
  const int ell = static_cast<int>(f[0].size());
  const auto candidates = monotone_fibers(ell, q);
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < ell; ++i) {
      if (f[p][i] != k && f[p][i] != k + 1) continue;
      bool up = false, down = false;
      for (const auto& alt : candidates) {
        Fibers g = f;
        g[p] = alt;
        if (!valid_labeling(g, q)) continue;
        up = up || alt[i] > f[p][i];
        down = down || alt[i] < f[p][i];
      }
      if (f[p][i] == k && up) out.raisable.emplace_back(p, i);
      if (f[p][i] == k + 1 && down) out.lowerable.emplace_back(p, i);
    }
  return out;
}

// Bender-Knuth on one fiber: the free k's and (k+1)'s of a fiber form a
// contiguous run; a k's then b (k+1)'s become b k's then a (k+1)'s.
inline Fibers tau(const Fibers& f, int q, int k) {
  const Free fr = free_labels(f, q, k);
  Fibers g = f;
  for (int p = 0; p < 3; ++p) {
    std::vector<int> idx;
    for (auto [fp, i] : fr.raisable)
      if (fp == p) idx.push_back(i);
    const int a = static_cast<int>(idx.size());
    for (auto [fp, i] : fr.lowerable)
      if (fp == p) idx.push_back(i);
    std::sort(idx.begin(), idx.end());
    const int b = static_cast<int>(idx.size()) - a;
    for (int j = 0; j < static_cast<int>(idx.size()); ++j) g[p][idx[j]] = j < b ? k : k + 1;
  }
  return g;
}

inline Fibers promote(Fibers f, int q) {
  for (int k = 1; k < q; ++k) f = tau(f, q, k);
  return f;
}

// Values of V x [k] listed (A,1..k), (B,1..k), (C,1..k).
inline bool valid_ppartition(const std::vector<int>& v, int k, int ell) {
  for (int x : v)
    if (x < 0 || x > ell) return false;
  for (int i = 0; i < k; ++i) {
    if (v[i] > v[k + i] || v[i] > v[2 * k + i]) return false;
    if (i > 0)
      for (int p = 0; p < 3; ++p)
        if (v[p * k + i - 1] > v[p * k + i]) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> all_ppartitions(int k, int ell) {
  std::vector<std::vector<int>> out;
  const int m = 3 * k;
  std::vector<int> v(m, 0);
  while (true) {
    if (valid_ppartition(v, k, ell)) out.push_back(v);
    int i = m - 1;
    while (i >= 0 && v[i] == ell) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// Order relation of V x [k] in the same element order, from the definition:
// (p,i) <= (p',j) iff p <= p' in V and i <= j.
inline bool leq_vk(int x, int y, int k) {
  const int p = x / k, i = x % k, pp = y / k, j = y % k;
  const bool base = p == pp || p == 0;
  return base && i <= j;
}

// Classical rowmotion on an order ideal I (given as the zero set of a 0/1
// P-partition): the down-closure of the minimal elements outside I.
inline std::vector<int> rowmotion_ideal(const std::vector<int>& v, int k) {
  const int m = 3 * k;
  std::vector<int> minimal;
  for (int x = 0; x < m; ++x) {
    if (v[x] == 0) continue;
    bool is_min = true;
    for (int y = 0; y < m; ++y)
      if (y != x && v[y] == 1 && leq_vk(y, x, k)) is_min = false;
    if (is_min) minimal.push_back(x);
  }
  std::vector<int> out(m, 1);
  for (int x = 0; x < m; ++x)
    for (int y : minimal)
      if (leq_vk(x, y, k)) out[x] = 0;
  return out;
}

// Number of Kreweras words of length 3n by counting lattice paths.
inline std::uint64_t kreweras_paths(int n) {
  std::map<std::array<int, 3>, std::uint64_t> ways{{{0, 0, 0}, 1}};
  for (int step = 0; step < 3 * n; ++step) {
    std::map<std::array<int, 3>, std::uint64_t> next;
    for (const auto& [s, w] : ways) {
      auto [a, b, c] = s;
      if (a < n) next[{a + 1, b, c}] += w;
      if (b < a) next[{a, b + 1, c}] += w;
      if (c < a) next[{a, b, c + 1}] += w;
    }
    ways = std::move(next);
  }
  return ways[{n, n, n}];
}

// All linear extensions of V x [k] by filtering permutations.
inline std::vector<std::vector<int>> all_linear_extensions(int k) {
  const int m = 3 * k;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      for (int y = 0; y < m && ok; ++y)
        if (x != y && leq_vk(x, y, k) && perm[x] > perm[y]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

using Arc = std::pair<int, int>;

inline bool cross(Arc x, Arc y) {
  if (x.first > y.first) std::swap(x, y);
  return x.first < y.first && y.first < x.second && x.second < y.second;
}

// Every noncrossing perfect matching of openers to closers in which each
// closer comes after its opener. Positions are arbitrary integers.
inline std::vector<std::vector<Arc>> noncrossing_matchings(const std::vector<int>& openers,
                                                           const std::vector<int>& closers) {
  std::vector<std::vector<Arc>> out;
  std::vector<int> order(closers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (openers.size() != closers.size()) return out;
  do {
    std::vector<Arc> arcs;
    bool ok = true;
    for (std::size_t i = 0; i < openers.size() && ok; ++i) {
      const int c = closers[order[i]];
      if (c <= openers[i]) ok = false;
      arcs.emplace_back(openers[i], c);
    }
    for (std::size_t i = 0; i < arcs.size() && ok; ++i)
      for (std::size_t j = i + 1; j < arcs.size() && ok; ++j)
        if (cross(arcs[i], arcs[j])) ok = false;
    if (ok) {
      std::sort(arcs.begin(), arcs.end());
      out.push_back(arcs);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace oracle
