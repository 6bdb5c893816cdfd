#include "vdyn/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "vdyn/kreweras.hpp"
#include "vdyn/multikreweras.hpp"
#include "vdyn/pstrict.hpp"
#include "vdyn/rowmotion.hpp"
#include "vdyn/serialize.hpp"

namespace vdyn {

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::uint64_t kreweras_count(int n) {
  if (n < 0 || n > 8) throw Error(ErrorCode::kInvalidArgument, "kreweras_count supports 0 <= n <= 8");
  unsigned __int128 num = 1;
  for (int i = 0; i < n; ++i) num *= 4;
  for (int i = 2; i <= 3 * n; ++i) num *= static_cast<unsigned>(i);
  unsigned __int128 den = 1;
  for (int i = 2; i <= n + 1; ++i) den *= static_cast<unsigned>(i);
  for (int i = 2; i <= 2 * n + 1; ++i) den *= static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(num / den);
}

namespace {

struct Outcome {
  bool pass = true;
  Json counterexample = nullptr;

  static Outcome fail(Json why) { return {false, std::move(why)}; }
};

struct Task {
  std::string id;
  Json params;
  std::function<Outcome()> run;
};

template <class T, class Action>
std::vector<std::size_t> image_indices(const std::vector<T>& elements, Action&& act) {
  std::vector<std::size_t> image(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const T next = act(elements[i]);
    auto it = std::lower_bound(elements.begin(), elements.end(), next);
    if (it == elements.end() || !(*it == next))
      throw Error(ErrorCode::kNotBijective, "action leaves the enumerated set");
    image[i] = static_cast<std::size_t>(it - elements.begin());
  }
  return image;
}

std::size_t power_of(const std::vector<std::size_t>& image, std::size_t x, int power) {
  for (int i = 0; i < power; ++i) x = image[x];
  return x;
}

std::vector<std::uint64_t> orbit_sizes(const std::vector<std::size_t>& image) {
  std::vector<std::uint64_t> sizes;
  for (const auto& c : decompose_permutation(image).cycles) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Json sizes_json(const std::vector<std::uint64_t>& sizes) { return Json(sizes); }

// Grid of (ell, second) points. `second` is q or k depending on the family.
struct Grid {
  int ell_lo;
  int ell_hi;
  int second_lo;
  int second_hi;
  int sum_max = 0;  // 0: no bound on ell + second
};

enum class Second { kQ, kK, kNone };

std::vector<std::pair<int, int>> grid_points(Grid g, Second second, const SuiteOptions& o) {
  if (o.ell_max) {
    g.ell_hi = *o.ell_max;
    g.sum_max = 0;
  }
  if (o.q_max && second != Second::kNone) {
    g.second_hi = second == Second::kQ ? *o.q_max : *o.q_max - 2;
    g.sum_max = 0;
  }
  std::vector<std::pair<int, int>> out;
  for (int ell = g.ell_lo; ell <= g.ell_hi; ++ell)
    for (int s = g.second_lo; s <= g.second_hi; ++s)
      if (g.sum_max == 0 || ell + s <= g.sum_max) out.emplace_back(ell, s);
  return out;
}

Json params_of(Second second, int ell, int s) {
  Json p = Json::object();
  switch (second) {
    case Second::kQ: p["ell"] = ell; p["q"] = s; break;
    case Second::kK: p["ell"] = ell; p["k"] = s; break;
    case Second::kNone: p["n"] = ell; break;
  }
  return p;
}

using ClaimFn = std::function<Outcome(int ell, int s, std::size_t limit)>;

void add_family(std::vector<Task>& tasks, const std::string& id, Grid grid, Second second,
                const SuiteOptions& o, ClaimFn fn) {
  const std::size_t limit = o.max_elements;
  for (auto [ell, s] : grid_points(grid, second, o))
    tasks.push_back({id, params_of(second, ell, s), [fn, ell, s, limit] { return fn(ell, s, limit); }});
}

// --- main -----------------------------------------------------------------

void build_main(std::vector<Task>& t, const SuiteOptions& o) {
  const Grid grid{1, 3, 3, 7, 10};
  add_family(t, "order-divides-2q", grid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    const auto elems = enumerate_labelings(ell, q, limit);
    const auto image = image_indices(elems, promote_pstrict);
    for (const auto& cycle : decompose_permutation(image).cycles)
      if ((2 * q) % cycle.size() != 0)
        return Outcome::fail({{"labeling", to_json(elems[cycle.front()])}, {"orbit_size", cycle.size()}});
    return Outcome{};
  });
  add_family(t, "pro-q-is-bc-swap", grid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    const auto elems = enumerate_labelings(ell, q, limit);
    const auto image = image_indices(elems, promote_pstrict);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& got = elems[power_of(image, i, q)];
      if (!(got == swap_bc(elems[i])))
        return Outcome::fail({{"labeling", to_json(elems[i])}, {"pro_q", to_json(got)}});
    }
    return Outcome{};
  });
}

// --- rowmotion ------------------------------------------------------------

void build_rowmotion(std::vector<Task>& t, const SuiteOptions& o) {
  add_family(t, "row-order-divides-2(k+2)", {1, 3, 1, 3}, Second::kK, o,
             [](int ell, int k, std::size_t limit) {
               const auto elems = enumerate_ppartitions(v_times_chain(k), ell, limit);
               const auto image = image_indices(elems, [](const PPartition& f) { return rowmotion(f); });
               const auto order = lcm_of(orbit_sizes(image));
               if ((2 * (k + 2)) % order != 0) return Outcome::fail({{"order", order}});
               return Outcome{};
             });
  add_family(t, "row-exact-order", {1, 1, 1, 3}, Second::kK, o,
             [](int ell, int k, std::size_t limit) {
               const auto elems = enumerate_ppartitions(v_times_chain(k), ell, limit);
               const auto image = image_indices(elems, [](const PPartition& f) { return rowmotion(f); });
               const auto order = lcm_of(orbit_sizes(image));
               if (ell == 1 && order != static_cast<std::uint64_t>(2 * (k + 2)))
                 return Outcome::fail({{"order", order}, {"expected", 2 * (k + 2)}});
               return Outcome{};
             });
  add_family(t, "row-q-is-flip", {1, 2, 3, 6}, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    const auto poset = v_times_chain(q - 2);
    const auto elems = enumerate_ppartitions(poset, ell, limit);
    const auto image = image_indices(elems, [](const PPartition& f) { return rowmotion(f); });
    const auto psi = flip(poset);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& got = elems[power_of(image, i, q)];
      if (!(got == apply_automorphism(psi, elems[i])))
        return Outcome::fail({{"ppartition", to_json(elems[i])}, {"row_q", to_json(got)}});
    }
    return Outcome{};
  });
  add_family(t, "row-extension-independent", {1, 2, 1, 2}, Second::kK, o,
             [](int ell, int k, std::size_t limit) {
               const auto poset = v_times_chain(k);
               const auto exts = linear_extensions(poset, limit);
               for (const auto& f : enumerate_ppartitions(poset, ell, limit)) {
                 const auto expected = rowmotion(f, exts.front());
                 for (const auto& e : exts)
                   if (!(rowmotion(f, e) == expected))
                     return Outcome::fail({{"ppartition", to_json(f)}, {"extension", to_json(e)}});
               }
               return Outcome{};
             });
  add_family(t, "toggles-commute-iff-no-cover", {1, 2, 1, 2}, Second::kK, o,
             [](int ell, int k, std::size_t limit) {
               const auto poset = v_times_chain(k);
               const auto elems = enumerate_ppartitions(poset, ell, limit);
               const int m = static_cast<int>(poset->size());
               for (int x = 0; x < m; ++x)
                 for (int y = x + 1; y < m; ++y) {
                   bool commute = true;
                   for (const auto& f : elems)
                     if (!(toggle(x, toggle(y, f)) == toggle(y, toggle(x, f)))) commute = false;
                   const bool related = poset->is_cover(x, y) || poset->is_cover(y, x);
                   if (commute == related)
                     return Outcome::fail({{"x", poset->element(x).str()},
                                           {"y", poset->element(y).str()},
                                           {"commute", commute}});
                 }
               return Outcome{};
             });
}

// --- layers ---------------------------------------------------------------

const Grid kWordGrid{1, 2, 3, 6};

void build_layers(std::vector<Task>& t, const SuiteOptions& o) {
  add_family(t, "content-rotation", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    // Promoting each layer and re-reading the fibers gives Pro(w). The
    // layers themselves need not be the decomposition of Pro(w).
    for (const auto& w : enumerate_words(ell, q, limit)) {
      auto layers = layer_decomposition(w);
      for (auto& l : layers) l = promote_layer(l, q);
      const auto expected = word_of_layers(layers, q);
      const auto pw = promote_word(w);
      if (!(pw == expected))
        return Outcome::fail({{"word", to_json(w)}, {"promoted", to_json(pw)}, {"from_layers", to_json(expected)}});
    }
    return Outcome{};
  });
  add_family(t, "shortest-arc-shift", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    for (const auto& w : enumerate_words(ell, q, limit)) {
      std::vector<ShortestArc> shifted;
      for (const auto& s : shortest_arcs(w))
        if (s.opener_block > 1) shifted.push_back({s.color, s.opener_block - 1, s.closer_block - 1});
      std::sort(shifted.begin(), shifted.end());
      const auto after = shortest_arcs(promote_word(w));
      if (!std::includes(after.begin(), after.end(), shifted.begin(), shifted.end()))
        return Outcome::fail({{"word", to_json(w)}});
    }
    return Outcome{};
  });
  add_family(t, "tau-local-involution", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    for (const auto& w : enumerate_words(ell, q, limit))
      for (int k = 1; k <= q - 1; ++k) {
        const auto tw = tau_word(k, w);
        bool ok = tau_word(k, tw) == w;
        for (int i = 1; i <= q; ++i)
          if (i != k && i != k + 1 && !(tw.block(i) == w.block(i))) ok = false;
        if (!ok) return Outcome::fail({{"word", to_json(w)}, {"k", k}});
      }
    return Outcome{};
  });
}

// --- double arcs ----------------------------------------------------------

void build_doublearcs(std::vector<Task>& t, const SuiteOptions& o) {
  add_family(t, "double-arc-count-invariant", kWordGrid, Second::kQ, o,
             [](int ell, int q, std::size_t limit) {
               for (const auto& w : enumerate_words(ell, q, limit))
                 if (double_arcs(w).size() != double_arcs(promote_word(w)).size())
                   return Outcome::fail({{"word", to_json(w)}});
               return Outcome{};
             });
  add_family(t, "double-arc-endpoint-map", kWordGrid, Second::kQ, o,
             [](int ell, int q, std::size_t limit) {
               for (const auto& w : enumerate_words(ell, q, limit)) {
                 auto mapped = double_arcs(w);
                 for (auto& d : mapped) d = promote_double_arc(d, q);
                 std::sort(mapped.begin(), mapped.end());
                 if (mapped != double_arcs(promote_word(w))) return Outcome::fail({{"word", to_json(w)}});
               }
               return Outcome{};
             });
  add_family(t, "deletion-commutes", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    for (const auto& w : enumerate_words(ell, q, limit)) {
      auto arcs = double_arcs(w);
      arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
      if (arcs.empty()) continue;
      const auto pw = promote_word(w);
      for (const auto& d : arcs) {
        const auto lhs = delete_double_arc(pw, promote_double_arc(d, q));
        const auto rhs = promote_word(delete_double_arc(w, d));
        if (!(lhs == rhs))
          return Outcome::fail({{"word", to_json(w)},
                                {"arc", {d.opener_block, d.closer_block}},
                                {"delete_after", to_json(lhs)},
                                {"delete_before", to_json(rhs)}});
      }
    }
    return Outcome{};
  });
}

// --- standardization ------------------------------------------------------

bool has_no_double_arcs(const MultiKrewerasWord& w) { return double_arcs(w).empty(); }

// Block (1-based) of each position of a standardized word.
std::vector<int> position_blocks(const std::vector<int>& sizes) {
  std::vector<int> out{0};
  for (std::size_t i = 0; i < sizes.size(); ++i) out.insert(out.end(), sizes[i], static_cast<int>(i) + 1);
  return out;
}

void build_standardization(std::vector<Task>& t, const SuiteOptions& o) {
  add_family(t, "std-law", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    for (const auto& w : enumerate_words(ell, q, limit)) {
      if (!has_no_double_arcs(w)) continue;
      const int k = w.block(1).size();
      auto rhs = standardize(w).word;
      for (int i = 0; i < k; ++i) rhs = promote_kreweras(rhs);
      const auto lhs = standardize(promote_word(w)).word;
      if (!(lhs == rhs))
        return Outcome::fail({{"word", to_json(w)}, {"std_pro", lhs.str()}, {"pro_k_std", rhs.str()}});
    }
    return Outcome{};
  });
  add_family(t, "std-valid-nesting", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    for (const auto& w : enumerate_words(ell, q, limit)) {
      if (!has_no_double_arcs(w)) continue;
      const auto s = standardize(w);
      const auto blocks = position_blocks(s.block_sizes);
      const auto d = bump_diagram(s.word);
      std::vector<Arc> arcs = d.arcs_b;
      arcs.insert(arcs.end(), d.arcs_c.begin(), d.arcs_c.end());
      for (const auto& x : arcs)
        for (const auto& y : arcs) {
          if (x == y || blocks[x.close] != blocks[y.close]) continue;
          const bool nested = (x.open < y.open && y.close < x.close) || (y.open < x.open && x.close < y.close);
          if (!nested) return Outcome::fail({{"word", to_json(w)}, {"std", s.word.str()}});
        }
    }
    return Outcome{};
  });
  add_family(t, "closer-order-unique", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    // Transposing two adjacent same-block closers of different colors,
    // arcs kept, always creates a crossing.
    for (const auto& w : enumerate_words(ell, q, limit)) {
      if (!has_no_double_arcs(w)) continue;
      const auto s = standardize(w);
      const auto blocks = position_blocks(s.block_sizes);
      const auto d = bump_diagram(s.word);
      std::vector<Arc> closing_at(s.word.size() + 2);
      for (const auto& a : d.arcs_b) closing_at[a.close] = a;
      for (const auto& a : d.arcs_c) closing_at[a.close] = a;
      for (int p = 1; p < static_cast<int>(s.word.size()); ++p) {
        const Letter x = s.word[p - 1];
        const Letter y = s.word[p];
        if (x == Letter::A || y == Letter::A || x == y || blocks[p] != blocks[p + 1]) continue;
        const Arc moved_x{closing_at[p].open, p + 1};
        const Arc moved_y{closing_at[p + 1].open, p};
        if (!arcs_cross(moved_x, moved_y))
          return Outcome::fail({{"word", to_json(w)}, {"position", p}});
      }
    }
    return Outcome{};
  });
  add_family(t, "destandardize-roundtrip", kWordGrid, Second::kQ, o,
             [](int ell, int q, std::size_t limit) {
               for (const auto& w : enumerate_words(ell, q, limit)) {
                 if (!has_no_double_arcs(w)) continue;
                 const auto s = standardize(w);
                 if (!(destandardize(s.word, s.block_sizes) == w)) return Outcome::fail({{"word", to_json(w)}});
               }
               return Outcome{};
             });
  add_family(t, "word-pro-q-is-bc-swap", kWordGrid, Second::kQ, o,
             [](int ell, int q, std::size_t limit) {
               for (const auto& w : enumerate_words(ell, q, limit)) {
                 auto x = w;
                 for (int i = 0; i < q; ++i) x = promote_word(x);
                 if (!(x == swap_bc(w))) return Outcome::fail({{"word", to_json(w)}, {"pro_q", to_json(x)}});
               }
               return Outcome{};
             });
}

// --- classical ------------------------------------------------------------

// 6n, except that V x [1] has just two extensions, swapped by promotion.
std::uint64_t expected_linext_order(int n) { return n == 1 ? 2 : static_cast<std::uint64_t>(6 * n); }

void build_classical(std::vector<Task>& t, const SuiteOptions& o) {
  add_family(t, "linext-order", {1, 3, 0, 0}, Second::kNone, o, [](int n, int, std::size_t limit) {
    const auto exts = linear_extensions(v_times_chain(n), limit);
    const auto order = lcm_of(orbit_sizes(image_indices(exts, promote_linext)));
    if (order != expected_linext_order(n)) return Outcome::fail({{"order", order}});
    return Outcome{};
  });
  add_family(t, "linext-count-matches-formula", {1, 4, 0, 0}, Second::kNone, o,
             [](int n, int, std::size_t limit) {
               const auto exts = linear_extensions(v_times_chain(n), limit);
               const auto words = kreweras_words(n, limit);
               if (exts.size() != kreweras_count(n) || words.size() != kreweras_count(n))
                 return Outcome::fail({{"extensions", exts.size()},
                                       {"words", words.size()},
                                       {"formula", kreweras_count(n)}});
               return Outcome{};
             });
  add_family(t, "kreweras-intertwining", {1, 3, 0, 0}, Second::kNone, o,
             [](int n, int, std::size_t limit) {
               for (const auto& e : linear_extensions(v_times_chain(n), limit)) {
                 const auto w = to_kreweras(e);
                 if (!(from_kreweras(w) == e) || !(to_kreweras(promote_linext(e)) == promote_kreweras(w)))
                   return Outcome::fail({{"extension", to_json(e)}, {"word", w.str()}});
               }
               return Outcome{};
             });
  add_family(t, "kreweras-order", {1, 3, 0, 0}, Second::kNone, o, [](int n, int, std::size_t limit) {
    const auto words = kreweras_words(n, limit);
    const auto order = lcm_of(orbit_sizes(image_indices(words, promote_kreweras)));
    if (order != expected_linext_order(n)) return Outcome::fail({{"order", order}});
    return Outcome{};
  });
}

// --- equivariance ---------------------------------------------------------

void build_equivariance(std::vector<Task>& t, const SuiteOptions& o) {
  add_family(t, "orbit-multisets-agree", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    const auto labelings = enumerate_labelings(ell, q, limit);
    const auto pro = orbit_sizes(image_indices(labelings, promote_pstrict));
    const auto parts = enumerate_ppartitions(v_times_chain(q - 2), ell, limit);
    const auto tog = orbit_sizes(image_indices(parts, [q](const PPartition& f) { return togpro(f, q); }));
    const auto row = orbit_sizes(image_indices(parts, [](const PPartition& f) { return rowmotion(f); }));
    if (pro != tog || pro != row)
      return Outcome::fail({{"pro", sizes_json(pro)}, {"togpro", sizes_json(tog)}, {"row", sizes_json(row)}});
    return Outcome{};
  });
  add_family(t, "flip-commutes", kWordGrid, Second::kQ, o, [](int ell, int q, std::size_t limit) {
    const auto poset = v_times_chain(q - 2);
    const auto psi = flip(poset);
    const auto psi_inv = psi.inverse();
    for (const auto& f : enumerate_ppartitions(poset, ell, limit)) {
      const auto g = apply_automorphism(psi, f);
      bool ok = apply_automorphism(psi, rowmotion(f)) == rowmotion(g) &&
                apply_automorphism(psi, togpro(f, q)) == togpro(g, q);
      for (int e = 0; e < static_cast<int>(poset->size()) && ok; ++e)
        ok = apply_automorphism(psi, toggle(e, f)) == toggle(psi_inv(e), g);
      if (!ok) return Outcome::fail({{"ppartition", to_json(f)}});
    }
    return Outcome{};
  });
}

// --- figures --------------------------------------------------------------

PStrictLabeling::Fibers fibers_of(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  return {std::move(a), std::move(b), std::move(c)};
}

LinearExtension extension_from_fibers(const PStrictLabeling::Fibers& fibers) {
  std::vector<int> labels;
  for (const auto& f : fibers) labels.insert(labels.end(), f.begin(), f.end());
  return LinearExtension(v_times_chain(static_cast<int>(fibers[0].size())), std::move(labels));
}

template <class T>
Outcome golden(const T& expected, const T& actual) {
  if (expected == actual) return {};
  return Outcome::fail({{"expected", expected}, {"actual", actual}});
}

Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const auto& a : arcs) out.push_back({a.open, a.close});
  return out;
}

Json layers_json(const std::vector<VLayer>& layers) {
  Json out = Json::array();
  for (const auto& l : layers) out.push_back({l.a, l.b, l.c});
  return out;
}

void build_figures(std::vector<Task>& t, const SuiteOptions&) {
  const auto fig1 = fibers_of({1, 3, 6, 7, 11, 14}, {4, 5, 8, 13, 15, 18}, {2, 9, 10, 12, 16, 17});
  const auto fig1_pro = fibers_of({1, 2, 5, 6, 10, 13}, {3, 4, 7, 12, 14, 17}, {8, 9, 11, 15, 16, 18});
  const std::string krew = "ACABBAABCCACBABCCB";
  const std::string krew_pro = "AABBAABCCACBABCCBC";
  const std::string word69 = "A|CA|BBAA|BCCA|C|BA|B|CC|B";
  const std::string word69_pro = "AA|BBAA|BCCA|C|BA|B|CC|B|C";
  const auto labeling69 = fibers_of({1, 2, 3, 3, 4, 6}, {3, 3, 4, 6, 7, 9}, {2, 4, 4, 5, 8, 8});
  auto add = [&t](std::string id, std::function<Outcome()> fn) {
    t.push_back({std::move(id), Json::object(), std::move(fn)});
  };

  add("linext-promotion", [=] {
    return golden(to_json(extension_from_fibers(fig1_pro)),
                  to_json(promote_linext(extension_from_fibers(fig1))));
  });
  add("kreweras-of-extension", [=] {
    return golden(krew, to_kreweras(extension_from_fibers(fig1)).str());
  });
  add("kreweras-promotion", [=] {
    return golden(krew_pro, promote_kreweras(KrewerasWord::parse(krew)).str());
  });
  add("kreweras-bump-diagram", [=] {
    const auto d = bump_diagram(KrewerasWord::parse(krew));
    Json expected = {{"b", arcs_json({{1, 5}, {3, 4}, {6, 18}, {7, 8}, {11, 13}, {14, 15}})},
                     {"c", arcs_json({{1, 2}, {3, 17}, {6, 10}, {7, 9}, {11, 12}, {14, 16}})}};
    Json actual = {{"b", arcs_json(d.arcs_b)}, {"c", arcs_json(d.arcs_c)}};
    return golden(expected, actual);
  });
  add("word-of-labeling", [=] {
    return golden(word69, word_of_labeling(PStrictLabeling(6, 9, labeling69)).str());
  });
  add("layer-decomposition", [=] {
    return golden(layers_json({{1, 3, 2}, {2, 3, 8}, {3, 4, 4}, {3, 9, 4}, {4, 6, 5}, {6, 7, 8}}),
                  layers_json(layer_decomposition(MultiKrewerasWord::parse(word69))));
  });
  add("promoted-layers", [=] {
    auto layers = layer_decomposition(MultiKrewerasWord::parse(word69));
    for (auto& l : layers) l = promote_layer(l, 9);
    std::sort(layers.begin(), layers.end());
    return golden(layers_json({{1, 2, 7}, {1, 2, 9}, {2, 3, 3}, {2, 8, 3}, {3, 5, 4}, {5, 6, 7}}),
                  layers_json(layers));
  });
  add("promoted-word", [=] {
    return golden(word69_pro, promote_word(MultiKrewerasWord::parse(word69)).str());
  });
  add("promoted-labeling", [=] {
    const auto f = labeling_of_word(MultiKrewerasWord::parse(word69));
    return golden(word69_pro, word_of_labeling(promote_pstrict(f)).str());
  });
  add("double-arcs", [=] {
    Json actual = Json::array();
    for (const auto& d : double_arcs(MultiKrewerasWord::parse(word69)))
      actual.push_back({d.opener_block, d.closer_block});
    return golden(Json::array({{3, 4}}), actual);
  });
  add("standardization", [] {
    const auto a = standardize(MultiKrewerasWord::parse("\xE2\x88\x85|AA|CC|BB"));
    const auto b = standardize(MultiKrewerasWord::parse("A|A|CC|BB"));
    Json expected = {{"AACCBB", {0, 2, 2, 2}}, {"AACCBB", {1, 1, 2, 2}}};
    Json actual = {{a.word.str(), a.block_sizes}, {b.word.str(), b.block_sizes}};
    return golden(expected, actual);
  });
}

// --------------------------------------------------------------------------

using Builder = void (*)(std::vector<Task>&, const SuiteOptions&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> all = {
      {"main", build_main},
      {"rowmotion", build_rowmotion},
      {"layers", build_layers},
      {"doublearcs", build_doublearcs},
      {"standardization", build_standardization},
      {"classical", build_classical},
      {"equivariance", build_equivariance},
      {"figures", build_figures},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : builders()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, build] : builders()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    const std::size_t first = tasks.size();
    build(tasks, options);
    for (std::size_t i = first; i < tasks.size(); ++i) tasks[i].id = name + "/" + tasks[i].id;
  }
  if (!found) throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");

  std::vector<ClaimResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        auto outcome = tasks[i].run();
        results[i] = {tasks[i].id, tasks[i].params, outcome.pass, std::move(outcome.counterexample)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n_threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationReport report;
  report.suite = suite;
  report.claims = std::move(results);
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

const std::vector<std::string>& action_names() {
  static const std::vector<std::string> names = {"pro-linext", "pro-kreweras", "pro-pstrict", "row",
                                                  "togpro"};
  return names;
}

OrbitReport orbit_report(const std::string& action, int ell, int q, std::size_t max_elements) {
  const Json params = {{"ell", ell}, {"q", q}};
  if (action == "pro-linext") {
    auto r = orbit_decomposition(action, params, linear_extensions(v_times_chain(ell), max_elements),
                                 promote_linext);
    r.checks["order_divides_6n"] = (6 * static_cast<std::uint64_t>(ell)) % r.order == 0;
    return r;
  }
  if (action == "pro-kreweras") {
    auto r = orbit_decomposition(action, params, kreweras_words(ell, max_elements), promote_kreweras);
    r.checks["order_divides_6n"] = (6 * static_cast<std::uint64_t>(ell)) % r.order == 0;
    return r;
  }
  if (action == "pro-pstrict") {
    const auto elems = enumerate_labelings(ell, q, max_elements);
    auto r = orbit_decomposition(action, params, elems, promote_pstrict);
    const auto image = image_indices(elems, promote_pstrict);
    bool swap = true;
    for (std::size_t i = 0; i < elems.size() && swap; ++i)
      swap = elems[power_of(image, i, q)] == swap_bc(elems[i]);
    r.checks["order_divides_2q"] = (2 * static_cast<std::uint64_t>(q)) % r.order == 0;
    r.checks["pro_q_is_bc_swap"] = swap;
    return r;
  }
  if (action == "row" || action == "togpro") {
    if (q < 3) throw Error(ErrorCode::kInvalidArgument, action + " needs q >= 3");
    const auto poset = v_times_chain(q - 2);
    const auto elems = enumerate_ppartitions(poset, ell, max_elements);
    std::function<PPartition(const PPartition&)> act;
    if (action == "row") act = [](const PPartition& f) { return rowmotion(f); };
    else act = [q](const PPartition& f) { return togpro(f, q); };
    auto r = orbit_decomposition(action, params, elems, act);
    const auto image = image_indices(elems, act);
    const auto psi = flip(poset);
    bool is_flip = true;
    for (std::size_t i = 0; i < elems.size() && is_flip; ++i)
      is_flip = elems[power_of(image, i, q)] == apply_automorphism(psi, elems[i]);
    r.checks["order_divides_2q"] = (2 * static_cast<std::uint64_t>(q)) % r.order == 0;
    r.checks[action + "_q_is_flip"] = is_flip;
    return r;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown action '" + action + "'");
}

}  // namespace vdyn
