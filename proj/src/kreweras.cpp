#include "vdyn/kreweras.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "vdyn/error.hpp"

namespace vdyn {

char to_char(Letter letter) { return "ABC"[static_cast<int>(letter)]; }

Letter letter_from_char(char c) {
  switch (c) {
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    case 'C': return Letter::C;
    default:
      throw Error(ErrorCode::kParse, std::string("unexpected letter '") + c + "'");
  }
}

LinearExtension bender_knuth(int i, const LinearExtension& ext) {
  const int m = static_cast<int>(ext.poset().size());
  if (i < 1 || i > m - 1)
    throw Error(ErrorCode::kIndexOutOfRange, "Bender-Knuth index out of range");
  int x = ext.element_at(i);
  int y = ext.element_at(i + 1);
  if (ext.poset().comparable(x, y)) return ext;
  auto labels = ext.labels();
  std::swap(labels[x], labels[y]);
  return LinearExtension(ext.poset_ptr(), std::move(labels));
}

LinearExtension promote_linext(const LinearExtension& ext) {
  const int m = static_cast<int>(ext.poset().size());
  auto labels = ext.labels();
  auto order = ext.order();
  for (int i = 1; i <= m - 1; ++i) {
    int x = order[i - 1];
    int y = order[i];
    if (ext.poset().comparable(x, y)) continue;
    std::swap(labels[x], labels[y]);
    std::swap(order[i - 1], order[i]);
  }
  return LinearExtension(ext.poset_ptr(), std::move(labels));
}

bool is_kreweras(std::span<const Letter> letters) {
  if (letters.size() % 3 != 0) return false;
  std::array<int, 3> count{};
  for (Letter l : letters) {
    ++count[static_cast<int>(l)];
    if (count[1] > count[0] || count[2] > count[0]) return false;
  }
  return count[0] == count[1] && count[0] == count[2];
}

KrewerasWord::KrewerasWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (!is_kreweras(letters_))
    throw Error(ErrorCode::kInvalidArgument, "not a Kreweras word: " + str());
}

KrewerasWord KrewerasWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c));
  return KrewerasWord(std::move(letters));
}

std::string KrewerasWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

std::vector<KrewerasWord> kreweras_words(int n, std::size_t limit) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 0");
  std::vector<KrewerasWord> out;
  std::vector<Letter> word;
  std::array<int, 3> count{};
  std::function<void()> extend = [&] {
    if (static_cast<int>(word.size()) == 3 * n) {
      if (out.size() >= limit)
        throw Error(ErrorCode::kCeilingExceeded, "Kreweras word count exceeds ceiling");
      out.emplace_back(word);
      return;
    }
    for (int l = 0; l < 3; ++l) {
      if (count[l] == n) continue;
      if (l > 0 && count[l] + 1 > count[0]) continue;
      ++count[l];
      word.push_back(static_cast<Letter>(l));
      extend();
      word.pop_back();
      --count[l];
    }
  };
  extend();
  return out;
}

KrewerasWord to_kreweras(const LinearExtension& ext) {
  if (!v_chain_length(ext.poset()))
    throw Error(ErrorCode::kShapeMismatch, "linear extension is not over V x [n]");
  std::vector<Letter> letters;
  letters.reserve(ext.order().size());
  for (int e : ext.order())
    letters.push_back(letter_from_char(ext.poset().element(e).token.front()));
  return KrewerasWord(std::move(letters));
}

LinearExtension from_kreweras(const KrewerasWord& word) {
  const int n = word.n();
  if (n == 0) return LinearExtension(std::make_shared<const Poset>(std::vector<ElementId>{},
                                                                   std::vector<Poset::Cover>{}),
                                     {});
  auto poset = v_times_chain(n);
  std::vector<int> labels(poset->size(), 0);
  std::array<int, 3> seen{};
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    int p = static_cast<int>(word[pos]);
    int layer = ++seen[p];
    labels[p * n + (layer - 1)] = static_cast<int>(pos) + 1;
  }
  return LinearExtension(std::move(poset), std::move(labels));
}

int promotion_index(const KrewerasWord& word) {
  int ab = 0;
  int ac = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case Letter::A: ++ab; ++ac; break;
      case Letter::B: --ab; break;
      case Letter::C: --ac; break;
    }
    if (ab == 0 || ac == 0) return static_cast<int>(i) + 1;
  }
  return 0;
}

KrewerasWord promote_kreweras(const KrewerasWord& word) {
  if (word.size() == 0) return word;
  const int iota = promotion_index(word);
  const auto& w = word.letters();
  std::vector<Letter> out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + 1, w.begin() + (iota - 1));
  out.push_back(Letter::A);
  out.insert(out.end(), w.begin() + iota, w.end());
  out.push_back(w[iota - 1]);
  return KrewerasWord(std::move(out));
}

bool arcs_cross(const Arc& x, const Arc& y) {
  auto one_way = [](const Arc& p, const Arc& r) {
    return p.open <= r.open && r.open < p.close && p.close < r.close;
  };
  return one_way(x, y) || one_way(y, x);
}

bool is_noncrossing(std::span<const Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j])) return false;
  return true;
}

BumpDiagram bump_diagram(const KrewerasWord& word) {
  BumpDiagram d;
  d.length = static_cast<int>(word.size());
  std::vector<int> stack_b;
  std::vector<int> stack_c;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    switch (word[i]) {
      case Letter::A:
        stack_b.push_back(pos);
        stack_c.push_back(pos);
        break;
      case Letter::B:
        d.arcs_b.push_back({stack_b.back(), pos});
        stack_b.pop_back();
        break;
      case Letter::C:
        d.arcs_c.push_back({stack_c.back(), pos});
        stack_c.pop_back();
        break;
    }
  }
  std::sort(d.arcs_b.begin(), d.arcs_b.end());
  std::sort(d.arcs_c.begin(), d.arcs_c.end());
  return d;
}

}  // namespace vdyn
