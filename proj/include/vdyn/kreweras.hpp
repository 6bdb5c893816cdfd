#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdyn/poset.hpp"

namespace vdyn {

enum class Letter : std::uint8_t { A = 0, B = 1, C = 2 };

char to_char(Letter letter);
Letter letter_from_char(char c);

// Classical Bender-Knuth involutions and promotion on e(P).

/// t_i: swaps labels i and i+1 when their elements are incomparable.
LinearExtension bender_knuth(int i, const LinearExtension& ext);
/// Pro = t_{m-1} ... t_1.
LinearExtension promote_linext(const LinearExtension& ext);

/// Word over {A,B,C} with n of each letter, every prefix having at least as
/// many A's as B's and as C's.
class KrewerasWord {
 public:
  KrewerasWord() = default;
  explicit KrewerasWord(std::vector<Letter> letters);
  static KrewerasWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int n() const { return static_cast<int>(letters_.size() / 3); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string str() const;

  auto operator<=>(const KrewerasWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Checks the Kreweras conditions without constructing a word.
bool is_kreweras(std::span<const Letter> letters);

/// Every Kreweras word of length 3n in lexicographic order (A < B < C).
std::vector<KrewerasWord> kreweras_words(int n, std::size_t limit = 5'000'000);

KrewerasWord to_kreweras(const LinearExtension& ext);
LinearExtension from_kreweras(const KrewerasWord& word);

/// Smallest 1-based index whose prefix balances A with B or A with C.
int promotion_index(const KrewerasWord& word);
KrewerasWord promote_kreweras(const KrewerasWord& word);

struct Arc {
  int open = 0;
  int close = 0;
  auto operator<=>(const Arc&) const = default;
};

/// {(i,j),(k,l)} cross when i <= k < j < l (in either order).
bool arcs_cross(const Arc& x, const Arc& y);
bool is_noncrossing(std::span<const Arc> arcs);

struct BumpDiagram {
  int length = 0;
  std::vector<Arc> arcs_b;  // 1-based positions, sorted
  std::vector<Arc> arcs_c;
};

BumpDiagram bump_diagram(const KrewerasWord& word);

}  // namespace vdyn
