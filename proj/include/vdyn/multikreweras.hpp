#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdyn/kreweras.hpp"
#include "vdyn/pstrict.hpp"

namespace vdyn {

/// Letter counts of one block of a partial multi Kreweras word.
struct BlockCounts {
  int a = 0;
  int b = 0;
  int c = 0;

  int count(Letter p) const { return p == Letter::A ? a : (p == Letter::B ? b : c); }
  int size() const { return a + b + c; }
  auto operator<=>(const BlockCounts&) const = default;
};

/// An (ell, q)-partial multi Kreweras word: q blocks (multisets over
/// {A,B,C}), ell of each letter, and for every i the number of B's (and of
/// C's) in blocks 1..i is at most the number of A's in blocks 1..i-1.
class MultiKrewerasWord {
 public:
  MultiKrewerasWord(int ell, int q, std::vector<BlockCounts> blocks);

  /// Parses "A|CA|BBAA|..." with empty blocks written as "∅" (or nothing).
  /// ell is inferred from the letter counts and q from the block count.
  static MultiKrewerasWord parse(std::string_view text);

  int ell() const { return ell_; }
  int q() const { return static_cast<int>(blocks_.size()); }
  const std::vector<BlockCounts>& blocks() const { return blocks_; }
  /// Block i, 1-based.
  const BlockCounts& block(int i) const { return blocks_.at(i - 1); }

  /// Text form: blocks joined by "|", letters B*C*A*, empty blocks "∅".
  std::string str() const;

  auto operator<=>(const MultiKrewerasWord&) const = default;

 private:
  int ell_;
  std::vector<BlockCounts> blocks_;
};

/// Validates block counts; throws kCountMismatch or kPrefixViolation.
MultiKrewerasWord validate_word(std::vector<BlockCounts> blocks, int ell, int q);

/// The map W^{-1}: block i counts the labels equal to i in each fiber.
MultiKrewerasWord word_of_labeling(const PStrictLabeling& f);
/// The map W.
PStrictLabeling labeling_of_word(const MultiKrewerasWord& w);

std::vector<MultiKrewerasWord> enumerate_words(int ell, int q, std::size_t limit = 5'000'000);

/// tau_k conjugated through W.
MultiKrewerasWord tau_word(int k, const MultiKrewerasWord& w);
/// Promotion conjugated through W.
MultiKrewerasWord promote_word(const MultiKrewerasWord& w);
MultiKrewerasWord swap_bc(const MultiKrewerasWord& w);

/// Generalized bump diagram. Slots follow the canonical linear order:
/// block by block, the block's B's, then C's, then A's.
struct GeneralizedBumpDiagram {
  struct Slot {
    int block = 0;
    int index_in_block = 0;
    Letter letter = Letter::A;
  };
  /// A_i with its block and the blocks of its B- and C-closers.
  struct Opener {
    int slot = 0;  // 1-based slot of the A
    int block = 0;
    int b_block = 0;
    int c_block = 0;
    bool is_double() const { return b_block == c_block; }
  };

  int q = 0;
  std::vector<Slot> slots;
  std::vector<Opener> openers;  // A_1..A_ell in linear order
  std::vector<Arc> arcs_b;      // 1-based slot positions
  std::vector<Arc> arcs_c;
  std::vector<int> double_arcs;  // 0-based indices into openers
};

GeneralizedBumpDiagram generalized_bump_diagram(const MultiKrewerasWord& w);

/// One layer L'_i of the noncrossing layer decomposition: labels of A, B, C.
struct VLayer {
  int a = 0;
  int b = 0;
  int c = 0;
  auto operator<=>(const VLayer&) const = default;
};

/// Multiset of layers, returned sorted.
std::vector<VLayer> layer_decomposition(const MultiKrewerasWord& w);
/// Rebuilds the word whose block counts are the layers' labels.
MultiKrewerasWord word_of_layers(std::span<const VLayer> layers, int q);
/// Promotion of a single V-strict labeling with labels in [q].
VLayer promote_layer(const VLayer& layer, int q);

struct DoubleArc {
  int opener_block = 0;  // k
  int closer_block = 0;  // j
  auto operator<=>(const DoubleArc&) const = default;
};

/// All double arcs as (k, j) block pairs, sorted, with multiplicity.
std::vector<DoubleArc> double_arcs(const MultiKrewerasWord& w);
/// Removes one A from block k and one B and one C from block j.
MultiKrewerasWord delete_double_arc(const MultiKrewerasWord& w, const DoubleArc& arc);
/// Where a double arc lands after one promotion.
DoubleArc promote_double_arc(const DoubleArc& arc, int q);

/// Shortest arc of an A: its closer color ('B', 'C', or '=' for a tie) and
/// the blocks of its endpoints.
struct ShortestArc {
  char color = 'B';
  int opener_block = 0;
  int closer_block = 0;
  auto operator<=>(const ShortestArc&) const = default;
};

std::vector<ShortestArc> shortest_arcs(const MultiKrewerasWord& w);

struct Standardization {
  KrewerasWord word;
  std::vector<int> block_sizes;
  auto operator<=>(const Standardization&) const = default;
};

/// Flattens a double-arc-free word: in each block the closers are ordered by
/// matched opener descending (so arcs ending in one block nest), then A's.
Standardization standardize(const MultiKrewerasWord& w);
/// Puts the j-th letter into the block containing position j.
MultiKrewerasWord destandardize(const KrewerasWord& word, std::span<const int> block_sizes);

}  // namespace vdyn
