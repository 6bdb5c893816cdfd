#include "vdyn/multikreweras.hpp"

#include <algorithm>
#include <numeric>

#include "vdyn/error.hpp"

namespace vdyn {

namespace {

constexpr std::string_view kEmptyBlock = "\xE2\x88\x85";  // ∅

void check_word(const std::vector<BlockCounts>& blocks, int ell, int q) {
  if (ell < 0 || q < 2)
    throw Error(ErrorCode::kInvalidArgument, "word needs ell >= 0 and q >= 2");
  if (static_cast<int>(blocks.size()) != q)
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(q) + " blocks, got " + std::to_string(blocks.size()));
  BlockCounts total;
  for (const auto& blk : blocks) {
    if (blk.a < 0 || blk.b < 0 || blk.c < 0)
      throw Error(ErrorCode::kInvalidArgument, "negative letter count");
    total.a += blk.a;
    total.b += blk.b;
    total.c += blk.c;
  }
  if (total.a != ell || total.b != ell || total.c != ell)
    throw Error(ErrorCode::kCountMismatch,
                "letter counts (" + std::to_string(total.a) + "," + std::to_string(total.b) +
                    "," + std::to_string(total.c) + ") differ from ell = " + std::to_string(ell));
  int a_before = 0;
  int b_through = 0;
  int c_through = 0;
  for (int i = 0; i < q; ++i) {
    b_through += blocks[i].b;
    c_through += blocks[i].c;
    if (b_through > a_before || c_through > a_before)
      throw Error(ErrorCode::kPrefixViolation,
                  "block " + std::to_string(i + 1) + " closes more letters than earlier A's");
    a_before += blocks[i].a;
  }
}

}  // namespace

MultiKrewerasWord::MultiKrewerasWord(int ell, int q, std::vector<BlockCounts> blocks)
    : ell_(ell), blocks_(std::move(blocks)) {
  check_word(blocks_, ell, q);
}

MultiKrewerasWord validate_word(std::vector<BlockCounts> blocks, int ell, int q) {
  return MultiKrewerasWord(ell, q, std::move(blocks));
}

MultiKrewerasWord MultiKrewerasWord::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  if (!text.empty() && text.front() == '[') {
    // Bracketed form: [A][CA][BBAA]...
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '[') throw Error(ErrorCode::kParse, "expected '['");
      auto close = text.find(']', pos);
      if (close == std::string_view::npos) throw Error(ErrorCode::kParse, "missing ']'");
      tokens.push_back(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    }
  } else {
    std::size_t start = 0;
    while (true) {
      auto bar = text.find('|', start);
      tokens.push_back(text.substr(start, bar == std::string_view::npos ? bar : bar - start));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
  }
  std::vector<BlockCounts> blocks;
  for (auto tok : tokens) {
    BlockCounts blk;
    if (tok != kEmptyBlock && tok != "-") {
      for (char c : tok) {
        if (c == ' ') continue;
        switch (letter_from_char(c)) {
          case Letter::A: ++blk.a; break;
          case Letter::B: ++blk.b; break;
          case Letter::C: ++blk.c; break;
        }
      }
    }
    blocks.push_back(blk);
  }
  const int ell = std::accumulate(blocks.begin(), blocks.end(), 0,
                                  [](int s, const BlockCounts& b) { return s + b.a; });
  const int q = static_cast<int>(blocks.size());
  return MultiKrewerasWord(ell, q, std::move(blocks));
}

std::string MultiKrewerasWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s += '|';
    const auto& blk = blocks_[i];
    if (blk.size() == 0) {
      s += kEmptyBlock;
      continue;
    }
    s.append(blk.b, 'B');
    s.append(blk.c, 'C');
    s.append(blk.a, 'A');
  }
  return s;
}

MultiKrewerasWord word_of_labeling(const PStrictLabeling& f) {
  std::vector<BlockCounts> blocks(f.q());
  for (int i = 1; i <= f.ell(); ++i) {
    ++blocks[f.at(Letter::A, i) - 1].a;
    ++blocks[f.at(Letter::B, i) - 1].b;
    ++blocks[f.at(Letter::C, i) - 1].c;
  }
  return MultiKrewerasWord(f.ell(), f.q(), std::move(blocks));
}

PStrictLabeling labeling_of_word(const MultiKrewerasWord& w) {
  PStrictLabeling::Fibers fibers;
  for (int i = 1; i <= w.q(); ++i)
    for (Letter p : kLetters)
      fibers[fiber_index(p)].insert(fibers[fiber_index(p)].end(), w.block(i).count(p), i);
  return PStrictLabeling(w.ell(), w.q(), std::move(fibers));
}

std::vector<MultiKrewerasWord> enumerate_words(int ell, int q, std::size_t limit) {
  std::vector<MultiKrewerasWord> out;
  for (const auto& f : enumerate_labelings(ell, q, limit)) out.push_back(word_of_labeling(f));
  std::sort(out.begin(), out.end());
  return out;
}

MultiKrewerasWord tau_word(int k, const MultiKrewerasWord& w) {
  return word_of_labeling(bender_knuth_tau(k, labeling_of_word(w)));
}

MultiKrewerasWord promote_word(const MultiKrewerasWord& w) {
  return word_of_labeling(promote_pstrict(labeling_of_word(w)));
}

MultiKrewerasWord swap_bc(const MultiKrewerasWord& w) {
  auto blocks = w.blocks();
  for (auto& blk : blocks) std::swap(blk.b, blk.c);
  return MultiKrewerasWord(w.ell(), w.q(), std::move(blocks));
}

GeneralizedBumpDiagram generalized_bump_diagram(const MultiKrewerasWord& w) {
  GeneralizedBumpDiagram d;
  d.q = w.q();
  // Stacks hold opener indices; each closer takes the most recent open A.
  std::vector<int> stack_b;
  std::vector<int> stack_c;
  for (int blk = 1; blk <= w.q(); ++blk) {
    const auto& counts = w.block(blk);
    int in_block = 0;
    auto add_slot = [&](Letter letter) {
      d.slots.push_back({blk, in_block++, letter});
      return static_cast<int>(d.slots.size());
    };
    for (int j = 0; j < counts.b; ++j) {
      const int pos = add_slot(Letter::B);
      const int opener = stack_b.back();
      stack_b.pop_back();
      d.openers[opener].b_block = blk;
      d.arcs_b.push_back({d.openers[opener].slot, pos});
    }
    for (int j = 0; j < counts.c; ++j) {
      const int pos = add_slot(Letter::C);
      const int opener = stack_c.back();
      stack_c.pop_back();
      d.openers[opener].c_block = blk;
      d.arcs_c.push_back({d.openers[opener].slot, pos});
    }
    for (int j = 0; j < counts.a; ++j) {
      const int pos = add_slot(Letter::A);
      d.openers.push_back({pos, blk, 0, 0});
      stack_b.push_back(static_cast<int>(d.openers.size()) - 1);
      stack_c.push_back(static_cast<int>(d.openers.size()) - 1);
    }
  }
  std::sort(d.arcs_b.begin(), d.arcs_b.end());
  std::sort(d.arcs_c.begin(), d.arcs_c.end());
  for (int i = 0; i < static_cast<int>(d.openers.size()); ++i)
    if (d.openers[i].is_double()) d.double_arcs.push_back(i);
  return d;
}

std::vector<VLayer> layer_decomposition(const MultiKrewerasWord& w) {
  const auto d = generalized_bump_diagram(w);
  std::vector<VLayer> layers;
  layers.reserve(d.openers.size());
  for (const auto& o : d.openers) layers.push_back({o.block, o.b_block, o.c_block});
  std::sort(layers.begin(), layers.end());
  return layers;
}

MultiKrewerasWord word_of_layers(std::span<const VLayer> layers, int q) {
  std::vector<BlockCounts> blocks(q);
  for (const auto& l : layers) {
    if (l.a < 1 || l.b > q || l.c > q || l.a >= l.b || l.a >= l.c)
      throw Error(ErrorCode::kInvalidArgument, "layer is not a strict labeling of V in [q]");
    ++blocks[l.a - 1].a;
    ++blocks[l.b - 1].b;
    ++blocks[l.c - 1].c;
  }
  return MultiKrewerasWord(static_cast<int>(layers.size()), q, std::move(blocks));
}

VLayer promote_layer(const VLayer& layer, int q) {
  if (layer.a > 1) return {layer.a - 1, layer.b - 1, layer.c - 1};
  if (layer.b == layer.c) return {layer.b - 1, q, q};
  if (layer.b < layer.c) return {layer.b - 1, q, layer.c - 1};
  return {layer.c - 1, layer.b - 1, q};
}

std::vector<DoubleArc> double_arcs(const MultiKrewerasWord& w) {
  const auto d = generalized_bump_diagram(w);
  std::vector<DoubleArc> out;
  for (int i : d.double_arcs) out.push_back({d.openers[i].block, d.openers[i].b_block});
  std::sort(out.begin(), out.end());
  return out;
}

MultiKrewerasWord delete_double_arc(const MultiKrewerasWord& w, const DoubleArc& arc) {
  const auto arcs = double_arcs(w);
  if (!std::binary_search(arcs.begin(), arcs.end(), arc))
    throw Error(ErrorCode::kNotPresent,
                "no double arc (" + std::to_string(arc.opener_block) + "," +
                    std::to_string(arc.closer_block) + ") in " + w.str());
  auto blocks = w.blocks();
  --blocks[arc.opener_block - 1].a;
  --blocks[arc.closer_block - 1].b;
  --blocks[arc.closer_block - 1].c;
  return MultiKrewerasWord(w.ell() - 1, w.q(), std::move(blocks));
}

DoubleArc promote_double_arc(const DoubleArc& arc, int q) {
  if (arc.opener_block > 1) return {arc.opener_block - 1, arc.closer_block - 1};
  return {arc.closer_block - 1, q};
}

std::vector<ShortestArc> shortest_arcs(const MultiKrewerasWord& w) {
  const auto d = generalized_bump_diagram(w);
  std::vector<ShortestArc> out;
  for (const auto& o : d.openers) {
    char color = o.b_block < o.c_block ? 'B' : (o.c_block < o.b_block ? 'C' : '=');
    out.push_back({color, o.block, std::min(o.b_block, o.c_block)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Standardization standardize(const MultiKrewerasWord& w) {
  const auto d = generalized_bump_diagram(w);
  if (!d.double_arcs.empty())
    throw Error(ErrorCode::kHasDoubleArcs, "cannot standardize a word with double arcs: " + w.str());

  struct Closer {
    int opener_slot;
    Letter letter;
  };
  std::vector<std::vector<Closer>> closers(w.q() + 1);
  for (const auto& o : d.openers) {
    closers[o.b_block].push_back({o.slot, Letter::B});
    closers[o.c_block].push_back({o.slot, Letter::C});
  }

  std::vector<Letter> letters;
  letters.reserve(3 * static_cast<std::size_t>(w.ell()));
  Standardization out;
  for (int blk = 1; blk <= w.q(); ++blk) {
    auto& here = closers[blk];
    std::sort(here.begin(), here.end(),
              [](const Closer& x, const Closer& y) { return x.opener_slot > y.opener_slot; });
    for (const auto& c : here) letters.push_back(c.letter);
    letters.insert(letters.end(), w.block(blk).a, Letter::A);
    out.block_sizes.push_back(w.block(blk).size());
  }
  out.word = KrewerasWord(std::move(letters));
  return out;
}

MultiKrewerasWord destandardize(const KrewerasWord& word, std::span<const int> block_sizes) {
  const int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total != static_cast<int>(word.size()))
    throw Error(ErrorCode::kCountMismatch,
                "block sizes sum to " + std::to_string(total) + ", word has length " +
                    std::to_string(word.size()));
  std::vector<BlockCounts> blocks(block_sizes.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    if (block_sizes[i] < 0) throw Error(ErrorCode::kInvalidArgument, "negative block size");
    for (int j = 0; j < block_sizes[i]; ++j, ++pos) {
      switch (word[pos]) {
        case Letter::A: ++blocks[i].a; break;
        case Letter::B: ++blocks[i].b; break;
        case Letter::C: ++blocks[i].c; break;
      }
    }
  }
  return MultiKrewerasWord(word.n(), static_cast<int>(block_sizes.size()), std::move(blocks));
}

}  // namespace vdyn
