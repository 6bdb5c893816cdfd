#include "vdyn/render.hpp"

#include <algorithm>
#include <sstream>

#include "vdyn/error.hpp"

namespace vdyn {

namespace {

// Common input of both renderers. block == 0 means "no blocks".
struct Diagram {
  std::vector<Letter> letters;
  std::vector<int> blocks;
  std::vector<Arc> arcs_b;
  std::vector<Arc> arcs_c;
  std::vector<std::pair<int, int>> doubles;  // (A slot, closer block)
  int q = 0;
};

Diagram multi_diagram(const MultiKrewerasWord& w) {
  const auto g = generalized_bump_diagram(w);
  Diagram d;
  for (const auto& s : g.slots) {
    d.letters.push_back(s.letter);
    d.blocks.push_back(s.block);
  }
  d.arcs_b = g.arcs_b;
  d.arcs_c = g.arcs_c;
  for (int i : g.double_arcs) d.doubles.emplace_back(g.openers[i].slot, g.openers[i].b_block);
  d.q = w.q();
  return d;
}

Diagram kreweras_diagram(const KrewerasWord& w) {
  const auto b = bump_diagram(w);
  Diagram d;
  d.letters = w.letters();
  d.blocks.assign(w.size(), 0);
  d.arcs_b = b.arcs_b;
  d.arcs_c = b.arcs_c;
  return d;
}

struct DrawnArc {
  Arc arc;
  char color;
};

// Longest arcs first so inner arcs sit closest to the letters.
std::vector<DrawnArc> drawing_order(const Diagram& d) {
  std::vector<DrawnArc> arcs;
  for (const auto& a : d.arcs_b) arcs.push_back({a, 'B'});
  for (const auto& a : d.arcs_c) arcs.push_back({a, 'C'});
  std::stable_sort(arcs.begin(), arcs.end(), [](const DrawnArc& x, const DrawnArc& y) {
    const int lx = x.arc.close - x.arc.open;
    const int ly = y.arc.close - y.arc.open;
    if (lx != ly) return lx > ly;
    if (x.arc.open != y.arc.open) return x.arc.open < y.arc.open;
    return x.color < y.color;
  });
  return arcs;
}

std::string ascii(const Diagram& d) {
  const std::size_t n = d.letters.size();
  std::vector<std::size_t> x(n);
  std::string letters_row = "  ";
  for (std::size_t s = 0; s < n; ++s) {
    if (s > 0) letters_row += d.blocks[s] != d.blocks[s - 1] ? " | " : " ";
    x[s] = letters_row.size();
    letters_row += to_char(d.letters[s]);
  }
  // Block numbers under each block's first slot.
  std::string index_row;
  if (d.q > 0) {
    index_row.assign(letters_row.size() + 4, ' ');
    for (std::size_t s = 0; s < n; ++s)
      if (s == 0 || d.blocks[s] != d.blocks[s - 1]) {
        const std::string num = std::to_string(d.blocks[s]);
        index_row.replace(x[s], num.size(), num);
      }
    while (!index_row.empty() && index_row.back() == ' ') index_row.pop_back();
  }

  std::ostringstream os;
  for (const auto& [arc, color] : drawing_order(d)) {
    std::string row(letters_row.size(), ' ');
    row[0] = color;
    const std::size_t from = x[arc.open - 1];
    const std::size_t to = x[arc.close - 1];
    for (std::size_t i = from + 1; i < to; ++i) row[i] = color == 'B' ? '-' : '.';
    row[from] = '+';
    row[to] = '+';
    while (row.back() == ' ') row.pop_back();
    os << row << '\n';
  }
  os << letters_row << '\n';
  if (d.q > 0) os << index_row << '\n';
  os << '\n';
  for (const auto& a : d.arcs_b) os << "B " << a.open << "->" << a.close << '\n';
  for (const auto& a : d.arcs_c) os << "C " << a.open << "->" << a.close << '\n';
  for (const auto& [slot, blk] : d.doubles)
    os << "double arc: A at slot " << slot << ", block " << d.blocks[slot - 1] << " -> block " << blk << "\n";
  return os.str();
}

constexpr int kStep = 32;
constexpr int kBlockGap = 16;
constexpr int kMargin = 24;

std::string svg(const Diagram& d) {
  const std::size_t n = d.letters.size();
  std::vector<int> x(n);
  int cursor = kMargin;
  for (std::size_t s = 0; s < n; ++s) {
    if (s > 0) cursor += kStep + (d.blocks[s] != d.blocks[s - 1] ? kBlockGap : 0);
    x[s] = cursor;
  }
  const int width = cursor + kMargin;
  int max_span = 0;
  for (const auto& a : drawing_order(d)) max_span = std::max(max_span, x[a.arc.close - 1] - x[a.arc.open - 1]);
  const int baseline = kMargin + max_span / 2 + 8;
  const int height = baseline + 48;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<style>.arc-b{stroke:#1f4fd1;fill:none;stroke-width:1.5}"
     << ".arc-c{stroke:crimson;fill:none;stroke-width:1.5;stroke-dasharray:5 3}"
     << ".block-sep{stroke:#999}text{font-family:monospace;font-size:14px;text-anchor:middle}</style>\n";

  for (const auto& [arc, color] : drawing_order(d)) {
    const int x1 = x[arc.open - 1];
    const int x2 = x[arc.close - 1];
    const int r = (x2 - x1) / 2;
    os << "<path class=\"" << (color == 'B' ? "arc-b" : "arc-c") << "\" d=\"M " << x1 << ' ' << baseline
       << " A " << r << ' ' << r << " 0 0 1 " << x2 << ' ' << baseline << "\"/>\n";
  }
  for (std::size_t s = 0; s < n; ++s)
    os << "<text x=\"" << x[s] << "\" y=\"" << baseline + 18 << "\">" << to_char(d.letters[s]) << "</text>\n";
  if (d.q > 0) {
    for (std::size_t s = 0; s < n; ++s) {
      if (s > 0 && d.blocks[s] == d.blocks[s - 1]) continue;
      if (s > 0) {
        const int sep = (x[s - 1] + x[s]) / 2;
        os << "<line class=\"block-sep\" x1=\"" << sep << "\" y1=\"" << baseline - 4 << "\" x2=\"" << sep
           << "\" y2=\"" << baseline + 40 << "\"/>\n";
      }
      os << "<text class=\"block-index\" x=\"" << x[s] << "\" y=\"" << baseline + 38 << "\">" << d.blocks[s]
         << "</text>\n";
    }
  }
  for (const auto& [slot, blk] : d.doubles)
    os << "<circle class=\"double-arc\" cx=\"" << x[slot - 1] << "\" cy=\"" << baseline << "\" r=\"4\">"
       << "<title>double arc: block " << d.blocks[slot - 1] << " to block " << blk << "</title></circle>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render(const Diagram& d, RenderFormat format) {
  return format == RenderFormat::kAscii ? ascii(d) : svg(d);
}

}  // namespace

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::kAscii;
  if (name == "svg") return RenderFormat::kSvg;
  throw Error(ErrorCode::kInvalidArgument, "unknown render format '" + name + "'");
}

std::string render_diagram(const MultiKrewerasWord& w, RenderFormat format) {
  return render(multi_diagram(w), format);
}

std::string render_diagram(const KrewerasWord& w, RenderFormat format) {
  return render(kreweras_diagram(w), format);
}

}  // namespace vdyn
