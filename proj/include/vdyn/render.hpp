#pragma once

#include <string>

#include "vdyn/kreweras.hpp"
#include "vdyn/multikreweras.hpp"

namespace vdyn {

enum class RenderFormat { kAscii, kSvg };
RenderFormat parse_render_format(const std::string& name);

/// Bump diagram of a word. B-arcs are solid blue, C-arcs dashed crimson;
/// blocks of a multi word are separated and numbered, and every double arc
/// is annotated. Output depends only on the input.
std::string render_diagram(const MultiKrewerasWord& w, RenderFormat format);
std::string render_diagram(const KrewerasWord& w, RenderFormat format);

}  // namespace vdyn
