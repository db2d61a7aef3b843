#pragma once

#include <string>

#include "wil/io.hpp"

namespace wil {

struct SvgOptions {
  double canvas = 800.0;  // square canvas edge, pixels
  double margin = 20.0;
};

// Items, the mass center marker and the enveloping circle about the mass
// center. The view is centered on the mass center with +y pointing up.
std::string render_svg(const LayoutFile& layout, const SvgOptions& options = {});

}  // namespace wil
