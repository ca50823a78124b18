#pragma once

#include <string>
#include <vector>

#include "prelam/instance.hpp"

namespace prelam {

/// Display-only rendering; nothing here feeds back into any computation.
struct RenderSpec {
  bool poincare = false;  // hyperbolic geodesics instead of straight chords
  bool show_chords = true;
  bool show_acc = true;  // accumulation shading along accumulated sides
  std::vector<std::string> highlight_regions;
  std::string linkage_region;  // region id for the linkage-graph overlay
  bool show_crossings = false;
  bool show_singular = false;
};

std::string render_svg(const LamInstance& instance, const RenderSpec& spec);

}  // namespace prelam
