#pragma once

#include <string>

#include "dplane/convexity.hpp"
#include "dplane/curves.hpp"
#include "dplane/lattice.hpp"
#include "dplane/maps.hpp"

namespace dplane {

struct SvgOverlays {
    const PointMap* arrows = nullptr;  // drawn from cell center to cell center
    const Curve* curve = nullptr;      // highlighted cells
    const Hull* hull = nullptr;        // polygon through cell centers
};

// Deterministic vector diagram: one unit square per point, plus optional
// overlays. Identical input gives byte-identical output.
std::string render_svg(const PointSet& x, const SvgOverlays& overlays = {});

}  // namespace dplane
