#pragma once

#include "dplane/lattice.hpp"

namespace dplane {

// {p : |p.x - c.x| + |p.y - c.y| <= radius}
PointSet diamond_disk(int radius, Point center = {0, 0});

// All lattice points of the inclusive rectangle [lo.x, hi.x] x [lo.y, hi.y].
PointSet filled_rect(Point lo, Point hi);

// The 7x7 square [-3,3]^2 minus the radius-1 diamond: 44 points around a
// 5-point hole.
PointSet punctured_square_image();

// A convex hexagonal disk whose left column spans rows 2..4 and whose right
// column spans rows 3..6, so the retraction clamps differ on both sides.
struct OctagonExample {
    PointSet disk;
    PointSet rect;  // enclosing rectangle used as the retraction domain
};
OctagonExample octagon_retraction_example();

}  // namespace dplane
