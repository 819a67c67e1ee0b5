#pragma once

#include <map>
#include <utility>

#include "dplane/convexity.hpp"
#include "dplane/curves.hpp"
#include "dplane/maps.hpp"

namespace dplane {

// Bookkeeping for the constructed retraction onto a convex disk: the extreme
// columns of the disk, the curve points in those columns, and the vertical
// spans used for clamping.
struct RetractionCertificate {
    int min_col = 0;        // least first coordinate over the disk
    int max_col = 0;        // greatest first coordinate over the disk
    PointSet left;          // curve points in the least column
    PointSet right;         // curve points in the greatest column
    int left_low = 0;       // least second coordinate over `left`
    int left_high = 0;      // greatest second coordinate over `left`
    int right_low = 0;      // least second coordinate over `right`
    int right_high = 0;     // greatest second coordinate over `right`
    Curve curve;            // canonical bounding curve of the disk
};

// Retraction of a finite superset onto a digitally convex disk. The case
// formulas cover all of Z^2, so `map_point` is defined everywhere; `map` is
// the table restricted to the requested domain.
struct DiskRetraction {
    PointMap map;
    RetractionCertificate certificate;
    PointSet disk;
    std::map<int, std::pair<int, int>> column_span;  // per disk column: (bottom, top)

    // Identity on the disk; columns over or under the disk drop vertically
    // onto the curve; columns left or right of the disk clamp onto the curve
    // points of the extreme column.
    Point map_point(Point p) const;
};

// Requires x to be a digitally convex disk contained in y. The resulting map
// fixes x, is continuous under c2, and sends everything outside the disk
// interior onto the bounding curve.
DiskRetraction convex_disk_retraction(const PointSet& x, const PointSet& y);

// Retraction of x onto the bounding curve of a convex disk xp whose interior
// is a hole of x: requires the curve of xp to lie in x and the interior of
// xp to be a c2-component of the complement of x.
PointMap hole_retraction(const PointSet& x, const PointSet& xp);

// Retraction of y onto a single point or a digital segment x by coordinate
// clamping; slanted segments clamp along the diagonal to the Chebyshev
// nearest segment point, ties broken toward the endpoint with the smaller
// first coordinate.
PointMap thin_convex_retraction(const PointSet& x, const PointSet& y);

}  // namespace dplane
