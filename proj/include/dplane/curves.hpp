#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dplane/lattice.hpp"

namespace dplane {

// A cyclically ordered sequence of distinct points; consecutive points
// (including last-to-first) are adjacent under `kind`.
struct Curve {
    std::vector<Point> points;
    Adjacency kind = Adjacency::c2;

    std::size_t size() const { return points.size(); }
    PointSet point_set() const;
};

bool is_closed_curve(std::span<const Point> seq, Adjacency kind);

// Minimum length for a simple closed curve to enclose anything: 8 under c1,
// 4 under c2.
std::size_t min_simple_closed_size(Adjacency kind);

// Closed, meets the minimum length for its kind, and the only adjacencies
// among its points are the cyclically consecutive ones.
bool is_simple_closed_curve(const Curve& s);

struct JordanPartition {
    PointSet interior;         // the finite dual component
    PointSet exterior_sample;  // infinite dual component restricted to the padded box
    Adjacency dual_kind;
};

// Splits Z^2 minus a simple closed curve into its two components under the
// dual adjacency. Throws precondition_error for non-simple or undersized
// curves, internal_error if the component count is not two.
JordanPartition jordan_components(const Curve& s);

// The finite c1-component of the complement of a c2-closed curve, when the
// complement has exactly two c1-components (one finite, one infinite).
std::optional<PointSet> bounding_curve_interior(const PointSet& curve_points);

// Canonical boundary trace: Moore-neighbor walk over x starting at the
// lexicographically smallest boundary point, proceeding clockwise (y up).
// The result is re-verified: a c2-closed curve S contained in x whose
// complement has exactly two c1-components and with x inside S plus its
// interior. Throws error("no canonical bounding curve...") when the trace
// revisits a point, fails to close, or fails verification; throws
// precondition_error when x is empty or not c2-connected.
Curve trace_bounding_curve(const PointSet& x);

// When d equals S plus the interior of S for some c2-closed curve S, returns
// that curve (the canonical trace); otherwise nullopt.
std::optional<Curve> disk_certificate(const PointSet& d);

struct BoundingCurveSet {
    std::vector<Curve> curves;  // first curve is the outer one
};

// Checks the bounding-curve-set conditions: curves are c2-closed, contained
// in x, pairwise disjoint; x lies in the first curve plus its interior; each
// later curve bounds a digital disk; the complement pieces (outer exterior
// and hole interiors) are pairwise non-adjacent under both adjacencies; and
// the complement of x is exactly the union of those pieces. On failure the
// optional out-parameter receives the first violated condition.
bool is_bounding_curve_set(const PointSet& x, const BoundingCurveSet& candidate,
                           std::string* why = nullptr);

// One canonical bounding curve set: the outer trace of x plus, for each
// finite c1-component H of the complement, the trace of H together with its
// c1-shell in x. Verified through is_bounding_curve_set before returning;
// throws error if no canonical set exists.
BoundingCurveSet canonical_bounding_curves(const PointSet& x);

}  // namespace dplane
