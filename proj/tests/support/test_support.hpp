#pragma once

#include <optional>
#include <random>
#include <vector>

#include "dplane/curves.hpp"
#include "dplane/lattice.hpp"
#include "dplane/maps.hpp"

namespace dplane::testing {

// Independent ground truth for the search oracle: enumerates every one of
// the |X|^|X| self-maps with an odometer, filters the continuous ones, and
// reports whether any survivor has no approximate fixed point.
bool brute_force_lacks_afpp(const PointSet& points, Adjacency kind);

// Every kind-connected set with 1..max_size points, one representative per
// translation class (bounding box corner pinned to the origin).
std::vector<PointSet> connected_sets_up_to(Adjacency kind, std::size_t max_size);

// Connected-set-image form of continuity, by enumerating all subsets of the
// domain. Only usable for domains of at most 16 points.
bool continuous_by_subset_images(const PointMap& f);

// Extreme-point test by exhaustive Caratheodory search: a point is a hull
// vertex exactly when it is not inside or on a triangle/segment spanned by
// the other points.
PointSet brute_force_hull_vertices(const PointSet& points);

// Random closed self-avoiding walk with no chords; nullopt when no curve of
// the requested length was found within the attempt budget.
std::optional<Curve> random_simple_closed_curve(std::mt19937& rng, Adjacency kind, int length);

// First simple closed curve of the exact length in deterministic depth-first
// order, or nullopt when no such curve exists at all (the search is
// exhaustive over chord-free walks from the origin).
std::optional<Curve> first_simple_closed_curve(Adjacency kind, int length);

// Random digitally convex disk inside [0,8]^2 (axis-aligned rectangle with
// diagonal corner cuts), or nullopt when the sample degenerates.
std::optional<PointSet> random_convex_disk(std::mt19937& rng);

// Random rectangle containing x, still inside [0,8]^2.
PointSet random_rect_containing(std::mt19937& rng, const PointSet& x);

// Random continuous self-map, built point by point in breadth-first order.
PointMap random_continuous_self_map(std::mt19937& rng, const DigitalImage& x);

}  // namespace dplane::testing
