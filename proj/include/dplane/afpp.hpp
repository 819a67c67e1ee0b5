#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "dplane/curves.hpp"
#include "dplane/lattice.hpp"
#include "dplane/maps.hpp"

namespace dplane {

// Points x with f(x) equal or adjacent to x under the domain adjacency.
// Throws domain_error when f is not a self-map.
PointSet approximate_fixed_points(const PointMap& f);

enum class AfppOutcome { has_afpp, lacks_afpp, unknown };

std::string to_string(AfppOutcome outcome);

struct AfppVerdict {
    AfppOutcome outcome = AfppOutcome::unknown;
    // Present exactly when the outcome is lacks_afpp: a continuous self-map
    // with no approximate fixed point, re-verified before returning.
    std::optional<PointMap> witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t budget = 0;
    bool witness_constructed = false;  // witness came from the hole construction, not the search
};

inline constexpr std::uint64_t default_afpp_budget = 10'000'000;

// Backtracking search for a continuous self-map with no approximate fixed
// point. Variables are the points in breadth-first order from the
// lexicographically smallest one; the candidate values for a point exclude
// its own closed neighborhood and are filtered through the closed
// neighborhoods of the images of already-assigned neighbors. Exhausting the
// space proves the property holds; a complete assignment is a witness that
// it fails; running out of budget yields unknown.
AfppVerdict check_afpp_exhaustive(const DigitalImage& x,
                                  std::uint64_t budget = default_afpp_budget);

// For every curve point, the closed neighborhoods (taken inside x, under the
// adjacency of x) of the point and of its image under f are disjoint.
// Requires f to be a continuous self-map of the curve.
bool condition_one_holds(const PointMap& f, const Curve& s, const DigitalImage& x);

// Composes the hole retraction of (x, xp) with a curve self-map f satisfying
// the disjoint-neighborhood condition; the result is a continuous self-map
// of x with no approximate fixed point (re-verified before returning).
PointMap construct_no_afp_map(const PointSet& x, const PointSet& xp, const PointMap& f);

// The reflection p -> doubled_center - p restricted to the curve. The center
// is passed doubled so half-integer centers stay exact. Throws
// precondition_error when the reflection does not map the curve onto itself.
PointMap point_reflection(const Curve& s, Point doubled_center);

// s_i -> s_{(i+shift) mod m}. Continuous on simple closed curves; has no
// approximate fixed point there exactly when shift mod m avoids {0, 1, m-1}.
PointMap cycle_shift_map(const Curve& s, int shift);

// Runs the exhaustive search, then, when the budget runs out on a c2 image,
// attempts to build a witness from the holes of the image (reflection and
// shift maps on their boundary curves).
AfppVerdict analyze_afpp(const DigitalImage& x, std::uint64_t budget = default_afpp_budget);

struct NoAfpExample {
    DigitalImage image;
    PointMap map;
};

// The 7x7 square with a radius-1 diamond hole (44 points, c2) together with
// its fixed-point-free continuous self-map: the hole retraction composed
// with the point reflection of the hole boundary.
NoAfpExample punctured_square_example();

}  // namespace dplane
