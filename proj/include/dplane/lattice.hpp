#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace dplane {

// A lattice point of Z^2. Ordering is lexicographic: x first, then y.
struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

// c1 = 4-adjacency (axis neighbors), c2 = 8-adjacency (Moore neighbors).
enum class Adjacency { c1, c2 };

Adjacency dual(Adjacency kind);
std::string to_string(Adjacency kind);
Adjacency adjacency_from_string(const std::string& text);

using PointSet = std::set<Point>;

struct DigitalImage {
    PointSet points;
    Adjacency adjacency = Adjacency::c2;
};

bool adjacent(Point p, Point q, Adjacency kind);
bool adjacent_or_equal(Point p, Point q, Adjacency kind);

// The 4 or 8 lattice neighbors of p, in lexicographic order.
std::vector<Point> neighbors(Point p, Adjacency kind);

// N*(X, x): x together with its neighbors inside X.
// Throws domain_error if x is not a point of the image.
PointSet closed_neighborhood(const DigitalImage& image, Point x);

// Every pair of points is joined by a path of adjacent points inside the set.
// The empty set counts as connected.
bool is_connected(const PointSet& points, Adjacency kind);
bool is_connected(const DigitalImage& image);

struct Component {
    PointSet points;
    bool unbounded = false;
};

struct ComponentDecomposition {
    std::vector<Component> components;
    std::size_t size() const { return components.size(); }
};

// Maximal kind-connected subsets, sorted by smallest member.
ComponentDecomposition components(const PointSet& s, Adjacency kind);

// Axis-aligned bounding box, inclusive on all sides.
struct Box {
    int min_x = 0;
    int min_y = 0;
    int max_x = -1;
    int max_y = -1;
    bool contains(Point p) const;
    bool on_frame(Point p) const;  // p lies on the border ring of the box
    Box padded(int margin) const;
};

Box bounding_box(const PointSet& s);  // throws domain_error on empty input

// Decomposition of Z^2 \ x into kind-components. The single infinite
// component is represented by its restriction to the bounding box of x
// padded by one ring and is flagged unbounded; a one-ring pad suffices
// because the frame is connected and everything outside the box reaches it.
// Finite components come first, sorted by smallest member; the unbounded
// component is last.
ComponentDecomposition complement_components(const PointSet& x, Adjacency kind);

// Same, restricted to a caller-supplied box. The box must contain the
// bounding box of x padded by one ring.
ComponentDecomposition complement_components(const PointSet& x, Adjacency kind, const Box& box);

// True iff some a in A is adjacent to some b in B.
// Throws domain_error when A and B intersect.
bool sets_adjacent(const PointSet& a, const PointSet& b, Adjacency kind);

// Small set helpers used throughout.
bool is_subset(const PointSet& a, const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);

}  // namespace dplane
