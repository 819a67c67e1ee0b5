#include "dplane/curves.hpp"

#include <algorithm>
#include <array>

#include "dplane/errors.hpp"

namespace dplane {

PointSet Curve::point_set() const {
    return PointSet(points.begin(), points.end());
}

bool is_closed_curve(std::span<const Point> seq, Adjacency kind) {
    const std::size_t m = seq.size();
    if (m == 0) return false;
    if (PointSet(seq.begin(), seq.end()).size() != m) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (!adjacent(seq[i], seq[(i + 1) % m], kind)) return false;
    return true;
}

std::size_t min_simple_closed_size(Adjacency kind) {
    return kind == Adjacency::c1 ? 8 : 4;
}

bool is_simple_closed_curve(const Curve& s) {
    const std::size_t m = s.size();
    if (!is_closed_curve(s.points, s.kind)) return false;
    if (m < min_simple_closed_size(s.kind)) return false;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!adjacent(s.points[i], s.points[j], s.kind)) continue;
            const bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (!consecutive) return false;
        }
    }
    return true;
}

JordanPartition jordan_components(const Curve& s) {
    if (!is_simple_closed_curve(s))
        throw precondition_error(
            "jordan_components: curve is not simple closed of the minimum length for its kind");
    const Adjacency dual_kind = dual(s.kind);
    ComponentDecomposition comps = complement_components(s.point_set(), dual_kind);
    if (comps.size() != 2)
        throw internal_error("jordan_components: complement does not split into two components");
    const Component& finite = comps.components[0];
    const Component& infinite = comps.components[1];
    if (finite.unbounded || !infinite.unbounded)
        throw internal_error("jordan_components: expected one finite and one infinite component");
    return {finite.points, infinite.points, dual_kind};
}

std::optional<PointSet> bounding_curve_interior(const PointSet& curve_points) {
    if (curve_points.empty()) return std::nullopt;
    ComponentDecomposition comps = complement_components(curve_points, Adjacency::c1);
    if (comps.size() != 2) return std::nullopt;
    if (comps.components[0].unbounded || !comps.components[1].unbounded) return std::nullopt;
    return comps.components[0].points;
}

namespace {

// Clockwise Moore scan order around a pixel, starting west, with y pointing
// up: W, NW, N, NE, E, SE, S, SW.
constexpr std::array<Point, 8> kClockwise = {
    {{-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}}};

int offset_index(Point from, Point to) {
    for (int i = 0; i < 8; ++i)
        if (from.x + kClockwise[i].x == to.x && from.y + kClockwise[i].y == to.y) return i;
    throw internal_error("moore trace: backtrack cell is not a neighbor");
}

// Raw Moore-neighbor boundary walk. May revisit pixels on pinched shapes;
// the caller validates the output.
std::vector<Point> moore_trace(const PointSet& x) {
    const Point start = *x.begin();  // lexicographically smallest: its west neighbor is empty
    std::vector<Point> seq{start};
    int scan_from = 0;  // index of the west offset
    Point current = start;

    std::optional<Point> first_move;
    std::optional<int> first_move_scan;
    const std::size_t max_steps = 4 * x.size() + 8;
    for (std::size_t step = 0; step < max_steps; ++step) {
        int found = -1;
        for (int k = 0; k < 8; ++k) {
            const int idx = (scan_from + k) % 8;
            Point cand{current.x + kClockwise[idx].x, current.y + kClockwise[idx].y};
            if (x.contains(cand)) {
                found = idx;
                break;
            }
        }
        if (found == -1) return seq;  // isolated pixel

        Point next{current.x + kClockwise[found].x, current.y + kClockwise[found].y};
        Point last_background{current.x + kClockwise[(found + 7) % 8].x,
                              current.y + kClockwise[(found + 7) % 8].y};
        const int next_scan = offset_index(next, last_background);

        if (!first_move) {
            first_move = next;
            first_move_scan = next_scan;
        } else if (current == start && next == *first_move && next_scan == *first_move_scan) {
            seq.pop_back();  // drop the re-entered start pixel
            return seq;      // walk state repeats: the contour is closed
        }
        seq.push_back(next);
        current = next;
        scan_from = next_scan;
    }
    throw error("no canonical bounding curve: boundary trace failed to close");
}

}  // namespace

Curve trace_bounding_curve(const PointSet& x) {
    if (x.empty()) throw precondition_error("trace_bounding_curve: empty point set");
    if (!is_connected(x, Adjacency::c2))
        throw precondition_error("trace_bounding_curve: point set is not c2-connected");

    std::vector<Point> seq = moore_trace(x);
    if (PointSet(seq.begin(), seq.end()).size() != seq.size())
        throw error("no canonical bounding curve: boundary trace revisits a point");
    if (!is_closed_curve(seq, Adjacency::c2))
        throw error("no canonical bounding curve: trace is not a closed curve");

    Curve s{std::move(seq), Adjacency::c2};
    std::optional<PointSet> interior = bounding_curve_interior(s.point_set());
    if (!interior)
        throw error(
            "no canonical bounding curve: complement of the trace does not have exactly one "
            "finite and one infinite c1-component");
    if (!is_subset(x, set_union(s.point_set(), *interior)))
        throw error("no canonical bounding curve: trace does not enclose the set");
    return s;
}

std::optional<Curve> disk_certificate(const PointSet& d) {
    if (d.empty() || !is_connected(d, Adjacency::c2)) return std::nullopt;
    Curve s{{}, Adjacency::c2};
    try {
        s = trace_bounding_curve(d);
    } catch (const error&) {
        return std::nullopt;
    }
    std::optional<PointSet> interior = bounding_curve_interior(s.point_set());
    if (!interior) return std::nullopt;
    if (d != set_union(s.point_set(), *interior)) return std::nullopt;
    return s;
}

namespace {

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

}  // namespace

bool is_bounding_curve_set(const PointSet& x, const BoundingCurveSet& candidate,
                           std::string* why) {
    if (x.empty() || !is_connected(x, Adjacency::c2))
        throw precondition_error("is_bounding_curve_set: x must be nonempty and c2-connected");
    if (candidate.curves.empty()) return fail(why, "candidate has no curves");

    PointSet used;
    for (std::size_t j = 0; j < candidate.curves.size(); ++j) {
        const Curve& s = candidate.curves[j];
        const std::string label = "curve " + std::to_string(j + 1);
        if (s.kind != Adjacency::c2 || !is_closed_curve(s.points, Adjacency::c2))
            return fail(why, label + " is not a c2-closed curve");
        PointSet pts = s.point_set();
        if (!is_subset(pts, x)) return fail(why, label + " is not contained in the set");
        if (!set_intersection(used, pts).empty())
            return fail(why, label + " intersects another curve");
        used = set_union(used, pts);
    }

    const Box box = bounding_box(x).padded(1);

    // outer curve: complement splits into a finite interior and the exterior
    const Curve& outer = candidate.curves.front();
    ComponentDecomposition outer_comps =
        complement_components(outer.point_set(), Adjacency::c1, box);
    if (outer_comps.size() != 2)
        return fail(why, "outer curve does not split the plane into two c1-components");
    const PointSet& outer_interior = outer_comps.components[0].points;
    const PointSet& outer_exterior = outer_comps.components[1].points;
    if (!is_subset(x, set_union(outer.point_set(), outer_interior)))
        return fail(why, "set is not contained in the outer curve plus its interior");

    // hole curves bound digital disks
    std::vector<PointSet> pieces;  // complement pieces: exterior, then hole interiors
    pieces.push_back(outer_exterior);
    for (std::size_t j = 1; j < candidate.curves.size(); ++j) {
        std::optional<PointSet> interior = bounding_curve_interior(candidate.curves[j].point_set());
        if (!interior)
            return fail(why, "curve " + std::to_string(j + 1) + " does not bound a digital disk");
        pieces.push_back(std::move(*interior));
    }

    // complement pieces are pairwise disjoint and non-adjacent under both
    // adjacencies, so each is a full component of the complement
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            if (!set_intersection(pieces[i], pieces[j]).empty())
                return fail(why, "complement pieces overlap");
            if (sets_adjacent(pieces[i], pieces[j], Adjacency::c1) ||
                sets_adjacent(pieces[i], pieces[j], Adjacency::c2))
                return fail(why, "two complement pieces are adjacent");
        }
    }

    // complement identity, checked inside the padded box
    PointSet pieces_union;
    for (const PointSet& piece : pieces) pieces_union = set_union(pieces_union, piece);
    PointSet complement_in_box;
    for (int px = box.min_x; px <= box.max_x; ++px)
        for (int py = box.min_y; py <= box.max_y; ++py)
            if (Point p{px, py}; !x.contains(p)) complement_in_box.insert(p);
    if (pieces_union != complement_in_box)
        return fail(why, "complement of the set is not the union of the exterior and the hole interiors");

    if (why) why->clear();
    return true;
}

BoundingCurveSet canonical_bounding_curves(const PointSet& x) {
    if (x.empty() || !is_connected(x, Adjacency::c2))
        throw precondition_error("canonical_bounding_curves: x must be nonempty and c2-connected");

    BoundingCurveSet out;
    out.curves.push_back(trace_bounding_curve(x));

    ComponentDecomposition holes = complement_components(x, Adjacency::c1);
    for (const Component& hole : holes.components) {
        if (hole.unbounded) continue;
        PointSet shell;
        for (Point h : hole.points)
            for (Point n : neighbors(h, Adjacency::c1))
                if (x.contains(n)) shell.insert(n);
        Curve s = trace_bounding_curve(set_union(hole.points, shell));
        std::optional<PointSet> interior = bounding_curve_interior(s.point_set());
        if (!interior || *interior != hole.points || !is_subset(s.point_set(), x))
            throw error("no canonical bounding curve set: hole boundary trace failed verification");
        out.curves.push_back(std::move(s));
    }

    std::string why;
    if (!is_bounding_curve_set(x, out, &why))
        throw error("no canonical bounding curve set: " + why);
    return out;
}

}  // namespace dplane
