#include "dplane/retract.hpp"

#include <algorithm>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

int clamp(int v, int lo, int hi) {
    return std::min(std::max(v, lo), hi);
}

// floor division, exact for negative numerators
int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Point DiskRetraction::map_point(Point p) const {
    if (disk.contains(p)) return p;
    const RetractionCertificate& c = certificate;
    if (p.x < c.min_col) return {c.min_col, clamp(p.y, c.left_low, c.left_high)};
    if (p.x > c.max_col) return {c.max_col, clamp(p.y, c.right_low, c.right_high)};
    const auto& [bottom, top] = column_span.at(p.x);
    if (p.y > top) return {p.x, top};
    if (p.y < bottom) return {p.x, bottom};
    throw internal_error("disk retraction: point inside the column span but outside the disk");
}

DiskRetraction convex_disk_retraction(const PointSet& x, const PointSet& y) {
    ConvexityCertificate cert = is_digitally_convex(x);
    if (!cert.convex || cert.shape != ConvexShape::disk)
        throw precondition_error("convex_disk_retraction: x is not a digitally convex disk" +
                                 (cert.failure.empty() ? "" : " (" + cert.failure + ")"));
    if (!is_subset(x, y))
        throw precondition_error("convex_disk_retraction: x is not contained in y");

    DiskRetraction out;
    out.disk = x;
    out.certificate.curve = *cert.curve;
    const PointSet curve_points = cert.curve->point_set();

    RetractionCertificate& rc = out.certificate;
    rc.min_col = x.begin()->x;
    rc.max_col = x.rbegin()->x;
    for (Point p : x) {
        auto [it, fresh] = out.column_span.try_emplace(p.x, std::pair{p.y, p.y});
        if (!fresh) {
            it->second.first = std::min(it->second.first, p.y);
            it->second.second = std::max(it->second.second, p.y);
        }
    }
    // a convex disk has contiguous columns; the case formulas rely on it
    for (const auto& [col, span] : out.column_span)
        for (int yy = span.first; yy <= span.second; ++yy)
            if (!x.contains({col, yy}))
                throw internal_error("convex_disk_retraction: disk column has a gap");

    for (Point p : curve_points) {
        if (p.x == rc.min_col) rc.left.insert(p);
        if (p.x == rc.max_col) rc.right.insert(p);
    }
    if (rc.left.empty() || rc.right.empty())
        throw internal_error("convex_disk_retraction: extreme column has no curve points");
    rc.left_low = rc.left.begin()->y;
    rc.left_high = rc.left.rbegin()->y;
    rc.right_low = rc.right.begin()->y;
    rc.right_high = rc.right.rbegin()->y;

    out.map.domain = {y, Adjacency::c2};
    out.map.codomain = {x, Adjacency::c2};
    for (Point p : y) out.map.table.emplace(p, out.map_point(p));
    return out;
}

PointMap hole_retraction(const PointSet& x, const PointSet& xp) {
    ConvexityCertificate cert = is_digitally_convex(xp);
    if (!cert.convex || cert.shape != ConvexShape::disk)
        throw precondition_error("hole_retraction: xp is not a digitally convex disk" +
                                 (cert.failure.empty() ? "" : " (" + cert.failure + ")"));
    const PointSet curve_points = cert.curve->point_set();
    if (!is_subset(curve_points, x))
        throw precondition_error("hole_retraction: bounding curve of xp is not contained in x");
    const PointSet interior = set_difference(xp, curve_points);

    bool interior_is_component = false;
    for (const Component& comp : complement_components(x, Adjacency::c2).components)
        if (!comp.unbounded && comp.points == interior) interior_is_component = true;
    if (!interior_is_component)
        throw precondition_error(
            "hole_retraction: interior of xp is not a c2-component of the complement of x");

    DiskRetraction big = convex_disk_retraction(xp, set_union(x, xp));
    PointMap out;
    out.domain = {x, Adjacency::c2};
    out.codomain = {curve_points, Adjacency::c2};
    for (Point p : x) out.table.emplace(p, big.map_point(p));
    return out;
}

PointMap thin_convex_retraction(const PointSet& x, const PointSet& y) {
    if (x.empty()) throw precondition_error("thin_convex_retraction: x is empty");
    if (!is_subset(x, y))
        throw precondition_error("thin_convex_retraction: x is not contained in y");

    PointMap out;
    out.domain = {y, Adjacency::c2};
    out.codomain = {x, Adjacency::c2};

    if (x.size() == 1) {
        const Point target = *x.begin();
        for (Point p : y) out.table.emplace(p, target);
        return out;
    }

    std::optional<Segment> seg = classify_segment(x, Adjacency::c2);
    if (!seg)
        throw precondition_error(
            "thin_convex_retraction: x is not a single point or a digital line segment");

    const Point a = seg->a;
    const int len = static_cast<int>(seg->points.size()) - 1;
    for (Point p : y) {
        Point image{};
        switch (seg->orientation) {
            case SegmentOrientation::horizontal:
                image = {clamp(p.x, seg->a.x, seg->b.x), a.y};
                break;
            case SegmentOrientation::vertical:
                image = {a.x, clamp(p.y, seg->a.y, seg->b.y)};
                break;
            case SegmentOrientation::slanted_up: {
                const int t = clamp(floor_div((p.x - a.x) + (p.y - a.y), 2), 0, len);
                image = {a.x + t, a.y + t};
                break;
            }
            case SegmentOrientation::slanted_down: {
                const int t = clamp(floor_div((p.x - a.x) + (a.y - p.y), 2), 0, len);
                image = {a.x + t, a.y - t};
                break;
            }
        }
        out.table.emplace(p, image);
    }
    return out;
}

}  // namespace dplane
