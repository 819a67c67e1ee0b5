#include "dplane/convexity.hpp"

#include <algorithm>
#include <numeric>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

long long cross(Point o, Point a, Point b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

std::optional<SegmentOrientation> orientation_of_step(Point step) {
    if (step.y == 0 && step.x != 0) return SegmentOrientation::horizontal;
    if (step.x == 0 && step.y != 0) return SegmentOrientation::vertical;
    if (step.x == step.y && step.x != 0) return SegmentOrientation::slanted_up;
    if (step.x == -step.y && step.x != 0) return SegmentOrientation::slanted_down;
    return std::nullopt;
}

}  // namespace

std::string to_string(SegmentOrientation o) {
    switch (o) {
        case SegmentOrientation::horizontal: return "horizontal";
        case SegmentOrientation::vertical: return "vertical";
        case SegmentOrientation::slanted_up: return "slanted+1";
        case SegmentOrientation::slanted_down: return "slanted-1";
    }
    throw internal_error("unknown segment orientation");
}

std::string to_string(ConvexShape shape) {
    switch (shape) {
        case ConvexShape::point: return "point";
        case ConvexShape::segment: return "segment";
        case ConvexShape::disk: return "disk";
    }
    throw internal_error("unknown convex shape");
}

std::optional<Segment> classify_segment(const PointSet& s, Adjacency kind) {
    if (s.size() < 2) return std::nullopt;
    std::vector<Point> pts(s.begin(), s.end());  // lexicographic order
    const Point step{pts[1].x - pts[0].x, pts[1].y - pts[0].y};
    if (std::abs(step.x) > 1 || std::abs(step.y) > 1) return std::nullopt;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1].x - pts[i].x != step.x || pts[i + 1].y - pts[i].y != step.y)
            return std::nullopt;
    }
    auto orientation = orientation_of_step(step);
    if (!orientation) return std::nullopt;
    const bool slanted = *orientation == SegmentOrientation::slanted_up ||
                         *orientation == SegmentOrientation::slanted_down;
    if (slanted && kind == Adjacency::c1) return std::nullopt;  // diagonal steps need c2
    return Segment{pts.front(), pts.back(), *orientation, std::move(pts)};
}

Hull convex_hull(const PointSet& p) {
    if (p.empty()) throw domain_error("convex_hull: empty point set");
    std::vector<Point> pts(p.begin(), p.end());
    if (pts.size() == 1) return {{pts[0]}};

    // Andrew's monotone chain with strict turns, so collinear points are
    // dropped and only the extreme points remain.
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& pt : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
        hull[k++] = pt;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return {std::move(hull)};
}

PointSet hull_lattice_points(const Hull& h) {
    const std::vector<Point>& v = h.vertices;
    if (v.empty()) throw domain_error("hull_lattice_points: empty hull");
    PointSet out;
    if (v.size() == 1) {
        out.insert(v[0]);
        return out;
    }
    if (v.size() == 2) {
        const int dx = v[1].x - v[0].x;
        const int dy = v[1].y - v[0].y;
        const int g = std::gcd(std::abs(dx), std::abs(dy));
        for (int t = 0; t <= g; ++t) out.insert({v[0].x + t * dx / g, v[0].y + t * dy / g});
        return out;
    }
    PointSet vertex_set(v.begin(), v.end());
    const Box box = bounding_box(vertex_set);
    for (int x = box.min_x; x <= box.max_x; ++x) {
        for (int y = box.min_y; y <= box.max_y; ++y) {
            Point p{x, y};
            bool inside = true;
            for (std::size_t i = 0; i < v.size() && inside; ++i)
                inside = cross(v[i], v[(i + 1) % v.size()], p) >= 0;
            if (inside) out.insert(p);
        }
    }
    return out;
}

std::vector<Segment> maximal_segments(const Curve& s) {
    if (s.kind != Adjacency::c2 || !is_closed_curve(s.points, Adjacency::c2))
        throw precondition_error("maximal_segments: input is not a c2-closed curve");
    const std::size_t m = s.size();
    std::vector<Point> step(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = s.points[i];
        const Point& b = s.points[(i + 1) % m];
        step[i] = {b.x - a.x, b.y - a.y};
    }
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < m; ++i)
        if (step[(i + m - 1) % m] != step[i]) corners.push_back(i);
    if (corners.empty()) throw internal_error("maximal_segments: closed curve with no corner");

    std::vector<Segment> out;
    for (std::size_t c = 0; c < corners.size(); ++c) {
        const std::size_t from = corners[c];
        const std::size_t to = corners[(c + 1) % corners.size()];
        std::vector<Point> run;
        for (std::size_t i = from; ; i = (i + 1) % m) {
            run.push_back(s.points[i]);
            if (i == to) break;
        }
        auto orientation = orientation_of_step(step[from]);
        if (!orientation) throw internal_error("maximal_segments: non-unit step in curve");
        out.push_back({run.front(), run.back(), *orientation, std::move(run)});
    }
    return out;
}

ConvexityCertificate is_digitally_convex(const PointSet& y) {
    if (y.empty()) throw domain_error("is_digitally_convex: empty point set");
    ConvexityCertificate cert;

    if (y.size() == 1) {
        cert.convex = true;
        cert.shape = ConvexShape::point;
        return cert;
    }
    if (auto segment = classify_segment(y, Adjacency::c2)) {
        cert.convex = true;
        cert.shape = ConvexShape::segment;
        cert.segment = std::move(segment);
        return cert;
    }

    // disk case
    std::optional<Curve> curve = disk_certificate(y);
    if (!curve) {
        cert.failure = "not a single point, a digital line segment, or a digital disk";
        return cert;
    }
    cert.curve = *curve;
    cert.curve_segments = maximal_segments(*curve);
    cert.hull = convex_hull(y);
    cert.hull_raster_equal = (y == hull_lattice_points(*cert.hull));

    PointSet endpoints;
    for (const Segment& seg : cert.curve_segments) {
        endpoints.insert(seg.a);
        endpoints.insert(seg.b);
    }
    PointSet hull_vertices(cert.hull->vertices.begin(), cert.hull->vertices.end());
    if (endpoints != hull_vertices) {
        cert.failure =
            "endpoints of the maximal segments of the bounding curve differ from the hull vertices";
        return cert;
    }
    cert.convex = true;
    cert.shape = ConvexShape::disk;
    return cert;
}

}  // namespace dplane
