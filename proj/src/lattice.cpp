#include "dplane/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iterator>

#include "dplane/errors.hpp"

namespace dplane {

Adjacency dual(Adjacency kind) {
    return kind == Adjacency::c1 ? Adjacency::c2 : Adjacency::c1;
}

std::string to_string(Adjacency kind) {
    return kind == Adjacency::c1 ? "c1" : "c2";
}

Adjacency adjacency_from_string(const std::string& text) {
    if (text == "c1") return Adjacency::c1;
    if (text == "c2") return Adjacency::c2;
    throw domain_error("unknown adjacency '" + text + "' (expected c1 or c2)");
}

bool adjacent(Point p, Point q, Adjacency kind) {
    const int dx = std::abs(p.x - q.x);
    const int dy = std::abs(p.y - q.y);
    if (dx > 1 || dy > 1 || (dx == 0 && dy == 0)) return false;
    if (kind == Adjacency::c1) return dx + dy == 1;
    return true;
}

bool adjacent_or_equal(Point p, Point q, Adjacency kind) {
    return p == q || adjacent(p, q, kind);
}

std::vector<Point> neighbors(Point p, Adjacency kind) {
    std::vector<Point> out;
    out.reserve(kind == Adjacency::c1 ? 4 : 8);
    for (int dx = -1; dx <= 1; ++dx) {
        for (int dy = -1; dy <= 1; ++dy) {
            if (dx == 0 && dy == 0) continue;
            if (kind == Adjacency::c1 && dx != 0 && dy != 0) continue;
            out.push_back({p.x + dx, p.y + dy});
        }
    }
    return out;
}

PointSet closed_neighborhood(const DigitalImage& image, Point x) {
    if (!image.points.contains(x))
        throw domain_error("closed_neighborhood: point is not in the image");
    PointSet out{x};
    for (Point n : neighbors(x, image.adjacency))
        if (image.points.contains(n)) out.insert(n);
    return out;
}

namespace {

// Flood fill from `start` through `universe` membership, collecting the
// kind-component. `universe` decides membership; `inside` restricts growth.
template <typename Member, typename Inside>
PointSet flood(Point start, Adjacency kind, Member member, Inside inside, PointSet& visited) {
    PointSet comp;
    std::deque<Point> queue{start};
    visited.insert(start);
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        comp.insert(p);
        for (Point n : neighbors(p, kind)) {
            if (!inside(n) || visited.contains(n) || !member(n)) continue;
            visited.insert(n);
            queue.push_back(n);
        }
    }
    return comp;
}

}  // namespace

bool is_connected(const PointSet& points, Adjacency kind) {
    if (points.size() <= 1) return true;
    PointSet visited;
    PointSet comp = flood(
        *points.begin(), kind, [&](Point p) { return points.contains(p); },
        [](Point) { return true; }, visited);
    return comp.size() == points.size();
}

bool is_connected(const DigitalImage& image) {
    return is_connected(image.points, image.adjacency);
}

ComponentDecomposition components(const PointSet& s, Adjacency kind) {
    ComponentDecomposition out;
    PointSet visited;
    for (Point p : s) {
        if (visited.contains(p)) continue;
        PointSet comp = flood(
            p, kind, [&](Point q) { return s.contains(q); }, [](Point) { return true; }, visited);
        out.components.push_back({std::move(comp), false});
    }
    // flood starts run in lexicographic order, so components are already
    // sorted by smallest member
    return out;
}

bool Box::contains(Point p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
}

bool Box::on_frame(Point p) const {
    return contains(p) && (p.x == min_x || p.x == max_x || p.y == min_y || p.y == max_y);
}

Box Box::padded(int margin) const {
    return {min_x - margin, min_y - margin, max_x + margin, max_y + margin};
}

Box bounding_box(const PointSet& s) {
    if (s.empty()) throw domain_error("bounding_box: empty point set");
    Box box{s.begin()->x, s.begin()->y, s.begin()->x, s.begin()->y};
    for (Point p : s) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

ComponentDecomposition complement_components(const PointSet& x, Adjacency kind, const Box& box) {
    if (x.empty()) throw precondition_error("complement_components: point set must be nonempty");
    const Box inner = bounding_box(x).padded(1);
    if (box.min_x > inner.min_x || box.min_y > inner.min_y || box.max_x < inner.max_x ||
        box.max_y < inner.max_y)
        throw domain_error("complement_components: box must cover the padded bounding box");

    std::vector<Component> finite;
    std::vector<Component> infinite;
    PointSet visited;
    for (int px = box.min_x; px <= box.max_x; ++px) {
        for (int py = box.min_y; py <= box.max_y; ++py) {
            Point p{px, py};
            if (x.contains(p) || visited.contains(p)) continue;
            PointSet comp = flood(
                p, kind, [&](Point q) { return !x.contains(q); },
                [&](Point q) { return box.contains(q); }, visited);
            bool touches_frame =
                std::any_of(comp.begin(), comp.end(), [&](Point q) { return box.on_frame(q); });
            (touches_frame ? infinite : finite).push_back({std::move(comp), touches_frame});
        }
    }
    if (infinite.size() != 1)
        throw internal_error("complement_components: expected exactly one unbounded component");

    ComponentDecomposition out;
    out.components = std::move(finite);
    out.components.push_back(std::move(infinite.front()));
    return out;
}

ComponentDecomposition complement_components(const PointSet& x, Adjacency kind) {
    if (x.empty()) throw precondition_error("complement_components: point set must be nonempty");
    return complement_components(x, kind, bounding_box(x).padded(1));
}

bool sets_adjacent(const PointSet& a, const PointSet& b, Adjacency kind) {
    if (!set_intersection(a, b).empty())
        throw domain_error("sets_adjacent: sets must be disjoint");
    // scan the smaller set's neighborhoods against the larger set
    const PointSet& small = a.size() <= b.size() ? a : b;
    const PointSet& large = a.size() <= b.size() ? b : a;
    for (Point p : small)
        for (Point n : neighbors(p, kind))
            if (large.contains(n)) return true;
    return false;
}

bool is_subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace dplane
