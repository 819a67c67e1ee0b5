#include "dplane/maps.hpp"

#include "dplane/errors.hpp"

namespace dplane {

Point PointMap::operator()(Point p) const {
    auto it = table.find(p);
    if (it == table.end()) throw domain_error("PointMap: point is not in the table");
    return it->second;
}

void validate(const PointMap& f) {
    for (Point p : f.domain.points)
        if (!f.table.contains(p)) throw domain_error("PointMap: table is not total on the domain");
    for (const auto& [p, q] : f.table) {
        if (!f.domain.points.contains(p))
            throw domain_error("PointMap: table key outside the domain");
        if (!f.codomain.points.contains(q))
            throw domain_error("PointMap: value outside the codomain");
    }
}

bool is_continuous(const PointMap& f) {
    validate(f);
    for (const auto& [p, fp] : f.table) {
        for (Point n : neighbors(p, f.domain.adjacency)) {
            if (!f.domain.points.contains(n)) continue;
            if (!adjacent_or_equal(fp, f.table.at(n), f.codomain.adjacency)) return false;
        }
    }
    return true;
}

bool is_self_map(const PointMap& f) {
    validate(f);
    for (const auto& [p, q] : f.table)
        if (!f.domain.points.contains(q)) return false;
    return true;
}

PointMap identity_map(const DigitalImage& x) {
    PointMap f{x, x, {}};
    for (Point p : x.points) f.table.emplace(p, p);
    return f;
}

PointMap constant_map(const DigitalImage& x, const DigitalImage& codomain, Point value) {
    if (!codomain.points.contains(value))
        throw domain_error("constant_map: value outside the codomain");
    PointMap f{x, codomain, {}};
    for (Point p : x.points) f.table.emplace(p, value);
    return f;
}

PointMap compose(const PointMap& g, const PointMap& f) {
    validate(f);
    validate(g);
    if (!is_subset(f.codomain.points, g.domain.points))
        throw domain_error("compose: codomain of the inner map is not contained in the domain of the outer map");
    PointMap out{f.domain, g.codomain, {}};
    for (const auto& [p, q] : f.table) out.table.emplace(p, g(q));
    return out;
}

bool is_retraction(const PointMap& r, const DigitalImage& target) {
    if (!is_subset(target.points, r.domain.points))
        throw precondition_error("is_retraction: target is not a subset of the domain");
    if (!is_continuous(r)) return false;
    for (const auto& [p, q] : r.table)
        if (!target.points.contains(q)) return false;
    for (Point y : target.points)
        if (r(y) != y) return false;
    return true;
}

}  // namespace dplane
