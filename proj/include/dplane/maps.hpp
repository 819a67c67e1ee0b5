#pragma once

#include <map>

#include "dplane/lattice.hpp"

namespace dplane {

// A function between point sets, stored as an explicit table so that maps
// built by different constructions compare and serialize uniformly.
struct PointMap {
    DigitalImage domain;
    DigitalImage codomain;
    std::map<Point, Point> table;

    Point operator()(Point p) const;  // throws domain_error if p is unmapped
};

// The table is total on the domain and every value lies in the codomain.
void validate(const PointMap& f);

// Edge test: every adjacent pair of domain points has equal or adjacent
// images under the codomain adjacency. Throws domain_error on a partial
// table.
bool is_continuous(const PointMap& f);

// Every value of f lies back in its own domain.
bool is_self_map(const PointMap& f);

PointMap identity_map(const DigitalImage& x);
PointMap constant_map(const DigitalImage& x, const DigitalImage& codomain, Point value);

// g after f. Requires the values of f to lie inside the domain of g.
PointMap compose(const PointMap& g, const PointMap& f);

// r is continuous, maps its whole domain into `target`, and fixes every
// point of `target`. Requires target.points to be a subset of the domain.
bool is_retraction(const PointMap& r, const DigitalImage& target);

}  // namespace dplane
