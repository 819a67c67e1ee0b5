#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dplane/afpp.hpp"
#include "dplane/convexity.hpp"
#include "dplane/curves.hpp"
#include "dplane/lattice.hpp"
#include "dplane/maps.hpp"

#include <json.hpp>

namespace dplane {

// Text grid: a header line "offset X0 Y0" naming the coordinate of the
// bottom-left cell, then one row per line, top row first; '#' marks a point
// and '.' an empty cell.
struct GridDocument {
    Point origin;
    std::vector<std::string> rows;
};

GridDocument parse_grid(std::string_view text);  // throws parse_error with a line number
PointSet points_from_grid(const GridDocument& doc);
PointSet parse_image(std::string_view text);

// Canonical document: origin at the bottom-left corner of the bounding box.
GridDocument grid_from_points(const PointSet& points);
std::string format_grid(const GridDocument& doc);
std::string format_image(const PointSet& points);

// One line per table entry: "x y -> x' y'", in lexicographic key order.
std::string format_map_table(const PointMap& f);

// One "x y" line per curve point, in curve order.
std::string format_curve(const Curve& s);

nlohmann::ordered_json point_to_json(Point p);
nlohmann::ordered_json point_set_to_json(const PointSet& points);
nlohmann::ordered_json image_to_json(const DigitalImage& image);
nlohmann::ordered_json map_to_json(const PointMap& f);
nlohmann::ordered_json curve_to_json(const Curve& s);
nlohmann::ordered_json certificate_to_json(const ConvexityCertificate& cert);
nlohmann::ordered_json verdict_to_json(const AfppVerdict& verdict);

}  // namespace dplane
