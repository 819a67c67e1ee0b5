#include "dplane/grid_io.hpp"

#include <sstream>

#include "dplane/errors.hpp"

namespace dplane {

GridDocument parse_grid(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    for (std::string& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();

    if (lines.empty()) throw parse_error("missing header line 'offset X0 Y0'", 1);

    GridDocument doc;
    {
        std::istringstream header(lines[0]);
        std::string keyword;
        std::string trailing;
        if (!(header >> keyword >> doc.origin.x >> doc.origin.y) || keyword != "offset" ||
            (header >> trailing))
            throw parse_error("expected header 'offset X0 Y0'", 1);
    }

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& row = lines[i];
        const int line_number = static_cast<int>(i) + 1;
        if (row.empty()) throw parse_error("empty grid row", line_number);
        if (!doc.rows.empty() && row.size() != doc.rows.front().size())
            throw parse_error("ragged grid row", line_number);
        for (char c : row)
            if (c != '#' && c != '.')
                throw parse_error(std::string("illegal character '") + c + "' in grid row",
                                  line_number);
        doc.rows.push_back(row);
    }
    return doc;
}

PointSet points_from_grid(const GridDocument& doc) {
    PointSet out;
    const int height = static_cast<int>(doc.rows.size());
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < static_cast<int>(doc.rows[row].size()); ++col) {
            if (doc.rows[row][col] == '#')
                out.insert({doc.origin.x + col, doc.origin.y + (height - 1 - row)});
        }
    }
    return out;
}

PointSet parse_image(std::string_view text) {
    return points_from_grid(parse_grid(text));
}

GridDocument grid_from_points(const PointSet& points) {
    if (points.empty()) return {{0, 0}, {"."}};
    const Box box = bounding_box(points);
    GridDocument doc;
    doc.origin = {box.min_x, box.min_y};
    for (int y = box.max_y; y >= box.min_y; --y) {
        std::string row;
        for (int x = box.min_x; x <= box.max_x; ++x)
            row.push_back(points.contains({x, y}) ? '#' : '.');
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

std::string format_grid(const GridDocument& doc) {
    std::string out = "offset " + std::to_string(doc.origin.x) + " " +
                      std::to_string(doc.origin.y) + "\n";
    for (const std::string& row : doc.rows) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string format_image(const PointSet& points) {
    return format_grid(grid_from_points(points));
}

std::string format_map_table(const PointMap& f) {
    std::string out;
    for (const auto& [p, q] : f.table) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + " -> " + std::to_string(q.x) +
               " " + std::to_string(q.y) + "\n";
    }
    return out;
}

std::string format_curve(const Curve& s) {
    std::string out;
    for (Point p : s.points) out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    return out;
}

nlohmann::ordered_json point_to_json(Point p) {
    return nlohmann::ordered_json::array({p.x, p.y});
}

nlohmann::ordered_json point_set_to_json(const PointSet& points) {
    auto arr = nlohmann::ordered_json::array();
    for (Point p : points) arr.push_back(point_to_json(p));
    return arr;
}

nlohmann::ordered_json image_to_json(const DigitalImage& image) {
    nlohmann::ordered_json j;
    j["adjacency"] = to_string(image.adjacency);
    j["points"] = point_set_to_json(image.points);
    return j;
}

nlohmann::ordered_json map_to_json(const PointMap& f) {
    nlohmann::ordered_json j;
    j["domain_adjacency"] = to_string(f.domain.adjacency);
    j["codomain_adjacency"] = to_string(f.codomain.adjacency);
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [p, q] : f.table)
        entries.push_back(nlohmann::ordered_json::array({p.x, p.y, q.x, q.y}));
    j["table"] = entries;
    return j;
}

nlohmann::ordered_json curve_to_json(const Curve& s) {
    nlohmann::ordered_json j;
    j["adjacency"] = to_string(s.kind);
    auto arr = nlohmann::ordered_json::array();
    for (Point p : s.points) arr.push_back(point_to_json(p));
    j["points"] = arr;
    return j;
}

namespace {

nlohmann::ordered_json segment_to_json(const Segment& seg) {
    nlohmann::ordered_json j;
    j["orientation"] = to_string(seg.orientation);
    j["endpoints"] = nlohmann::ordered_json::array({point_to_json(seg.a), point_to_json(seg.b)});
    auto arr = nlohmann::ordered_json::array();
    for (Point p : seg.points) arr.push_back(point_to_json(p));
    j["points"] = arr;
    return j;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const ConvexityCertificate& cert) {
    nlohmann::ordered_json j;
    j["convex"] = cert.convex;
    j["shape"] = cert.shape ? nlohmann::ordered_json(to_string(*cert.shape)) : nullptr;
    if (cert.segment) j["segment"] = segment_to_json(*cert.segment);
    if (cert.curve) j["curve"] = curve_to_json(*cert.curve);
    if (!cert.curve_segments.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const Segment& seg : cert.curve_segments) arr.push_back(segment_to_json(seg));
        j["curve_segments"] = arr;
    }
    if (cert.hull) {
        auto arr = nlohmann::ordered_json::array();
        for (Point p : cert.hull->vertices) arr.push_back(point_to_json(p));
        j["hull_vertices"] = arr;
    }
    if (cert.hull_raster_equal) j["hull_raster_equal"] = *cert.hull_raster_equal;
    j["failure"] = cert.convex ? nlohmann::ordered_json(nullptr)
                               : nlohmann::ordered_json(cert.failure);
    return j;
}

nlohmann::ordered_json verdict_to_json(const AfppVerdict& verdict) {
    nlohmann::ordered_json j;
    j["outcome"] = to_string(verdict.outcome);
    j["nodes_explored"] = verdict.nodes_explored;
    j["budget"] = verdict.budget;
    if (verdict.witness) {
        j["witness"] = map_to_json(*verdict.witness);
        j["witness_source"] = verdict.witness_constructed ? "constructed" : "search";
    }
    return j;
}

}  // namespace dplane
