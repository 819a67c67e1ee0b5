#include "dplane/svg_render.hpp"

#include <sstream>

#include "dplane/errors.hpp"

namespace dplane {

namespace {

constexpr int kCell = 20;

struct Frame {
    Box box;
    int width;
    int height;

    // top-left corner of the cell, with a one-cell margin and y flipped
    int px(int x) const { return (x - box.min_x + 1) * kCell; }
    int py(int y) const { return (box.max_y - y + 1) * kCell; }
    int cx(int x) const { return px(x) + kCell / 2; }
    int cy(int y) const { return py(y) + kCell / 2; }
};

}  // namespace

std::string render_svg(const PointSet& x, const SvgOverlays& overlays) {
    if (x.empty()) throw domain_error("render_svg: empty point set");
    Box box = bounding_box(x);
    if (overlays.arrows) {
        for (const auto& [p, q] : overlays.arrows->table) {
            for (Point r : {p, q}) {
                box.min_x = std::min(box.min_x, r.x);
                box.min_y = std::min(box.min_y, r.y);
                box.max_x = std::max(box.max_x, r.x);
                box.max_y = std::max(box.max_y, r.y);
            }
        }
    }
    Frame frame{box, (box.max_x - box.min_x + 3) * kCell, (box.max_y - box.min_y + 3) * kCell};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << frame.width << "\" height=\""
        << frame.height << "\" viewBox=\"0 0 " << frame.width << " " << frame.height << "\">\n";
    svg << "<defs><marker id=\"tip\" markerWidth=\"7\" markerHeight=\"7\" refX=\"5\" refY=\"3\" "
           "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#1a6b1a\"/></marker></defs>\n";

    for (Point p : x)
        svg << "<rect x=\"" << frame.px(p.x) << "\" y=\"" << frame.py(p.y) << "\" width=\""
            << kCell << "\" height=\"" << kCell
            << "\" fill=\"#c8d8ef\" stroke=\"#5a6b85\" stroke-width=\"1\"/>\n";

    if (overlays.curve) {
        for (Point p : overlays.curve->points)
            svg << "<rect x=\"" << frame.px(p.x) << "\" y=\"" << frame.py(p.y) << "\" width=\""
                << kCell << "\" height=\"" << kCell
                << "\" fill=\"#f2b05c\" stroke=\"#8a5a17\" stroke-width=\"1\"/>\n";
    }

    if (overlays.hull && overlays.hull->vertices.size() >= 2) {
        svg << "<polygon points=\"";
        bool first = true;
        for (Point v : overlays.hull->vertices) {
            if (!first) svg << " ";
            svg << frame.cx(v.x) << "," << frame.cy(v.y);
            first = false;
        }
        svg << "\" fill=\"none\" stroke=\"#b02020\" stroke-width=\"2\"/>\n";
    }

    if (overlays.arrows) {
        for (const auto& [p, q] : overlays.arrows->table) {
            if (p == q) {
                svg << "<circle cx=\"" << frame.cx(p.x) << "\" cy=\"" << frame.cy(p.y)
                    << "\" r=\"3\" fill=\"#1a6b1a\"/>\n";
            } else {
                svg << "<line x1=\"" << frame.cx(p.x) << "\" y1=\"" << frame.cy(p.y) << "\" x2=\""
                    << frame.cx(q.x) << "\" y2=\"" << frame.cy(q.y)
                    << "\" stroke=\"#1a6b1a\" stroke-width=\"1\" marker-end=\"url(#tip)\"/>\n";
            }
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dplane
