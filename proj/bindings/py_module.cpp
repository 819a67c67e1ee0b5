#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <utility>
#include <vector>

#include "dplane/afpp.hpp"
#include "dplane/convexity.hpp"
#include "dplane/curves.hpp"
#include "dplane/errors.hpp"
#include "dplane/fixtures.hpp"
#include "dplane/grid_io.hpp"
#include "dplane/lattice.hpp"
#include "dplane/maps.hpp"
#include "dplane/retract.hpp"
#include "dplane/svg_render.hpp"

namespace py = pybind11;

namespace {

using XY = std::pair<int, int>;
using Table = std::map<XY, XY>;

dplane::Point to_point(const XY& p) {
    return {p.first, p.second};
}

XY from_point(dplane::Point p) {
    return {p.x, p.y};
}

dplane::PointSet to_set(const std::vector<XY>& pts) {
    dplane::PointSet out;
    for (const XY& p : pts) out.insert(to_point(p));
    return out;
}

std::vector<XY> from_set(const dplane::PointSet& pts) {
    std::vector<XY> out;
    out.reserve(pts.size());
    for (dplane::Point p : pts) out.push_back(from_point(p));
    return out;
}

std::vector<XY> from_seq(const std::vector<dplane::Point>& pts) {
    std::vector<XY> out;
    out.reserve(pts.size());
    for (dplane::Point p : pts) out.push_back(from_point(p));
    return out;
}

dplane::Adjacency to_adjacency(const std::string& kind) {
    return dplane::adjacency_from_string(kind);
}

dplane::DigitalImage to_image(const std::vector<XY>& pts, const std::string& kind) {
    return {to_set(pts), to_adjacency(kind)};
}

dplane::PointMap to_map(const std::vector<XY>& domain, const std::vector<XY>& codomain,
                        const std::string& kind, const Table& table) {
    dplane::PointMap f{to_image(domain, kind), to_image(codomain, kind), {}};
    for (const auto& [p, q] : table) f.table.emplace(to_point(p), to_point(q));
    return f;
}

Table from_map(const dplane::PointMap& f) {
    Table out;
    for (const auto& [p, q] : f.table) out.emplace(from_point(p), from_point(q));
    return out;
}

dplane::Curve to_curve(const std::vector<XY>& pts, const std::string& kind) {
    dplane::Curve s;
    s.kind = to_adjacency(kind);
    for (const XY& p : pts) s.points.push_back(to_point(p));
    return s;
}

py::dict certificate_dict(const dplane::ConvexityCertificate& cert) {
    py::dict out;
    out["convex"] = cert.convex;
    out["shape"] = cert.shape ? py::object(py::str(dplane::to_string(*cert.shape)))
                              : py::object(py::none());
    if (cert.curve) out["curve"] = from_seq(cert.curve->points);
    if (cert.hull) out["hull_vertices"] = from_seq(cert.hull->vertices);
    if (cert.hull_raster_equal) out["hull_raster_equal"] = *cert.hull_raster_equal;
    out["failure"] = cert.convex ? py::object(py::none()) : py::object(py::str(cert.failure));
    return out;
}

py::dict verdict_dict(const dplane::AfppVerdict& verdict) {
    py::dict out;
    out["outcome"] = dplane::to_string(verdict.outcome);
    out["nodes_explored"] = verdict.nodes_explored;
    out["budget"] = verdict.budget;
    if (verdict.witness) {
        out["witness"] = from_map(*verdict.witness);
        out["witness_source"] = verdict.witness_constructed ? "constructed" : "search";
    } else {
        out["witness"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_dplane, m) {
    m.doc() = "digital plane topology: adjacency, curves, convexity, retractions, "
              "approximate fixed points";

    py::register_exception<dplane::error>(m, "DplaneError");

    m.def(
        "adjacent",
        [](const XY& p, const XY& q, const std::string& kind) {
            return dplane::adjacent(to_point(p), to_point(q), to_adjacency(kind));
        },
        py::arg("p"), py::arg("q"), py::arg("adjacency") = "c2");

    m.def(
        "closed_neighborhood",
        [](const std::vector<XY>& pts, const XY& p, const std::string& kind) {
            return from_set(dplane::closed_neighborhood(to_image(pts, kind), to_point(p)));
        },
        py::arg("points"), py::arg("point"), py::arg("adjacency") = "c2");

    m.def(
        "is_connected",
        [](const std::vector<XY>& pts, const std::string& kind) {
            return dplane::is_connected(to_set(pts), to_adjacency(kind));
        },
        py::arg("points"), py::arg("adjacency") = "c2");

    m.def(
        "components",
        [](const std::vector<XY>& pts, const std::string& kind) {
            std::vector<std::vector<XY>> out;
            for (const auto& comp : dplane::components(to_set(pts), to_adjacency(kind)).components)
                out.push_back(from_set(comp.points));
            return out;
        },
        py::arg("points"), py::arg("adjacency") = "c2");

    m.def(
        "complement_components",
        [](const std::vector<XY>& pts, const std::string& kind) {
            std::vector<std::pair<std::vector<XY>, bool>> out;
            for (const auto& comp :
                 dplane::complement_components(to_set(pts), to_adjacency(kind)).components)
                out.emplace_back(from_set(comp.points), comp.unbounded);
            return out;
        },
        py::arg("points"), py::arg("adjacency") = "c2");

    m.def(
        "is_continuous",
        [](const std::vector<XY>& domain, const std::vector<XY>& codomain,
           const std::string& kind, const Table& table) {
            return dplane::is_continuous(to_map(domain, codomain, kind, table));
        },
        py::arg("domain"), py::arg("codomain"), py::arg("adjacency"), py::arg("table"));

    m.def(
        "is_retraction",
        [](const std::vector<XY>& domain, const std::vector<XY>& target, const std::string& kind,
           const Table& table) {
            return dplane::is_retraction(to_map(domain, domain, kind, table),
                                         to_image(target, kind));
        },
        py::arg("domain"), py::arg("target"), py::arg("adjacency"), py::arg("table"));

    m.def(
        "is_closed_curve",
        [](const std::vector<XY>& seq, const std::string& kind) {
            std::vector<dplane::Point> pts;
            for (const XY& p : seq) pts.push_back(to_point(p));
            return dplane::is_closed_curve(pts, to_adjacency(kind));
        },
        py::arg("sequence"), py::arg("adjacency") = "c2");

    m.def(
        "is_simple_closed_curve",
        [](const std::vector<XY>& seq, const std::string& kind) {
            return dplane::is_simple_closed_curve(to_curve(seq, kind));
        },
        py::arg("sequence"), py::arg("adjacency") = "c2");

    m.def(
        "jordan_interior",
        [](const std::vector<XY>& seq, const std::string& kind) {
            return from_set(dplane::jordan_components(to_curve(seq, kind)).interior);
        },
        py::arg("sequence"), py::arg("adjacency") = "c2");

    m.def(
        "trace_bounding_curve",
        [](const std::vector<XY>& pts) {
            return from_seq(dplane::trace_bounding_curve(to_set(pts)).points);
        },
        py::arg("points"));

    m.def(
        "is_disk",
        [](const std::vector<XY>& pts) -> py::object {
            auto curve = dplane::disk_certificate(to_set(pts));
            if (!curve) return py::none();
            return py::cast(from_seq(curve->points));
        },
        py::arg("points"));

    m.def(
        "convex_hull",
        [](const std::vector<XY>& pts) {
            return from_seq(dplane::convex_hull(to_set(pts)).vertices);
        },
        py::arg("points"));

    m.def(
        "is_digitally_convex",
        [](const std::vector<XY>& pts) {
            return certificate_dict(dplane::is_digitally_convex(to_set(pts)));
        },
        py::arg("points"));

    m.def(
        "convex_disk_retraction",
        [](const std::vector<XY>& x, const std::vector<XY>& y) {
            const dplane::DiskRetraction r = dplane::convex_disk_retraction(to_set(x), to_set(y));
            py::dict out;
            out["map"] = from_map(r.map);
            out["curve"] = from_seq(r.certificate.curve.points);
            out["min_col"] = r.certificate.min_col;
            out["max_col"] = r.certificate.max_col;
            out["left_span"] = std::pair{r.certificate.left_low, r.certificate.left_high};
            out["right_span"] = std::pair{r.certificate.right_low, r.certificate.right_high};
            return out;
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "hole_retraction",
        [](const std::vector<XY>& x, const std::vector<XY>& xp) {
            return from_map(dplane::hole_retraction(to_set(x), to_set(xp)));
        },
        py::arg("x"), py::arg("xp"));

    m.def(
        "thin_convex_retraction",
        [](const std::vector<XY>& x, const std::vector<XY>& y) {
            return from_map(dplane::thin_convex_retraction(to_set(x), to_set(y)));
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "approximate_fixed_points",
        [](const std::vector<XY>& domain, const std::string& kind, const Table& table) {
            return from_set(
                dplane::approximate_fixed_points(to_map(domain, domain, kind, table)));
        },
        py::arg("domain"), py::arg("adjacency"), py::arg("table"));

    m.def(
        "check_afpp",
        [](const std::vector<XY>& pts, const std::string& kind, std::uint64_t budget) {
            return verdict_dict(dplane::check_afpp_exhaustive(to_image(pts, kind), budget));
        },
        py::arg("points"), py::arg("adjacency") = "c2",
        py::arg("budget") = dplane::default_afpp_budget);

    m.def(
        "analyze_afpp",
        [](const std::vector<XY>& pts, const std::string& kind, std::uint64_t budget) {
            return verdict_dict(dplane::analyze_afpp(to_image(pts, kind), budget));
        },
        py::arg("points"), py::arg("adjacency") = "c2",
        py::arg("budget") = dplane::default_afpp_budget);

    m.def(
        "construct_no_afp_map",
        [](const std::vector<XY>& x, const std::vector<XY>& xp, const std::string& map_spec) {
            const dplane::PointSet hole_disk = to_set(xp);
            const dplane::Curve s = dplane::trace_bounding_curve(hole_disk);
            dplane::PointMap f{{}, {}, {}};
            if (map_spec == "reflect") {
                const dplane::Box box = dplane::bounding_box(s.point_set());
                f = dplane::point_reflection(
                    s, {box.min_x + box.max_x, box.min_y + box.max_y});
            } else if (map_spec.rfind("shift:", 0) == 0) {
                f = dplane::cycle_shift_map(s, std::stoi(map_spec.substr(6)));
            } else {
                throw dplane::domain_error("unknown curve map '" + map_spec + "'");
            }
            return from_map(dplane::construct_no_afp_map(to_set(x), hole_disk, f));
        },
        py::arg("x"), py::arg("xp"), py::arg("curve_map") = "reflect");

    m.def("punctured_square_example", []() {
        const dplane::NoAfpExample example = dplane::punctured_square_example();
        py::dict out;
        out["points"] = from_set(example.image.points);
        out["adjacency"] = dplane::to_string(example.image.adjacency);
        out["map"] = from_map(example.map);
        return out;
    });

    m.def("parse_grid", [](const std::string& text) { return from_set(dplane::parse_image(text)); },
          py::arg("text"));

    m.def(
        "format_grid",
        [](const std::vector<XY>& pts) { return dplane::format_image(to_set(pts)); },
        py::arg("points"));

    m.def(
        "render_svg",
        [](const std::vector<XY>& pts) { return dplane::render_svg(to_set(pts)); },
        py::arg("points"));
}
