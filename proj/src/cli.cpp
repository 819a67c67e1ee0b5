#include "dplane/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dplane/afpp.hpp"
#include "dplane/convexity.hpp"
#include "dplane/curves.hpp"
#include "dplane/errors.hpp"
#include "dplane/fixtures.hpp"
#include "dplane/grid_io.hpp"
#include "dplane/retract.hpp"
#include "dplane/svg_render.hpp"

namespace dplane {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUndecided = 2;
constexpr int kUsage = 64;
constexpr int kBadData = 65;
constexpr int kNoInput = 66;
constexpr int kInternal = 70;

struct io_failure : error {
    using error::error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_failure("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_failure("cannot write file: " + path);
    out << content;
}

PointSet load_image(const std::string& path) {
    return parse_image(read_file(path));
}

void emit(std::ostream& out, const nlohmann::ordered_json& j) {
    out << j.dump(2) << "\n";
}

int cmd_info(const std::string& file, Adjacency kind, bool json, std::ostream& out) {
    const PointSet pts = load_image(file);
    const DigitalImage image{pts, kind};
    const bool connected = is_connected(image);
    const std::size_t parts = components(pts, kind).size();
    std::size_t holes_c1 = 0;
    std::size_t holes_c2 = 0;
    if (!pts.empty()) {
        for (const Component& c : complement_components(pts, Adjacency::c1).components)
            if (!c.unbounded) ++holes_c1;
        for (const Component& c : complement_components(pts, Adjacency::c2).components)
            if (!c.unbounded) ++holes_c2;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "info";
        j["adjacency"] = to_string(kind);
        j["points"] = pts.size();
        if (!pts.empty()) {
            const Box box = bounding_box(pts);
            j["bbox"] = {{"min", point_to_json({box.min_x, box.min_y})},
                         {"max", point_to_json({box.max_x, box.max_y})}};
        }
        j["connected"] = connected;
        j["components"] = parts;
        j["holes_c1"] = holes_c1;
        j["holes_c2"] = holes_c2;
        emit(out, j);
        return kOk;
    }
    out << "points: " << pts.size() << "\n";
    out << "adjacency: " << to_string(kind) << "\n";
    if (!pts.empty()) {
        const Box box = bounding_box(pts);
        out << "bounding box: [" << box.min_x << "," << box.max_x << "] x [" << box.min_y << ","
            << box.max_y << "]\n";
    }
    out << "connected: " << (connected ? "yes" : "no") << "\n";
    out << "components: " << parts << "\n";
    out << "holes (c1): " << holes_c1 << "\n";
    out << "holes (c2): " << holes_c2 << "\n";
    return kOk;
}

int cmd_convex(const std::string& file, bool json, std::ostream& out) {
    const PointSet pts = load_image(file);
    const ConvexityCertificate cert = is_digitally_convex(pts);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "convex";
        j["certificate"] = certificate_to_json(cert);
        emit(out, j);
        return cert.convex ? kOk : kNegative;
    }
    if (cert.convex) {
        out << "digitally convex: yes (" << to_string(*cert.shape) << ")\n";
        if (cert.segment)
            out << "segment: " << to_string(cert.segment->orientation) << " from ("
                << cert.segment->a.x << "," << cert.segment->a.y << ") to (" << cert.segment->b.x
                << "," << cert.segment->b.y << ")\n";
        if (cert.hull) {
            out << "hull vertices:";
            for (Point v : cert.hull->vertices) out << " (" << v.x << "," << v.y << ")";
            out << "\n";
        }
        if (cert.curve) out << "bounding curve points: " << cert.curve->size() << "\n";
        return kOk;
    }
    out << "digitally convex: no\n";
    out << "failed condition: " << cert.failure << "\n";
    return kNegative;
}

int cmd_bounding(const std::string& file, bool json, std::ostream& out) {
    const PointSet pts = load_image(file);
    const BoundingCurveSet curves = canonical_bounding_curves(pts);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "bounding";
        auto arr = nlohmann::ordered_json::array();
        for (const Curve& s : curves.curves) arr.push_back(curve_to_json(s));
        j["curves"] = arr;
        emit(out, j);
        return kOk;
    }
    out << "bounding curves: " << curves.curves.size() << "\n";
    for (std::size_t i = 0; i < curves.curves.size(); ++i) {
        const Curve& s = curves.curves[i];
        out << "curve " << (i + 1) << (i == 0 ? " (outer)" : "") << ", " << s.size()
            << " points:\n";
        out << format_curve(s);
    }
    return kOk;
}

int cmd_retract(const std::string& x_file, const std::string& y_file, bool json,
                const std::string& svg_file, std::ostream& out) {
    const PointSet x = load_image(x_file);
    const PointSet y = load_image(y_file);

    const bool thin = x.size() == 1 || classify_segment(x, Adjacency::c2).has_value();
    nlohmann::ordered_json j;
    j["command"] = "retract";
    if (thin) {
        const PointMap r = thin_convex_retraction(x, y);
        if (!svg_file.empty())
            write_file(svg_file, render_svg(y, {.arrows = &r, .curve = nullptr, .hull = nullptr}));
        if (json) {
            j["construction"] = "thin";
            j["map"] = map_to_json(r);
            emit(out, j);
            return kOk;
        }
        out << "construction: clamp onto point or segment\n";
        out << format_map_table(r);
        return kOk;
    }

    const DiskRetraction r = convex_disk_retraction(x, y);
    if (!svg_file.empty())
        write_file(svg_file, render_svg(y, {.arrows = &r.map, .curve = &r.certificate.curve,
                                            .hull = nullptr}));
    if (json) {
        j["construction"] = "disk";
        const RetractionCertificate& c = r.certificate;
        j["certificate"] = {{"min_col", c.min_col},
                            {"max_col", c.max_col},
                            {"left", point_set_to_json(c.left)},
                            {"right", point_set_to_json(c.right)},
                            {"left_span", nlohmann::ordered_json::array({c.left_low, c.left_high})},
                            {"right_span",
                             nlohmann::ordered_json::array({c.right_low, c.right_high})},
                            {"curve", curve_to_json(c.curve)}};
        j["map"] = map_to_json(r.map);
        emit(out, j);
        return kOk;
    }
    const RetractionCertificate& c = r.certificate;
    out << "construction: convex disk retraction\n";
    out << "columns: " << c.min_col << " .. " << c.max_col << "\n";
    out << "left span: " << c.left_low << " .. " << c.left_high << "\n";
    out << "right span: " << c.right_low << " .. " << c.right_high << "\n";
    out << "curve points: " << c.curve.size() << "\n";
    out << format_map_table(r.map);
    return kOk;
}

int cmd_afpp(const std::string& file, Adjacency kind, std::uint64_t budget, bool json,
             std::ostream& out) {
    const PointSet pts = load_image(file);
    const DigitalImage image{pts, kind};
    const AfppVerdict verdict = analyze_afpp(image, budget);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "afpp";
        j["adjacency"] = to_string(kind);
        j["points"] = pts.size();
        j["verdict"] = verdict_to_json(verdict);
        emit(out, j);
    } else {
        out << "verdict: " << to_string(verdict.outcome) << "\n";
        out << "nodes explored: " << verdict.nodes_explored << " / " << verdict.budget << "\n";
        if (verdict.witness) {
            out << "witness (" << (verdict.witness_constructed ? "constructed from a hole boundary"
                                                               : "found by search")
                << "):\n";
            out << format_map_table(*verdict.witness);
        }
    }
    switch (verdict.outcome) {
        case AfppOutcome::has_afpp: return kOk;
        case AfppOutcome::lacks_afpp: return kNegative;
        case AfppOutcome::unknown: return kUndecided;
    }
    return kInternal;
}

PointMap curve_map_from_spec(const Curve& s, const std::string& spec) {
    if (spec == "reflect") {
        const Box box = bounding_box(s.point_set());
        return point_reflection(s, {box.min_x + box.max_x, box.min_y + box.max_y});
    }
    if (spec.rfind("shift:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(spec.substr(6));
        } catch (const std::exception&) {
            throw domain_error("construct: bad shift amount in '" + spec + "'");
        }
        return cycle_shift_map(s, k);
    }
    throw domain_error("construct: unknown curve map '" + spec + "' (expected reflect or shift:k)");
}

int cmd_construct(const std::string& x_file, const std::string& hole_file,
                  const std::string& map_spec, bool json, std::ostream& out) {
    const PointSet x = load_image(x_file);
    const PointSet xp = load_image(hole_file);
    const Curve s = trace_bounding_curve(xp);
    const PointMap f = curve_map_from_spec(s, map_spec);
    const PointMap witness = construct_no_afp_map(x, xp, f);
    const std::size_t afp = approximate_fixed_points(witness).size();
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "construct";
        j["curve_map"] = map_spec;
        j["approximate_fixed_points"] = afp;
        j["map"] = map_to_json(witness);
        emit(out, j);
        return kOk;
    }
    out << "constructed self-map on " << witness.domain.points.size() << " points\n";
    out << "approximate fixed points: " << afp << "\n";
    out << format_map_table(witness);
    return kOk;
}

int cmd_examples(const std::string& name, const std::string& out_dir, bool json,
                 std::ostream& out) {
    std::vector<std::string> written;
    const std::string prefix = out_dir.empty() ? std::string{} : out_dir + "/";
    if (name == "fig1") {
        const OctagonExample example = octagon_retraction_example();
        const DiskRetraction r = convex_disk_retraction(example.disk, example.rect);
        write_file(prefix + "fig1_disk.grid", format_image(example.disk));
        write_file(prefix + "fig1_rect.grid", format_image(example.rect));
        write_file(prefix + "fig1_retraction.map", format_map_table(r.map));
        write_file(prefix + "fig1.svg",
                   render_svg(example.rect, {.arrows = &r.map, .curve = &r.certificate.curve,
                                             .hull = nullptr}));
        written = {prefix + "fig1_disk.grid", prefix + "fig1_rect.grid",
                   prefix + "fig1_retraction.map", prefix + "fig1.svg"};
    } else if (name == "fig2") {
        const PointSet image = punctured_square_image();
        write_file(prefix + "fig2_image.grid", format_image(image));
        write_file(prefix + "fig2.svg", render_svg(image));
        written = {prefix + "fig2_image.grid", prefix + "fig2.svg"};
    } else if (name == "ex3.6") {
        const NoAfpExample example = punctured_square_example();
        write_file(prefix + "ex3_6.grid", format_image(example.image.points));
        write_file(prefix + "ex3_6_witness.map", format_map_table(example.map));
        written = {prefix + "ex3_6.grid", prefix + "ex3_6_witness.map"};
    } else {
        throw domain_error("examples: unknown name '" + name +
                           "' (expected fig1, fig2, or ex3.6)");
    }
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "examples";
        j["name"] = name;
        j["files"] = written;
        emit(out, j);
        return kOk;
    }
    for (const std::string& file : written) out << "wrote " << file << "\n";
    return kOk;
}

int cmd_render(const std::string& file, const std::string& svg_file, bool json,
               std::ostream& out) {
    const PointSet pts = load_image(file);
    if (!svg_file.empty()) write_file(svg_file, render_svg(pts));
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "render";
        j["grid"] = format_image(pts);
        if (!svg_file.empty()) j["svg_file"] = svg_file;
        emit(out, j);
        return kOk;
    }
    out << format_image(pts);
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"digital plane topology toolkit", "dplane"};
    app.require_subcommand(1);
    bool json = false;

    auto* info = app.add_subcommand("info", "report the structure of a grid image");
    std::string info_file;
    std::string info_adj = "c2";
    info->add_option("image", info_file, "grid file")->required();
    info->add_option("--adj", info_adj, "adjacency kind")->check(CLI::IsMember({"c1", "c2"}));
    info->add_flag("--json", json, "machine-readable output");

    auto* convex = app.add_subcommand("convex", "decide digital convexity");
    std::string convex_file;
    convex->add_option("image", convex_file, "grid file")->required();
    convex->add_flag("--json", json, "machine-readable output");

    auto* bounding = app.add_subcommand("bounding", "canonical bounding curve set");
    std::string bounding_file;
    bounding->add_option("image", bounding_file, "grid file")->required();
    bounding->add_flag("--json", json, "machine-readable output");

    auto* retract = app.add_subcommand("retract", "retraction of Y onto a convex X");
    std::string retract_x;
    std::string retract_y;
    std::string retract_svg;
    retract->add_option("x", retract_x, "grid file for the convex subset X")->required();
    retract->add_option("y", retract_y, "grid file for the superset Y")->required();
    retract->add_option("--svg", retract_svg, "write an arrow diagram to this file");
    retract->add_flag("--json", json, "machine-readable output");

    auto* afpp = app.add_subcommand("afpp", "approximate fixed point property");
    std::string afpp_file;
    std::string afpp_adj = "c2";
    std::uint64_t afpp_budget = default_afpp_budget;
    afpp->add_option("image", afpp_file, "grid file")->required();
    afpp->add_option("--adj", afpp_adj, "adjacency kind")->check(CLI::IsMember({"c1", "c2"}));
    afpp->add_option("--budget", afpp_budget, "search node budget");
    afpp->add_flag("--json", json, "machine-readable output");

    auto* construct = app.add_subcommand("construct", "build a fixed-point-free self-map");
    std::string construct_x;
    std::string construct_hole;
    std::string construct_map;
    construct->add_option("x", construct_x, "grid file for the image X")->required();
    construct->add_option("--hole", construct_hole, "grid file for the convex disk around a hole")
        ->required();
    construct->add_option("--map", construct_map, "curve self-map: reflect or shift:k")
        ->required();
    construct->add_flag("--json", json, "machine-readable output");

    auto* examples = app.add_subcommand("examples", "write bundled example files");
    std::string examples_name;
    std::string examples_dir = ".";
    examples->add_option("name", examples_name, "fig1, fig2, or ex3.6")->required();
    examples->add_option("--out", examples_dir, "output directory");
    examples->add_flag("--json", json, "machine-readable output");

    auto* render = app.add_subcommand("render", "print the canonical grid, optionally as SVG");
    std::string render_file;
    std::string render_svg_file;
    render->add_option("image", render_file, "grid file")->required();
    render->add_option("--svg", render_svg_file, "write an SVG diagram to this file");
    render->add_flag("--json", json, "machine-readable output");

    std::vector<const char*> argv;
    argv.push_back("dplane");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*info) return cmd_info(info_file, adjacency_from_string(info_adj), json, out);
        if (*convex) return cmd_convex(convex_file, json, out);
        if (*bounding) return cmd_bounding(bounding_file, json, out);
        if (*retract) return cmd_retract(retract_x, retract_y, json, retract_svg, out);
        if (*afpp)
            return cmd_afpp(afpp_file, adjacency_from_string(afpp_adj), afpp_budget, json, out);
        if (*construct) return cmd_construct(construct_x, construct_hole, construct_map, json, out);
        if (*examples) return cmd_examples(examples_name, examples_dir, json, out);
        if (*render) return cmd_render(render_file, render_svg_file, json, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kBadData;
    } catch (const io_failure& e) {
        err << e.what() << "\n";
        return kNoInput;
    } catch (const domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kBadData;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const error& e) {
        err << e.what() << "\n";
        return kNegative;
    }
    return kUsage;
}

}  // namespace dplane
