// Acceptance suite: one pass/fail line per criterion, exit code counts the
// failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "dplane/afpp.hpp"
#include "dplane/cli.hpp"
#include "dplane/convexity.hpp"
#include "dplane/curves.hpp"
#include "dplane/fixtures.hpp"
#include "dplane/grid_io.hpp"
#include "dplane/retract.hpp"
#include "dplane/svg_render.hpp"
#include "support/test_support.hpp"

using namespace dplane;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. The punctured square example: 44 points, continuous composed map,
//    no approximate fixed point anywhere, under one second.
bool criterion_example(std::string& detail) {
    const auto start = Clock::now();
    const NoAfpExample example = punctured_square_example();
    const bool size_ok = example.image.points.size() == 44;
    const bool continuous = is_continuous(example.map);
    const bool total = example.map.table.size() == 44;
    std::size_t afp_free = 0;
    for (Point p : example.image.points)
        if (!adjacent_or_equal(p, example.map(p), Adjacency::c2)) ++afp_free;
    const bool no_afp = approximate_fixed_points(example.map).empty() && afp_free == 44;
    const double elapsed = seconds_since(start);
    std::ostringstream s;
    s << "44 points: " << (size_ok ? "yes" : "NO") << ", continuous: "
      << (continuous ? "yes" : "NO") << ", approximate fixed points: " << (44 - afp_free)
      << ", " << elapsed << "s";
    detail = s.str();
    return size_ok && continuous && total && no_afp && elapsed < 1.0;
}

// 2. Generated convex disks in rectangles: the retraction passes the
//    retraction predicate, is idempotent, and maps everything outside the
//    interior exactly onto the curve.
bool criterion_retraction_suite(std::string& detail) {
    const auto start = Clock::now();
    std::mt19937 rng(160493);
    int produced = 0;
    int failures = 0;
    while (produced < 200) {
        auto disk = testing::random_convex_disk(rng);
        if (!disk) continue;
        ++produced;
        const PointSet rect = testing::random_rect_containing(rng, *disk);
        const DiskRetraction r = convex_disk_retraction(*disk, rect);

        bool ok = is_retraction(r.map, {*disk, Adjacency::c2});
        ok = ok && compose(r.map, r.map).table == r.map.table;
        const PointSet curve = r.certificate.curve.point_set();
        const PointSet interior = set_difference(*disk, curve);
        PointSet outside_image;
        for (const auto& [p, q] : r.map.table)
            if (!interior.contains(p)) outside_image.insert(q);
        ok = ok && outside_image == curve;
        if (!ok) ++failures;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream s;
    s << produced << " disks, " << failures << " failures, " << elapsed << "s";
    detail = s.str();
    return produced >= 200 && failures == 0 && elapsed < 30.0;
}

// 3. Search oracle versus the naive filter over all |X|^|X| maps, for every
//    connected set of at most 6 points under both adjacencies.
bool criterion_oracle_vs_brute_force(std::string& detail) {
    const auto start = Clock::now();
    std::size_t checked = 0;
    std::size_t disagreements = 0;
    std::size_t c1_count = 0;
    std::size_t c2_count = 0;
    for (Adjacency kind : {Adjacency::c1, Adjacency::c2}) {
        const auto sets = testing::connected_sets_up_to(kind, 6);
        (kind == Adjacency::c1 ? c1_count : c2_count) = sets.size();
        for (const PointSet& s : sets) {
            const AfppVerdict verdict = check_afpp_exhaustive({s, kind});
            if (verdict.outcome == AfppOutcome::unknown) {
                ++disagreements;
                continue;
            }
            const bool lacks = verdict.outcome == AfppOutcome::lacks_afpp;
            if (lacks != testing::brute_force_lacks_afpp(s, kind)) ++disagreements;
            ++checked;
        }
    }
    // known counts of translation classes with up to 6 cells
    const bool counts_ok = c1_count == 307 && c2_count == 4605;
    const double elapsed = seconds_since(start);
    std::ostringstream s;
    s << checked << " sets (c1 " << c1_count << ", c2 " << c2_count << "), " << disagreements
      << " disagreements, " << elapsed << "s";
    detail = s.str();
    return counts_ok && disagreements == 0;
}

// 4. Known verdicts inside the default budget: intervals, the 3x3 square,
//    the unit square, and the short simple closed curves with the shift-two
//    witness.
bool criterion_known_verdicts(std::string& detail) {
    std::ostringstream s;
    bool ok = true;

    for (int n = 1; n <= 6; ++n) {
        const AfppVerdict v = check_afpp_exhaustive({filled_rect({0, 0}, {n, 0}), Adjacency::c1});
        if (v.outcome != AfppOutcome::has_afpp) {
            ok = false;
            s << "interval [0," << n << "] not HAS; ";
        }
    }
    if (check_afpp_exhaustive({filled_rect({0, 0}, {2, 2}), Adjacency::c2}).outcome !=
        AfppOutcome::has_afpp) {
        ok = false;
        s << "3x3 square not HAS; ";
    }
    if (check_afpp_exhaustive({filled_rect({0, 0}, {1, 1}), Adjacency::c1}).outcome !=
        AfppOutcome::lacks_afpp) {
        ok = false;
        s << "unit square not LACKS; ";
    }

    int curves = 0;
    for (int m = 4; m <= 10; ++m) {
        const auto curve = testing::first_simple_closed_curve(Adjacency::c2, m);
        if (!curve) {
            s << "no c2 curve with " << m << " points exists; ";
            continue;
        }
        ++curves;
        const AfppVerdict v = check_afpp_exhaustive({curve->point_set(), Adjacency::c2});
        if (v.outcome != AfppOutcome::lacks_afpp) {
            ok = false;
            s << "curve m=" << m << " not LACKS; ";
            continue;
        }
        const PointMap shift = cycle_shift_map(*curve, 2);
        if (!is_continuous(shift) || !approximate_fixed_points(shift).empty()) {
            ok = false;
            s << "shift witness failed at m=" << m << "; ";
        }
    }
    ok = ok && curves >= 6;
    s << "verdicts reproduced on intervals, squares, and " << curves << " curves";
    detail = s.str();
    return ok;
}

// 5. Convex spot checks: the oracle never reports a failure on a digitally
//    convex image, and decides the small ones positively.
bool criterion_convex_spot_checks(std::string& detail) {
    const std::vector<std::pair<std::string, PointSet>> images = {
        {"singleton", {{5, 5}}},
        {"horizontal segment", filled_rect({0, 0}, {3, 0})},
        {"vertical segment", filled_rect({0, 0}, {0, 2})},
        {"slanted segment", {{0, 0}, {1, 1}, {2, 2}}},
        {"3x3 square", filled_rect({0, 0}, {2, 2})},
        {"3x4 rectangle", filled_rect({0, 0}, {2, 3})},
        {"radius-2 diamond", diamond_disk(2)},
        {"clipped square", set_union(filled_rect({0, 0}, {2, 2}), PointSet{{3, 1}})},
        {"hexagonal disk", octagon_retraction_example().disk},
        {"radius-3 diamond", diamond_disk(3)},
    };
    std::ostringstream s;
    bool ok = true;
    int decided = 0;
    for (const auto& [name, points] : images) {
        if (!is_digitally_convex(points).convex) {
            ok = false;
            s << name << " is not digitally convex; ";
            continue;
        }
        const AfppVerdict v = check_afpp_exhaustive({points, Adjacency::c2});
        if (v.outcome == AfppOutcome::lacks_afpp) {
            ok = false;
            s << name << " reported LACKS; ";
        }
        if (points.size() <= 13) {
            if (v.outcome != AfppOutcome::has_afpp) {
                ok = false;
                s << name << " (" << points.size() << " points) not decided HAS; ";
            } else {
                ++decided;
            }
        }
    }
    s << images.size() << " images, " << decided << " small ones decided HAS";
    detail = s.str();
    return ok;
}

// 6. Jordan property on generated simple closed curves of both kinds.
bool criterion_jordan_suite(std::string& detail) {
    std::mt19937 rng(271828);
    int produced = 0;
    int failures = 0;
    const std::vector<std::pair<Adjacency, std::vector<int>>> plans = {
        {Adjacency::c1, {8, 10, 12, 14, 16}},
        {Adjacency::c2, {4, 6, 7, 8, 9, 10, 11, 12, 14}},
    };
    for (const auto& [kind, lengths] : plans) {
        int want = 50;
        int attempts = 0;
        while (want > 0 && attempts < 4000) {
            ++attempts;
            const int length = lengths[rng() % lengths.size()];
            auto curve = testing::random_simple_closed_curve(rng, kind, length);
            if (!curve) continue;
            ++produced;
            --want;
            const JordanPartition partition = jordan_components(*curve);
            const ComponentDecomposition comps =
                complement_components(curve->point_set(), dual(kind));
            const bool two = comps.size() == 2 && !comps.components[0].unbounded &&
                             comps.components[1].unbounded;
            if (!two || partition.interior.empty()) ++failures;
        }
    }
    std::ostringstream s;
    s << produced << " curves, " << failures << " failures";
    detail = s.str();
    return produced >= 100 && failures == 0;
}

// 7. Convexity certificates on the named fixtures, with the hull
//    rasterization cross-check on every accepted disk.
bool criterion_certificates(std::string& detail) {
    std::ostringstream s;
    bool ok = true;

    const PointSet diamond = diamond_disk(2);
    const PointSet square = filled_rect({0, 0}, {2, 2});
    const PointSet ring = set_difference(diamond_disk(2), diamond_disk(1));
    const PointSet bent = set_union(filled_rect({0, 0}, {4, 2}), filled_rect({0, 0}, {2, 4}));

    for (const auto& [name, points] : {std::pair{std::string("diamond"), diamond},
                                       {std::string("square"), square}}) {
        const ConvexityCertificate cert = is_digitally_convex(points);
        if (!cert.convex || cert.shape != ConvexShape::disk) {
            ok = false;
            s << name << " rejected; ";
            continue;
        }
        if (hull_lattice_points(*cert.hull) != points || cert.hull_raster_equal != true) {
            ok = false;
            s << name << " fails the hull rasterization cross-check; ";
        }
    }

    const ConvexityCertificate ring_cert = is_digitally_convex(ring);
    if (ring_cert.convex ||
        ring_cert.failure != "not a single point, a digital line segment, or a digital disk") {
        ok = false;
        s << "bare curve not rejected with the disk condition; ";
    }
    const ConvexityCertificate bent_cert = is_digitally_convex(bent);
    if (bent_cert.convex ||
        bent_cert.failure !=
            "endpoints of the maximal segments of the bounding curve differ from the hull "
            "vertices") {
        ok = false;
        s << "L-shape not rejected with the endpoint condition; ";
    }
    s << "accepted: diamond, square; rejected: bare curve, L-shape, each with its condition";
    detail = s.str();
    return ok;
}

// 8. Byte-identical JSON and SVG outputs across repeated runs.
bool criterion_determinism(std::string& detail) {
    const auto render_all = [] {
        std::vector<std::string> outputs;
        outputs.push_back(render_svg(diamond_disk(2)));
        outputs.push_back(render_svg(punctured_square_image()));

        const OctagonExample octagon = octagon_retraction_example();
        const DiskRetraction r = convex_disk_retraction(octagon.disk, octagon.rect);
        outputs.push_back(render_svg(octagon.rect, {.arrows = &r.map,
                                                    .curve = &r.certificate.curve,
                                                    .hull = nullptr}));

        const NoAfpExample example = punctured_square_example();
        outputs.push_back(verdict_to_json(analyze_afpp(example.image, 2000)).dump(2));
        outputs.push_back(certificate_to_json(is_digitally_convex(diamond_disk(3))).dump(2));
        outputs.push_back(map_to_json(example.map).dump(2));
        outputs.push_back(image_to_json(example.image).dump(2));
        outputs.push_back(format_image(octagon.disk));
        return outputs;
    };
    const auto first = render_all();
    const auto second = render_all();
    const bool ok = first == second;
    std::ostringstream s;
    s << first.size() << " documents compared" << (ok ? ", all byte-identical" : ", MISMATCH");
    detail = s.str();
    return ok;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"punctured square example reproduced", criterion_example},
        {"retraction property suite (200 random convex disks)", criterion_retraction_suite},
        {"oracle matches naive enumeration up to 6 points", criterion_oracle_vs_brute_force},
        {"known verdicts reproduced within budget", criterion_known_verdicts},
        {"convex images never fail the property", criterion_convex_spot_checks},
        {"jordan partition on generated curves", criterion_jordan_suite},
        {"convexity certificates on the named fixtures", criterion_certificates},
        {"deterministic json and svg output", criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].second(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].first << " — " << detail << "\n";
    }
    return failures;
}
