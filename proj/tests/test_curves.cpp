#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dplane/curves.hpp"
#include "dplane/errors.hpp"
#include "dplane/fixtures.hpp"
#include "support/test_support.hpp"

using namespace dplane;

namespace {

const std::vector<Point> diamond8 = {{2, 0},  {1, 1},   {0, 2},  {-1, 1},
                                     {-2, 0}, {-1, -1}, {0, -2}, {1, -1}};
const std::vector<Point> diamond4 = {{0, 0}, {1, 1}, {2, 0}, {1, -1}};

Curve square_boundary_curve() {
    return trace_bounding_curve(filled_rect({0, 0}, {2, 2}));
}

}  // namespace

TEST_CASE("closed curve predicate") {
    CHECK(is_closed_curve(diamond8, Adjacency::c2));
    CHECK_FALSE(is_closed_curve(std::vector<Point>{{0, 0}, {2, 0}, {1, 1}}, Adjacency::c2));
    CHECK_FALSE(is_closed_curve(std::vector<Point>{{0, 0}, {1, 0}, {0, 0}, {1, 0}},
                                Adjacency::c2));
    CHECK_FALSE(is_closed_curve(std::vector<Point>{{0, 0}}, Adjacency::c2));
    CHECK_FALSE(is_closed_curve(std::vector<Point>{}, Adjacency::c2));
}

TEST_CASE("simple closed curve predicate") {
    CHECK(is_simple_closed_curve({diamond8, Adjacency::c2}));
    CHECK(is_simple_closed_curve({diamond4, Adjacency::c2}));

    // the unit square is a complete graph under c2: chords everywhere
    CHECK_FALSE(is_simple_closed_curve(
        {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Adjacency::c2}));
    // same four points under c1 are chord-free but below the c1 minimum of 8
    CHECK_FALSE(is_simple_closed_curve(
        {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Adjacency::c1}));

    const Curve square8 = square_boundary_curve();
    CHECK(is_simple_closed_curve({square8.points, Adjacency::c1}));
}

TEST_CASE("jordan partition of the standard curves") {
    const JordanPartition diamond = jordan_components({diamond8, Adjacency::c2});
    CHECK(diamond.dual_kind == Adjacency::c1);
    CHECK(diamond.interior == diamond_disk(1));

    const JordanPartition small = jordan_components({diamond4, Adjacency::c2});
    CHECK(small.interior == PointSet{{1, 0}});

    const Curve square8{square_boundary_curve().points, Adjacency::c1};
    const JordanPartition square = jordan_components(square8);
    CHECK(square.dual_kind == Adjacency::c2);
    CHECK(square.interior == PointSet{{1, 1}});

    CHECK_THROWS_AS(jordan_components({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Adjacency::c2}),
                    precondition_error);
}

TEST_CASE("boundary trace is canonical") {
    const Curve square = trace_bounding_curve(filled_rect({0, 0}, {2, 2}));
    const std::vector<Point> expected = {{0, 0}, {0, 1}, {0, 2}, {1, 2},
                                         {2, 2}, {2, 1}, {2, 0}, {1, 0}};
    CHECK(square.points == expected);

    const Curve diamond = trace_bounding_curve(diamond_disk(2));
    const std::vector<Point> expected_diamond = {{-2, 0}, {-1, 1},  {0, 2},  {1, 1},
                                                 {2, 0},  {1, -1}, {0, -2}, {-1, -1}};
    CHECK(diamond.points == expected_diamond);
}

TEST_CASE("boundary trace failure modes") {
    CHECK_THROWS_AS(trace_bounding_curve(filled_rect({0, 0}, {5, 0})), error);  // flat segment
    CHECK_THROWS_AS(trace_bounding_curve(PointSet{{4, 4}}), error);             // single point
    CHECK_THROWS_AS(trace_bounding_curve(PointSet{}), precondition_error);
    CHECK_THROWS_AS(trace_bounding_curve(PointSet{{0, 0}, {3, 3}}), precondition_error);
    // 2x2 square: traceable, but no lattice point is enclosed
    CHECK_THROWS_AS(trace_bounding_curve(filled_rect({0, 0}, {1, 1})), error);
}

TEST_CASE("trace encloses the set it was built from") {
    std::mt19937 rng(91);
    int produced = 0;
    while (produced < 25) {
        auto disk = testing::random_convex_disk(rng);
        if (!disk) continue;
        ++produced;
        const Curve s = trace_bounding_curve(*disk);
        const PointSet curve_points = s.point_set();
        CHECK(is_subset(curve_points, *disk));
        auto interior = bounding_curve_interior(curve_points);
        REQUIRE(interior);
        CHECK(is_subset(*disk, set_union(curve_points, *interior)));
    }
}

TEST_CASE("disk certificate") {
    const std::optional<Curve> diamond = disk_certificate(diamond_disk(2));
    REQUIRE(diamond);
    CHECK(diamond->size() == 8);
    CHECK(diamond->point_set() == set_difference(diamond_disk(2), diamond_disk(1)));

    const std::optional<Curve> square = disk_certificate(filled_rect({0, 0}, {2, 2}));
    REQUIRE(square);
    CHECK(square->size() == 8);

    // the bare ring is not a disk: its interior is missing
    CHECK_FALSE(disk_certificate(set_difference(diamond_disk(2), diamond_disk(1))));
    CHECK_FALSE(disk_certificate(PointSet{{0, 0}}));
}

TEST_CASE("jordan property for generated simple closed curves") {
    std::mt19937 rng(20240530);
    int checked = 0;
    const std::vector<std::pair<Adjacency, std::vector<int>>> plans = {
        {Adjacency::c1, {8, 10, 12, 14}},
        {Adjacency::c2, {4, 6, 7, 8, 9, 10, 12}},
    };
    for (const auto& [kind, lengths] : plans) {
        for (int length : lengths) {
            for (int i = 0; i < 4; ++i) {
                auto curve = testing::random_simple_closed_curve(rng, kind, length);
                if (!curve) continue;
                ++checked;
                const JordanPartition partition = jordan_components(*curve);
                CHECK(!partition.interior.empty());
                CHECK(!partition.exterior_sample.empty());
            }
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("rotation and reversal do not change curve verdicts") {
    std::mt19937 rng(555);
    auto curve = testing::random_simple_closed_curve(rng, Adjacency::c2, 8);
    REQUIRE(curve);
    const PointSet interior = jordan_components(*curve).interior;
    for (std::size_t shift = 0; shift < curve->size(); ++shift) {
        Curve rotated = *curve;
        std::rotate(rotated.points.begin(), rotated.points.begin() + shift,
                    rotated.points.end());
        CHECK(is_simple_closed_curve(rotated));
        CHECK(jordan_components(rotated).interior == interior);
        Curve reversed = rotated;
        std::reverse(reversed.points.begin(), reversed.points.end());
        CHECK(is_simple_closed_curve(reversed));
        CHECK(jordan_components(reversed).interior == interior);
    }
}

TEST_CASE("bounding curve sets") {
    const PointSet punctured = punctured_square_image();
    BoundingCurveSet candidate;
    candidate.curves.push_back(trace_bounding_curve(filled_rect({-3, -3}, {3, 3})));
    candidate.curves.push_back(Curve{diamond8, Adjacency::c2});
    std::string why;
    CHECK(is_bounding_curve_set(punctured, candidate, &why));
    CHECK(why.empty());

    const PointSet square = filled_rect({0, 0}, {2, 2});
    BoundingCurveSet single{{trace_bounding_curve(square)}};
    CHECK(is_bounding_curve_set(square, single));

    // drop the corner (0,0): still a c2-closed 7-cycle, but (0,0) escapes it
    std::vector<Point> chipped = single.curves[0].points;
    chipped.erase(chipped.begin());
    BoundingCurveSet bad{{Curve{chipped, Adjacency::c2}}};
    CHECK_FALSE(is_bounding_curve_set(square, bad, &why));
    CHECK(why == "set is not contained in the outer curve plus its interior");
}

TEST_CASE("canonical bounding curve sets") {
    const BoundingCurveSet punctured = canonical_bounding_curves(punctured_square_image());
    REQUIRE(punctured.curves.size() == 2);
    CHECK(punctured.curves[0].size() == 24);
    CHECK(punctured.curves[1].point_set() ==
          set_difference(diamond_disk(2), diamond_disk(1)));

    const BoundingCurveSet square = canonical_bounding_curves(filled_rect({0, 0}, {2, 2}));
    CHECK(square.curves.size() == 1);
}
