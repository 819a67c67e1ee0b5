#include "dplane/afpp.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <vector>

#include "dplane/errors.hpp"
#include "dplane/fixtures.hpp"
#include "dplane/retract.hpp"

namespace dplane {

PointSet approximate_fixed_points(const PointMap& f) {
    if (!is_self_map(f))
        throw domain_error("approximate_fixed_points: map is not a self-map of its domain");
    PointSet out;
    for (const auto& [p, q] : f.table)
        if (adjacent_or_equal(p, q, f.domain.adjacency)) out.insert(p);
    return out;
}

std::string to_string(AfppOutcome outcome) {
    switch (outcome) {
        case AfppOutcome::has_afpp: return "HAS_AFPP";
        case AfppOutcome::lacks_afpp: return "LACKS_AFPP";
        case AfppOutcome::unknown: return "UNKNOWN";
    }
    throw internal_error("unknown afpp outcome");
}

namespace {

// Fixed-width bitset over point indices.
struct Bits {
    std::vector<std::uint64_t> words;

    explicit Bits(std::size_t n = 0) : words((n + 63) / 64, 0) {}
    void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
    Bits& operator&=(const Bits& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] &= o.words[w];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] &= ~o.words[w];
        return *this;
    }
    void fill(std::size_t n) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] = ~std::uint64_t{0};
        if (n % 64) words.back() = (std::uint64_t{1} << (n % 64)) - 1;
    }
    template <typename Fn>
    bool for_each(Fn fn) const {  // ascending order; fn returns false to stop
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t rest = words[w];
            while (rest) {
                const int bit = std::countr_zero(rest);
                if (!fn(w * 64 + bit)) return false;
                rest &= rest - 1;
            }
        }
        return true;
    }
};

struct SearchGraph {
    std::vector<Point> points;                 // index -> point, lexicographic
    std::vector<std::vector<int>> neighbors;   // adjacency lists
    std::vector<Bits> closed;                  // closed neighborhood masks
    std::vector<int> order;                    // breadth-first variable order
};

SearchGraph build_graph(const DigitalImage& x) {
    SearchGraph g;
    g.points.assign(x.points.begin(), x.points.end());
    const std::size_t n = g.points.size();
    std::map<Point, int> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(g.points[i], static_cast<int>(i));

    g.neighbors.resize(n);
    g.closed.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        g.closed[i].set(i);
        for (Point nb : neighbors(g.points[i], x.adjacency)) {
            auto it = index.find(nb);
            if (it == index.end()) continue;
            g.neighbors[i].push_back(it->second);
            g.closed[i].set(it->second);
        }
    }

    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        g.order.push_back(v);
        for (int nb : g.neighbors[v]) {
            if (seen[nb]) continue;
            seen[nb] = true;
            queue.push_back(nb);
        }
    }
    return g;
}

}  // namespace

AfppVerdict check_afpp_exhaustive(const DigitalImage& x, std::uint64_t budget) {
    if (x.points.empty() || !is_connected(x))
        throw precondition_error("check_afpp_exhaustive: image must be nonempty and connected");

    const SearchGraph g = build_graph(x);
    const std::size_t n = g.points.size();

    std::vector<int> assignment(n, -1);
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    Bits universe(n);
    universe.fill(n);

    // depth-first over the breadth-first variable order
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        const int v = g.order[depth];
        Bits candidates = universe;
        candidates.and_not(g.closed[v]);  // an image near v would make v approximately fixed
        for (int nb : g.neighbors[v])
            if (assignment[nb] >= 0) candidates &= g.closed[assignment[nb]];

        return !candidates.for_each([&](std::size_t value) {
            if (nodes == budget) {
                out_of_budget = true;
                return false;
            }
            ++nodes;
            assignment[v] = static_cast<int>(value);
            if (self(self, depth + 1)) return false;  // witness found below
            assignment[v] = -1;
            return !out_of_budget;
        });
    };

    AfppVerdict verdict;
    verdict.budget = budget;
    const bool found = search(search, 0);
    verdict.nodes_explored = nodes;

    if (out_of_budget) {
        verdict.outcome = AfppOutcome::unknown;
        return verdict;
    }
    if (!found) {
        verdict.outcome = AfppOutcome::has_afpp;
        return verdict;
    }

    PointMap witness{x, x, {}};
    for (std::size_t i = 0; i < n; ++i)
        witness.table.emplace(g.points[i], g.points[assignment[i]]);
    if (!is_continuous(witness) || !approximate_fixed_points(witness).empty())
        throw internal_error("check_afpp_exhaustive: unsound witness");
    verdict.outcome = AfppOutcome::lacks_afpp;
    verdict.witness = std::move(witness);
    return verdict;
}

bool condition_one_holds(const PointMap& f, const Curve& s, const DigitalImage& x) {
    const PointSet curve_points = s.point_set();
    if (!is_subset(curve_points, x.points))
        throw precondition_error("condition_one_holds: curve is not contained in the image");
    if (f.domain.points != curve_points || !is_self_map(f) || !is_continuous(f))
        throw precondition_error("condition_one_holds: f is not a continuous self-map of the curve");

    for (Point p : curve_points) {
        const PointSet near_p = closed_neighborhood(x, p);
        const PointSet near_image = closed_neighborhood(x, f(p));
        if (!set_intersection(near_p, near_image).empty()) return false;
    }
    return true;
}

PointMap construct_no_afp_map(const PointSet& x, const PointSet& xp, const PointMap& f) {
    PointMap r = hole_retraction(x, xp);  // throws with the failed clause
    const PointSet curve_points = r.codomain.points;
    if (f.domain.points != curve_points)
        throw precondition_error(
            "construct_no_afp_map: f is not defined exactly on the bounding curve of xp");

    Curve s = trace_bounding_curve(xp);
    const DigitalImage image{x, Adjacency::c2};
    if (!condition_one_holds(f, s, image))
        throw precondition_error(
            "construct_no_afp_map: closed neighborhoods of a curve point and of its image "
            "intersect");

    PointMap out = compose(f, r);
    if (!is_continuous(out) || !approximate_fixed_points(out).empty())
        throw internal_error("construct_no_afp_map: composed map failed re-verification");
    return out;
}

PointMap point_reflection(const Curve& s, Point doubled_center) {
    const PointSet curve_points = s.point_set();
    const DigitalImage image{curve_points, s.kind};
    PointMap out{image, image, {}};
    for (Point p : curve_points) {
        const Point q{doubled_center.x - p.x, doubled_center.y - p.y};
        if (!curve_points.contains(q))
            throw precondition_error("point_reflection: curve is not symmetric about the center");
        out.table.emplace(p, q);
    }
    return out;
}

PointMap cycle_shift_map(const Curve& s, int shift) {
    const int m = static_cast<int>(s.size());
    if (m == 0) throw domain_error("cycle_shift_map: empty curve");
    const int k = ((shift % m) + m) % m;
    const DigitalImage image{s.point_set(), s.kind};
    PointMap out{image, image, {}};
    for (int i = 0; i < m; ++i) out.table.emplace(s.points[i], s.points[(i + k) % m]);
    return out;
}

namespace {

// Witness construction for images with holes: each finite c2-component of
// the complement whose surrounding disk is convex yields candidate curve
// self-maps (the central reflection, then the cycle shifts).
std::optional<PointMap> witness_from_holes(const DigitalImage& x) {
    if (x.adjacency != Adjacency::c2) return std::nullopt;
    ComponentDecomposition holes = complement_components(x.points, Adjacency::c2);
    for (const Component& hole : holes.components) {
        if (hole.unbounded) continue;
        PointSet shell;
        for (Point h : hole.points)
            for (Point nb : neighbors(h, Adjacency::c1))
                if (x.points.contains(nb)) shell.insert(nb);
        const PointSet disk = set_union(hole.points, shell);

        Curve s{{}, Adjacency::c2};
        try {
            s = trace_bounding_curve(disk);
        } catch (const error&) {
            continue;
        }

        std::vector<PointMap> candidates;
        const Box box = bounding_box(s.point_set());
        try {
            candidates.push_back(
                point_reflection(s, {box.min_x + box.max_x, box.min_y + box.max_y}));
        } catch (const precondition_error&) {
        }
        if (is_simple_closed_curve(s))
            for (int k = 2; k + 2 <= static_cast<int>(s.size()); ++k)
                candidates.push_back(cycle_shift_map(s, k));

        for (const PointMap& f : candidates) {
            try {
                return construct_no_afp_map(x.points, disk, f);
            } catch (const error&) {
            }
        }
    }
    return std::nullopt;
}

}  // namespace

AfppVerdict analyze_afpp(const DigitalImage& x, std::uint64_t budget) {
    AfppVerdict verdict = check_afpp_exhaustive(x, budget);
    if (verdict.outcome != AfppOutcome::unknown) return verdict;
    std::optional<PointMap> witness = witness_from_holes(x);
    if (witness) {
        verdict.outcome = AfppOutcome::lacks_afpp;
        verdict.witness = std::move(witness);
        verdict.witness_constructed = true;
    }
    return verdict;
}

NoAfpExample punctured_square_example() {
    const PointSet image_points = punctured_square_image();
    const PointSet hole_disk = diamond_disk(2);
    const Curve s = trace_bounding_curve(hole_disk);
    const PointMap reflection = point_reflection(s, {0, 0});
    PointMap map = construct_no_afp_map(image_points, hole_disk, reflection);
    return {DigitalImage{image_points, Adjacency::c2}, std::move(map)};
}

}  // namespace dplane
