#include "dplane/fixtures.hpp"

#include <cstdlib>

namespace dplane {

PointSet diamond_disk(int radius, Point center) {
    PointSet out;
    for (int dx = -radius; dx <= radius; ++dx)
        for (int dy = -radius; dy <= radius; ++dy)
            if (std::abs(dx) + std::abs(dy) <= radius)
                out.insert({center.x + dx, center.y + dy});
    return out;
}

PointSet filled_rect(Point lo, Point hi) {
    PointSet out;
    for (int x = lo.x; x <= hi.x; ++x)
        for (int y = lo.y; y <= hi.y; ++y) out.insert({x, y});
    return out;
}

PointSet punctured_square_image() {
    return set_difference(filled_rect({-3, -3}, {3, 3}), diamond_disk(1));
}

OctagonExample octagon_retraction_example() {
    // hull vertices: (0,2) (0,4) (2,6) (6,6) (6,3) (5,2)
    PointSet disk;
    for (int x = 0; x <= 6; ++x) {
        for (int y = 0; y <= 8; ++y) {
            const bool inside = y >= 2 && y <= 6 && y <= 4 + x && y >= x - 3;
            if (inside) disk.insert({x, y});
        }
    }
    return {std::move(disk), filled_rect({-2, 0}, {8, 8})};
}

}  // namespace dplane
