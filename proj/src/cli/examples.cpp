#include "interlace/examples.hpp"

#include "interlace/errors.hpp"

namespace interlace {

Path path_through(const Network& g, const std::vector<Coord>& corners) {
    Path out;
    auto push = [&](Coord c) {
        auto v = g.find_vertex(c);
        if (!v) throw ArgumentError("no vertex at (" + std::to_string(c.r) + "," + std::to_string(c.c) + ")");
        out.push_back(*v);
    };
    if (corners.empty()) return out;
    push(corners.front());
    for (std::size_t i = 1; i < corners.size(); ++i) {
        Coord a = corners[i - 1], b = corners[i];
        if (a.r != b.r && a.c != b.c) throw ArgumentError("corners must share a row or a column");
        int dr = (b.r > a.r) - (b.r < a.r), dc = (b.c > a.c) - (b.c < a.c);
        while (a != b) {
            a.r += dr;
            a.c += dc;
            push(a);
        }
    }
    if (!is_path(g, out)) throw ArgumentError("corners do not trace a path");
    return out;
}

Network sample_grid() { return build_grid_network(9, 9, 4); }

PncPair sample_pair(const Network& g) {
    PncPair p;
    p.I = {2, 4, 6};
    p.J = {2, 4, 6};
    p.red = {
        path_through(g, {{3, 1}, {4, 1}, {4, 3}, {7, 3}, {7, 6}, {8, 6}}),
        path_through(g, {{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 5}, {5, 7}, {7, 7}}),
        path_through(g, {{1, 3}, {1, 4}, {2, 4}, {2, 7}, {4, 7}, {4, 8}, {6, 8}}),
    };
    p.blue = {
        path_through(g, {{4, 1}, {7, 1}, {7, 3}, {9, 3}, {9, 6}}),
        path_through(g, {{3, 2}, {5, 2}, {5, 5}, {8, 5}, {8, 7}}),
        path_through(g, {{2, 3}, {2, 4}, {3, 4}, {3, 6}, {7, 6}, {7, 8}}),
        path_through(g, {{1, 4}, {1, 8}, {3, 8}, {3, 9}, {6, 9}}),
    };
    return p;
}

#ifndef INTERLACE_GOLDEN_DIR
#define INTERLACE_GOLDEN_DIR "tests/golden"
#endif

std::string golden_dir() { return INTERLACE_GOLDEN_DIR; }

}  // namespace interlace
