#include "interlace/errors.hpp"
#include "interlace/rsk.hpp"

#include <algorithm>
#include <set>

namespace interlace {

namespace {

using CoordPath = std::vector<Coord>;
using CoordTuple = std::vector<CoordPath>;

CoordTuple to_coords(const Network& g, const PathTuple& t) {
    CoordTuple out;
    for (const auto& p : t) {
        out.emplace_back();
        for (VertexId v : p) out.back().push_back(*g.coord(v));
    }
    return out;
}

// Vertical run from row 1 down to the start, and from the end down to `row`.
CoordPath extend(CoordPath p, int row) {
    CoordPath out;
    for (int r = 1; r < p.front().r; ++r) out.push_back({r, p.front().c});
    out.insert(out.end(), p.begin(), p.end());
    for (int r = p.back().r + 1; r <= row; ++r) out.push_back({r, p.back().c});
    return out;
}

Scalar hat(const ExactMatrix& x, const CoordTuple& t) {
    Scalar out(1);
    for (const auto& p : t)
        for (Coord c : p) out *= x(c.r - 1, c.c - 1);
    return out;
}

std::set<CoordTuple> rsk_paths(int i, int j, int k) {
    std::set<CoordTuple> out;
    if (k == 0) {
        out.insert({});
        return out;
    }
    NetworkBuilder b;
    std::vector<std::vector<VertexId>> id(i, std::vector<VertexId>(j));
    for (int r = 0; r < i; ++r)
        for (int c = 0; c < j; ++c) id[r][c] = b.add_vertex(Coord{r + 1, c + 1});
    for (int r = 0; r < i; ++r)
        for (int c = 0; c < j; ++c) {
            if (r + 1 < i) b.add_edge(id[r][c], id[r + 1][c]);
            if (c + 1 < j) b.add_edge(id[r][c], id[r][c + 1]);
        }
    Network g = b.build(false);
    std::vector<VertexId> from, to;
    for (int s = 1; s <= k; ++s) {
        from.push_back(id[0][s - 1]);
        to.push_back(id[i - 1][j - k + s - 1]);
    }
    for_each_nc_tuple(g, from, to, [&](const PathTuple& t) { out.insert(to_coords(g, t)); });
    return out;
}

struct Variant {
    std::string name;
    IndexSet sinks;
    int red_row, blue_row;
    bool slide_first_blue;
    int red_i, red_j, blue_i, blue_j;  // codomain RSKPath(red_i, red_j, k-1) x RSKPath(blue_i, blue_j, k)
    Scalar factor;                     // multiplies the input weight
    Scalar divisor;                    // divides it
};

}  // namespace

std::vector<BijectionReport> check_bijections(const ExactMatrix& x, int i, int j, int k) {
    if (i > x.rows() || j > x.cols()) throw ArgumentError("bijection grid exceeds the input matrix");
    if (k < 2 || i < 3 || j < 3 || k >= std::min(i, j)) throw ArgumentError("bijections need 2 <= k < min(i,j)");
    Network g = build_grid_network(i, j, k);
    IndexSet I, J, J1, J2;
    for (int s = 1; s <= k - 1; ++s) {
        I.push_back(2 * s);
        J.push_back(2 * s);
        J1.push_back(2 * s - 1);
        J2.push_back(2 * s + 1);
    }
    Scalar kappa = tri_plus(x, 1, 1, k - 2) * tri_plus(x, 1, 1, k - 1);
    std::vector<Variant> variants = {
        {"phi", J, i - 1, i, false, i - 1, j - 1, i, j,
         kappa * tri_minus(x, i - 1, j - 1, k - 2) * tri_minus(x, i, j, k - 1), Scalar(1)},
        {"phi'", J1, i, i - 1, false, i, j - 1, i - 1, j,
         kappa * tri_minus(x, i, j - 1, k - 2) * tri_minus(x, i - 1, j, k - 1), x(i - k, j - 1)},
        {"phi''", J2, i - 1, i, true, i - 1, j, i, j - 1,
         kappa * tri_minus(x, i - 1, j, k - 2) * tri_minus(x, i, j - 1, k - 1), x(i - 1, j - k)},
    };
    std::vector<BijectionReport> out;
    for (const auto& v : variants) {
        BijectionReport rep;
        rep.name = v.name;
        auto reds = rsk_paths(v.red_i, v.red_j, k - 1);
        auto blues = rsk_paths(v.blue_i, v.blue_j, k);
        rep.codomain = reds.size() * blues.size();
        std::set<std::pair<CoordTuple, CoordTuple>> images;
        bool in_codomain = true;
        rep.weights_ok = true;
        for (const auto& pair : enumerate_pnc(g, I, v.sinks)) {
            ++rep.domain;
            CoordTuple red = to_coords(g, pair.red), blue = to_coords(g, pair.blue);
            Scalar before = hat(x, red) * hat(x, blue);
            for (auto& p : red) p = extend(p, v.red_row);
            for (std::size_t s = 0; s < blue.size(); ++s) {
                if (s == 0 && v.slide_first_blue) blue[s].pop_back();
                blue[s] = extend(blue[s], v.blue_row);
            }
            if (!reds.count(red) || !blues.count(blue)) {
                if (in_codomain) rep.failure = "an image lies outside the codomain";
                in_codomain = false;
            }
            if (hat(x, red) * hat(x, blue) * v.divisor != before * v.factor) {
                if (rep.weights_ok && rep.failure.empty()) rep.failure = "weight equation fails";
                rep.weights_ok = false;
            }
            images.insert({red, blue});
        }
        rep.bijective = in_codomain && images.size() == rep.domain && rep.domain == rep.codomain;
        if (!rep.bijective && rep.failure.empty()) rep.failure = "not a bijection onto the codomain";
        out.push_back(rep);
    }
    return out;
}

}  // namespace interlace
