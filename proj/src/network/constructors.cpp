#include "interlace/errors.hpp"
#include "interlace/network.hpp"

#include <algorithm>
#include <random>

namespace interlace {

namespace {

// Adds an m x n matrix-coordinate grid with its top-left corner at `origin`.
// Returns ids indexed [row-1][col-1].
std::vector<std::vector<VertexId>> add_matrix_grid(NetworkBuilder& b, int m, int n, Coord origin,
                                                   const EdgeWeightFn& weights) {
    std::vector<std::vector<VertexId>> id(m, std::vector<VertexId>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) id[i][j] = b.add_vertex(Coord{origin.r + i, origin.c + j});
    auto w = [&](Coord a, Coord c) { return weights ? weights(a, c) : Scalar(1); };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            Coord here{i + 1, j + 1};
            if (i + 1 < m) b.add_edge(id[i][j], id[i + 1][j], w(here, Coord{i + 2, j + 1}));
            if (j + 1 < n) b.add_edge(id[i][j], id[i][j + 1], w(here, Coord{i + 1, j + 2}));
        }
    }
    return id;
}

void require_partition(const std::vector<int>& p, const char* what) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw ArgumentError(std::string(what) + " has a negative part");
        if (i > 0 && p[i] > p[i - 1]) throw ArgumentError(std::string(what) + " is not weakly decreasing");
    }
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

Network build_grid_network(int m, int n, int k, const EdgeWeightFn& weights) {
    if (m < 3 || n < 3) throw ArgumentError("grid needs m, n >= 3");
    if (k < 2 || k >= std::min(m, n)) throw ArgumentError("grid needs 2 <= k < min(m, n)");
    NetworkBuilder b;
    auto id = add_matrix_grid(b, m, n, Coord{1, 1}, weights);
    auto at = [&](int r, int c) { return id[r - 1][c - 1]; };
    std::vector<VertexId> s, t;
    for (int i = 1; i <= k; ++i) {
        s.push_back(at(k - i + 1, i));
        if (i < k) s.push_back(at(k - i, i));
    }
    for (int i = 1; i <= k; ++i) {
        t.push_back(at(m - i + 1, n - k + i));
        if (i < k) t.push_back(at(m - i, n - k + i));
    }
    Witness w;
    for (int i = 0; i < 2 * k - 1; i += 2) w.sources_cut.push_back(s[i]);
    for (int i = 1; i < 2 * k - 1; i += 2) w.sinks_cut.push_back(t[i]);
    b.set_k(k);
    b.set_sources(s);
    b.set_sinks(t);
    b.set_convention(CoordConvention::Matrix);
    b.set_embedding_verified(true);
    b.set_witness(w);
    b.set_name("grid(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")");
    return b.build();
}

EdgeWeightFn random_edge_weights(std::uint64_t seed) {
    // Each edge gets its own generator keyed by its endpoints, so weights do not depend on
    // the order in which edges are requested.
    return [seed](Coord a, Coord c) {
        std::uint64_t key = seed;
        for (int v : {a.r, a.c, c.r, c.c}) key = key * 1000003u + static_cast<std::uint64_t>(v + 1000);
        std::mt19937_64 rng(key);
        long num = static_cast<long>(rng() % 100) + 1;
        long den = static_cast<long>(rng() % 100) + 1;
        return Scalar(Rational(num, den));
    };
}

Network build_opposite(const Network& g) {
    NetworkBuilder b;
    for (VertexId v = 0; v < g.vertex_count(); ++v) b.add_vertex(g.coord(v));
    for (const auto& e : g.edges()) b.add_edge(e.to, e.from, e.weight);
    std::vector<VertexId> s(g.sinks().rbegin(), g.sinks().rend());
    std::vector<VertexId> t(g.sources().rbegin(), g.sources().rend());
    b.set_k(g.k());
    b.set_sources(s);
    b.set_sinks(t);
    b.set_convention(g.convention());
    b.set_embedding_verified(g.embedding_verified());
    // Reversal keeps a source cut valid; the sink cut does not transfer.
    if (g.witness()) b.set_witness(Witness{g.witness()->sources_cut, {}});
    b.set_name("op(" + g.name() + ")");
    return b.build();
}

Network build_interspace_witness(int k) {
    if (k < 2) throw ArgumentError("interspace witness needs k >= 2");
    NetworkBuilder b;
    // First grid: k x (4k-3).
    auto top = add_matrix_grid(b, k, 4 * k - 3, Coord{1, 1}, nullptr);
    // Second grid: (k-1) x (4k-7); its first 2k-3 top-row vertices are glued onto the
    // bottom row of the first grid, the rest get fresh vertices labelled below it.
    const int m2 = k - 1, n2 = 4 * k - 7;
    std::vector<std::vector<VertexId>> low(m2, std::vector<VertexId>(n2));
    for (int i = 0; i < m2; ++i) {
        for (int j = 0; j < n2; ++j) {
            if (i == 0 && j < 2 * k - 3)
                low[i][j] = top[k - 1][2 * k - 1 + j];
            else
                low[i][j] = b.add_vertex(Coord{k + 1 + i, 2 * k + j});
        }
    }
    for (int i = 0; i < m2; ++i) {
        for (int j = 0; j < n2; ++j) {
            if (i + 1 < m2) b.add_edge(low[i][j], low[i + 1][j]);
            // The glued stretch already carries the first grid's horizontal edges.
            bool glued = i == 0 && j + 1 < 2 * k - 3;
            if (j + 1 < n2 && !glued) b.add_edge(low[i][j], low[i][j + 1]);
        }
    }
    std::vector<VertexId> s, t;
    for (int j = 1; j <= 2 * k - 1; ++j) s.push_back(top[0][j - 1]);
    t.push_back(top[k - 1][2 * k - 2]);
    for (int j = 1; j <= 2 * k - 3; ++j) t.push_back(low[m2 - 1][2 * k - 5 + j]);
    t.push_back(top[k - 1][4 * k - 4]);
    Witness w;
    for (int i = 0; i < k; ++i) w.sources_cut.push_back(top[i][2 * k - 2]);
    for (int i = 0; i < m2; ++i) w.sinks_cut.push_back(low[i][2 * k - 4]);
    b.set_k(k);
    b.set_sources(s);
    b.set_sinks(t);
    b.set_convention(CoordConvention::None);
    b.set_embedding_verified(true);
    b.set_witness(w);
    b.set_name("interspace(" + std::to_string(k) + ")");
    return b.build();
}

Network build_cartesian_grid(int x_lo, int x_hi, int y_lo, int y_hi) {
    if (x_lo > x_hi || y_lo > y_hi || y_lo < 1) throw ArgumentError("empty cartesian grid");
    NetworkBuilder b;
    const int w = x_hi - x_lo + 1, h = y_hi - y_lo + 1;
    std::vector<std::vector<VertexId>> id(w, std::vector<VertexId>(h));
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) id[x][y] = b.add_vertex(Coord{x_lo + x, y_lo + y});
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) {
            if (x > 0) b.add_edge(id[x][y], id[x - 1][y], Scalar::var(static_cast<VarIndex>(y_lo + y)));
            if (y > 0) b.add_edge(id[x][y], id[x][y - 1], Scalar(1));
        }
    }
    b.set_convention(CoordConvention::Cartesian);
    b.set_embedding_verified(true);
    return b.build(false);
}

namespace {

// Copies the cartesian rectangle [1, width] x [1, n] into a builder.
NetworkBuilder cartesian_builder(int width, int n) {
    Network plain = build_cartesian_grid(1, width, 1, n);
    NetworkBuilder b;
    for (VertexId v = 0; v < plain.vertex_count(); ++v) b.add_vertex(plain.coord(v));
    for (const auto& e : plain.edges()) b.add_edge(e.from, e.to, e.weight);
    b.set_convention(CoordConvention::Cartesian);
    b.set_embedding_verified(true);
    return b;
}

}  // namespace

Network build_schur_network(const std::vector<int>& lambda, int t, int n) {
    require_partition(lambda, "lambda");
    const int k = static_cast<int>(lambda.size());
    if (k < 2) throw ArgumentError("schur network needs at least two parts");
    if (lambda.back() < 1) throw ArgumentError("schur network needs positive parts");
    if (t < 0 || t > k - 1) throw ArgumentError("t must lie in [0, k-1]");
    if (n < k) throw ArgumentError("schur network needs n >= k");
    NetworkBuilder b = cartesian_builder(lambda[0] + k, n);
    auto at = [&](int x, int y) { return *b.find_vertex(Coord{x, y}); };
    std::vector<VertexId> v(k + 1), s, sinks;
    for (int i = 1; i <= k; ++i) v[i] = at(lambda[k - i] + i, n);
    for (int i = 1; i <= k; ++i) {
        s.push_back(v[i]);
        if (i != k - t) s.push_back(v[i]);
    }
    for (int i = 1; i <= k; ++i) {
        sinks.push_back(at(i, k - i + 1));
        if (i < k) sinks.push_back(at(i + 1, k - i + 1));
    }
    Witness w;
    for (int i = 1; i <= k; ++i) w.sources_cut.push_back(v[i]);
    for (int i = 1; i < 2 * k - 1; i += 2) w.sinks_cut.push_back(sinks[i]);
    b.set_k(k);
    b.set_sources(s);
    b.set_sinks(sinks);
    b.set_witness(w);
    b.set_name("schur((" + join(lambda) + ")," + std::to_string(t) + "," + std::to_string(n) + ")");
    return b.build();
}

Network build_interlace_pair_network(const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
    require_partition(lambda, "lambda");
    require_partition(mu, "mu");
    const int k = static_cast<int>(lambda.size());
    if (k < 2) throw ArgumentError("interlace network needs lambda with at least two entries");
    if (static_cast<int>(mu.size()) != k - 1) throw ArgumentError("mu must have exactly k-1 entries");
    for (int i = 0; i < k - 1; ++i)
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) throw ArgumentError("lambda and mu do not interlace");
    if (n < k) throw ArgumentError("interlace network needs n >= k");
    NetworkBuilder b = cartesian_builder(lambda[0] + k, n);
    auto at = [&](int x, int y) { return *b.find_vertex(Coord{x, y}); };
    std::vector<VertexId> s, sinks;
    for (int i = 1; i <= k; ++i) {
        s.push_back(at(lambda[k - i] + i, n));
        if (i < k) s.push_back(at(mu[k - i - 1] + i, n));
    }
    for (int i = 1; i < k; ++i) {
        sinks.push_back(at(i, 1));
        sinks.push_back(at(i, 1));
    }
    sinks.push_back(at(k, 1));
    Witness w;
    for (int i = 1; i <= k; ++i) w.sources_cut.push_back(at(i, 1));
    b.set_k(k);
    b.set_sources(s);
    b.set_sinks(sinks);
    b.set_witness(w);
    b.set_name("interlace((" + join(lambda) + "),(" + join(mu) + ")," + std::to_string(n) + ")");
    return b.build();
}

}  // namespace interlace
