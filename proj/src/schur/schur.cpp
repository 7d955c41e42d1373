#include "interlace/errors.hpp"
#include "interlace/matrix.hpp"
#include "interlace/network.hpp"
#include "interlace/schur.hpp"

#include <functional>
#include <mutex>
#include <tuple>

namespace interlace {

namespace {

std::mutex cache_mutex;
std::map<std::tuple<int, int, int>, Polynomial> h_cache;
std::map<std::tuple<Partition, int, int>, Polynomial> schur_cache;

void check_window(int a, int b) {
    if (a < 1) throw ArgumentError("variable window must start at 1 or later");
    (void)b;
}

Polynomial h_uncached(int r, int a, int b) {
    if (r < 0) return Polynomial();
    if (r == 0) return Polynomial(1);
    if (a > b) return Polynomial();
    if (a == b) return Polynomial::var(static_cast<VarIndex>(a), static_cast<std::uint32_t>(r));
    PolynomialAccumulator acc;
    for (int j = 0; j <= r; ++j) {
        Polynomial rest = complete_homogeneous(r - j, a + 1, b);
        if (rest.is_zero()) continue;
        acc.add(j == 0 ? rest : rest.times_monomial(Monomial::var(static_cast<VarIndex>(a), static_cast<std::uint32_t>(j))));
    }
    return acc.result();
}

// det(h_{outer_i - inner_j - i + j}) over `len` rows.
Polynomial jacobi_trudi(const std::vector<int>& outer, const std::vector<int>& inner, int a, int b) {
    const int len = static_cast<int>(outer.size());
    if (len == 0) return Polynomial(1);
    ExactMatrix m(len, len);
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < len; ++j) m(i, j) = complete_homogeneous(outer[i] - inner[j] - i + j, a, b);
    return determinant(m);
}

// Fills the cells of outer/inner row by row with entries in [a, b].
Polynomial tableaux_sum(const Partition& outer, const Partition& inner, int a, int b) {
    if (!outer.contains(inner)) return Polynomial();
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) cells.push_back({r, c});
    if (cells.empty()) return Polynomial(1);
    std::map<std::pair<int, int>, int> filled;
    std::vector<std::uint32_t> count(b + 1, 0);
    PolynomialAccumulator acc;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            std::vector<Monomial::Factor> f;
            for (int v = a; v <= b; ++v)
                if (count[v]) f.emplace_back(static_cast<VarIndex>(v), count[v]);
            acc.add(Polynomial::term(Monomial::from_factors(std::move(f)), Rational(1)));
            return;
        }
        const Cell cell = cells[idx];
        int lo = a;
        if (auto it = filled.find({cell.r, cell.c - 1}); it != filled.end()) lo = std::max(lo, it->second);
        if (auto it = filled.find({cell.r - 1, cell.c}); it != filled.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= b; ++v) {
            filled[{cell.r, cell.c}] = v;
            ++count[v];
            rec(idx + 1);
            --count[v];
        }
        filled.erase({cell.r, cell.c});
    };
    rec(0);
    return acc.result();
}

}  // namespace

Polynomial complete_homogeneous(int r, int a, int b) {
    check_window(a, b);
    if (r <= 0 || a > b) return h_uncached(r, a, b);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = h_cache.find({r, a, b});
        if (it != h_cache.end()) return it->second;
    }
    Polynomial p = h_uncached(r, a, b);
    std::lock_guard<std::mutex> lock(cache_mutex);
    h_cache.emplace(std::tuple{r, a, b}, p);
    return p;
}

Polynomial schur(const Partition& lambda, int a, int b) {
    check_window(a, b);
    if (lambda.empty()) return Polynomial(1);
    if (lambda.length() > b - a + 1) return Polynomial();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = schur_cache.find({lambda, a, b});
        if (it != schur_cache.end()) return it->second;
    }
    Polynomial p = jacobi_trudi(lambda.parts(), std::vector<int>(lambda.length(), 0), a, b);
    std::lock_guard<std::mutex> lock(cache_mutex);
    schur_cache.emplace(std::tuple{lambda, a, b}, p);
    return p;
}

Polynomial schur_or_zero(const std::vector<int>& seq, int a, int b) {
    auto p = Partition::from_sequence(seq);
    return p ? schur(*p, a, b) : Polynomial();
}

Polynomial schur_by_tableaux(const Partition& lambda, int a, int b) {
    check_window(a, b);
    return tableaux_sum(lambda, Partition(), a, b);
}

Polynomial schur_by_paths(const Partition& lambda, int a, int b) {
    check_window(a, b);
    if (lambda.empty()) return Polynomial(1);
    if (a > b) return Polynomial();
    const int k = lambda.length();
    Network g = build_cartesian_grid(1, lambda.part(1) + k, a, b);
    std::vector<VertexId> from, to;
    for (int i = 1; i <= k; ++i) {
        from.push_back(*g.find_vertex(Coord{lambda.part(k + 1 - i) + i, b}));
        to.push_back(*g.find_vertex(Coord{i, a}));
    }
    return nc_weight_sum(g, from, to);
}

Polynomial skew_schur(const Partition& outer, const Partition& inner, int a, int b) {
    check_window(a, b);
    if (!outer.contains(inner)) return Polynomial();
    return jacobi_trudi(outer.parts(), inner.padded(outer.length()), a, b);
}

Polynomial skew_schur_by_tableaux(const Partition& outer, const Partition& inner, int a, int b) {
    check_window(a, b);
    return tableaux_sum(outer, inner, a, b);
}

Polynomial skew_schur_minus_box(const Partition& nu, int a, int b) {
    if (nu.empty()) throw ArgumentError("the empty partition has no box to remove");
    return skew_schur(nu, Partition{1}, a, b);
}

Polynomial skew_minus_box_by_derivative(const Partition& nu, int n) {
    if (nu.empty()) throw ArgumentError("the empty partition has no box to remove");
    return schur(nu, 1, n).partial_derivative(1).specialize({{1, Rational(0)}});
}

}  // namespace interlace
