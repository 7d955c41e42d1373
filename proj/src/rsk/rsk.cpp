#include "interlace/rsk.hpp"

#include "interlace/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace interlace {

VarIndex rsk_variable(int i, int j) {
    if (i < 1 || i > 9 || j < 1 || j > 9) throw ArgumentError("symbolic entries need 1 <= i, j <= 9");
    return static_cast<VarIndex>(10 * i + j);
}

ExactMatrix symbolic_input(int m, int n) {
    ExactMatrix x(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) x(i - 1, j - 1) = Scalar::var(rsk_variable(i, j));
    return x;
}

ExactMatrix random_input(int m, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(1, 100);
    ExactMatrix x(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            long p = pick(rng);
            x(i, j) = Scalar(Rational(p, pick(rng)));
        }
    return x;
}

namespace {

const Scalar& entry(const ExactMatrix& x, int r, int s) {
    if (r < 1 || r > x.rows() || s < 1 || s > x.cols())
        throw ArgumentError("entry (" + std::to_string(r) + "," + std::to_string(s) + ") outside the input matrix");
    return x(r - 1, s - 1);
}

}  // namespace

Scalar rect(const ExactMatrix& x, int i, int j) {
    if (i < 1 || i > x.rows() || j < 1 || j > x.cols()) return Scalar(1);
    Scalar out(1);
    for (int r = 1; r <= i; ++r)
        for (int s = 1; s <= j; ++s) out *= x(r - 1, s - 1);
    return out;
}

Scalar tri_plus(const ExactMatrix& x, int i, int j, int l) {
    if (l < 0 || (l > 0 && (l > std::min(x.rows() - i + 1, x.cols() - j + 1) || i < 1 || j < 1)))
        throw ArgumentError("increasing triangular product out of range");
    Scalar out(1);
    for (int r = i; r <= i + l - 1; ++r)
        for (int s = j; s <= j + i + l - r - 1; ++s) out *= entry(x, r, s);
    return out;
}

Scalar tri_minus(const ExactMatrix& x, int i, int j, int l) {
    if (l < 0 || (l > 0 && (l > std::min(i, j) || i > x.rows() || j > x.cols())))
        throw ArgumentError("decreasing triangular product out of range");
    Scalar out(1);
    for (int r = i - l + 1; r <= i; ++r)
        for (int s = j + i - l - r + 1; s <= j; ++s) out *= entry(x, r, s);
    return out;
}

namespace {

Network plain_grid(int m, int n) {
    NetworkBuilder b;
    std::vector<std::vector<VertexId>> id(m, std::vector<VertexId>(n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) id[r][c] = b.add_vertex(Coord{r + 1, c + 1});
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            if (r + 1 < m) b.add_edge(id[r][c], id[r + 1][c]);
            if (c + 1 < n) b.add_edge(id[r][c], id[r][c + 1]);
        }
    b.set_convention(CoordConvention::Matrix);
    b.set_embedding_verified(true);
    return b.build(false);
}

std::vector<Scalar> vertex_weights(const Network& g, const ExactMatrix& x) {
    std::vector<Scalar> w(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) w[v] = x(g.coord(v)->r - 1, g.coord(v)->c - 1);
    return w;
}

void check_ybar_index(const ExactMatrix& x, int i, int j, int k) {
    if (!RskArrays::in_ybar_range(x.rows(), x.cols(), i, j, k))
        throw ArgumentError("index (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                            ") outside the ybar array");
}

}  // namespace

Scalar ybar_by_enumeration(const ExactMatrix& x, int i, int j, int k) {
    check_ybar_index(x, i, j, k);
    if (k == 0) return Scalar(1);
    Network g = plain_grid(i, j);
    std::vector<Scalar> w = vertex_weights(g, x);
    std::vector<VertexId> from, to;
    for (int s = 1; s <= k; ++s) {
        from.push_back(*g.find_vertex(Coord{1, s}));
        to.push_back(*g.find_vertex(Coord{i, j - k + s}));
    }
    return nc_weight_sum(g, from, to, WeightMode::Hat, &w);
}

Scalar ybar_by_lgv(const ExactMatrix& x, int i, int j, int k) {
    check_ybar_index(x, i, j, k);
    if (k == 0) return Scalar(1);
    ExactMatrix m(k, k);
    for (int a = 1; a <= k; ++a) {
        // Hat-weighted path sums from (1, a) over the rectangle [1,i] x [a,j].
        std::vector<std::vector<Scalar>> h(i + 1, std::vector<Scalar>(j + 1));
        for (int r = 1; r <= i; ++r)
            for (int c = a; c <= j; ++c) {
                Scalar in = (r == 1 && c == a) ? Scalar(1) : h[r - 1][c] + h[r][c - 1];
                h[r][c] = in * x(r - 1, c - 1);
            }
        for (int b = 1; b <= k; ++b) m(a - 1, b - 1) = h[i][j - k + b];
    }
    return determinant(m);
}

bool RskArrays::in_ybar_range(int m, int n, int i, int j, int k) {
    if (k < 0 || k > std::min(i, j)) return false;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            if (i + a >= 1 && i + a <= m && j + b >= 1 && j + b <= n) return true;
    return false;
}

bool RskArrays::in_y_range(int m, int n, int i, int j, int k) {
    if (k < 0 || k > std::min(i, j) + 1) return false;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            if (i + a >= 1 && i + a <= m && j + b >= 1 && j + b <= n) return true;
    return false;
}

RskArrays::RskArrays(const ExactMatrix& x) : x_(x), m_(x.rows()), n_(x.cols()) {
    if (m_ < 1 || n_ < 1) throw ArgumentError("RSK input must be nonempty");
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Scalar& e = x(i, j);
            if (e.is_zero() || (e.is_constant() && e.constant_value().sign() < 0))
                throw ArgumentError("RSK input entries must be positive");
        }
    for (int i = 0; i <= m_; ++i)
        for (int j = 0; j <= n_; ++j)
            for (int k = 0; k <= std::min(i, j); ++k) {
                if (!in_ybar_range(m_, n_, i, j, k)) continue;
                Scalar by_paths = ybar_by_enumeration(x, i, j, k);
                Scalar by_det = ybar_by_lgv(x, i, j, k);
                if (by_paths != by_det)
                    throw IntegrityError("ybar(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + "): enumeration " + by_paths.to_string() +
                                         " differs from determinant " + by_det.to_string());
                ybar_.emplace(ArrayIndex{i, j, k}, std::move(by_paths));
            }
}

const Scalar& RskArrays::ybar(int i, int j, int k) const {
    auto it = ybar_.find({i, j, k});
    if (it == ybar_.end())
        throw ArgumentError("index (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                            ") outside the ybar array");
    return it->second;
}

Fraction RskArrays::ytilde(int i, int j, int k) const { return Fraction(ybar(i, j, k), rect(x_, i, j)); }

Fraction RskArrays::y(int i, int j, int k) const {
    if (!in_y_range(m_, n_, i, j, k))
        throw ArgumentError("index (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                            ") outside the y array");
    if (k == 0 || k == std::min(i, j) + 1) return Fraction(1);
    return Fraction(ybar(i, j, k), ybar(i, j, k - 1));
}

Fraction RskArrays::z(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_) throw ArgumentError("z index outside the matrix");
    int l = std::min(m_ - i, n_ - j);
    return y(i + l, j + l, l + 1);
}

void CheckReport::record(bool pass, const std::string& what) {
    ++checked;
    if (pass) return;
    ++failed;
    if (ok) first_failure = what;
    ok = false;
}

namespace {

std::string idx(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

CheckReport verify_octahedron(const RskArrays& a) {
    CheckReport rep;
    for (const auto& [index, value] : a.ybar_entries()) {
        auto [i, j, k] = index;
        int lo = std::min(i, j);
        if (k == 0) rep.record(a.ytilde(i, j, 0) == Fraction(Scalar(1), rect(a.input(), i, j)), "boundary k=0 at " + idx(i, j, k));
        if (k == lo) rep.record(a.ytilde(i, j, k) == Fraction(1), "boundary k=min at " + idx(i, j, k));
        if (k >= 1 && k <= lo - 1) {
            Fraction lhs = a.ytilde(i, j, k) * a.ytilde(i - 1, j - 1, k - 1);
            Fraction rhs = a.ytilde(i - 1, j, k) * a.ytilde(i, j - 1, k - 1) + a.ytilde(i - 1, j, k - 1) * a.ytilde(i, j - 1, k);
            rep.record(lhs == rhs, "recurrence at " + idx(i, j, k));
        }
    }
    return rep;
}

bool verify_star_equation(const RskArrays& a, int i, int j, int k) {
    if (i < 1 || i > a.m() || j < 1 || j > a.n() || k < 1 || k > std::min(i, j) - 1)
        throw ArgumentError("star equation needs 1 <= k <= min(i,j) - 1 at a grid point, got " + idx(i, j, k));
    Scalar lhs = a.ybar(i, j, k) * a.ybar(i - 1, j - 1, k - 1);
    Scalar rhs = (a.ybar(i - 1, j, k) * a.ybar(i, j - 1, k - 1) + a.ybar(i - 1, j, k - 1) * a.ybar(i, j - 1, k)) *
                 a.input()(i - 1, j - 1);
    return lhs == rhs;
}

CheckReport verify_star_all(const RskArrays& a) {
    CheckReport rep;
    for (int i = 1; i <= a.m(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            for (int k = 1; k <= std::min(i, j) - 1; ++k) rep.record(verify_star_equation(a, i, j, k), "star equation at " + idx(i, j, k));
    return rep;
}

Fraction y_recursion_rhs(const RskArrays& a, int i, int j, int k) {
    if (i < 1 || i > a.m() || j < 1 || j > a.n() || k < 1 || k > std::min(i, j))
        throw ArgumentError("y recursion needs 1 <= k <= min(i,j) at a grid point, got " + idx(i, j, k));
    Fraction xk = k == 1 ? Fraction(a.input()(i - 1, j - 1)) : Fraction(1);
    Fraction num = xk * (a.y(i - 1, j, k) + a.y(i, j - 1, k));
    Fraction den = a.y(i - 1, j - 1, k - 1) * (a.y(i - 1, j, k - 1).inverse() + a.y(i, j - 1, k - 1).inverse());
    return num / den;
}

CheckReport verify_y_recursion(const RskArrays& a, RecursionRange range) {
    CheckReport rep;
    for (int i = 1; i <= a.m(); ++i)
        for (int j = 1; j <= a.n(); ++j) {
            int lo = range == RecursionRange::Full ? 1 : 2;
            int hi = range == RecursionRange::Full ? std::min(i, j) : std::min(i, j) - 1;
            for (int k = lo; k <= hi; ++k) {
                Fraction want = a.y(i, j, k);
                Fraction got = y_recursion_rhs(a, i, j, k);
                rep.record(want == got, "y" + idx(i, j, k) + " = " + want.simplified().to_string() +
                                            " but the recursion gives " + got.simplified().to_string());
            }
        }
    return rep;
}

namespace {

template <class Cell>
void level_table(std::ostringstream& out, int i_lo, int i_hi, int j_lo, int j_hi, Cell cell) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(std::max(0, j_hi - j_lo + 1), 0);
    for (int i = i_lo; i <= i_hi; ++i) {
        cells.emplace_back();
        for (int j = j_lo; j <= j_hi; ++j) {
            cells.back().push_back(cell(i, j));
            width[j - j_lo] = std::max(width[j - j_lo], cells.back().back().size());
        }
    }
    for (const auto& row : cells) {
        out << " ";
        for (std::size_t c = 0; c < row.size(); ++c) out << " " << std::string(width[c] - row[c].size(), ' ') << row[c];
        out << "\n";
    }
}

}  // namespace

std::string format_arrays(const RskArrays& a) {
    std::ostringstream out;
    const int m = a.m(), n = a.n();
    const int depth = std::min(m, n);
    out << "Ybar\n";
    for (int k = 0; k <= depth; ++k) {
        out << " k=" << k << "\n";
        level_table(out, k, m, k, n, [&](int i, int j) { return a.ybar(i, j, k).to_string(); });
    }
    out << "Ytilde\n";
    for (int k = 0; k <= depth; ++k) {
        out << " k=" << k << "\n";
        level_table(out, k, m, k, n, [&](int i, int j) { return a.ytilde(i, j, k).simplified().to_string(); });
    }
    out << "Y\n";
    for (int k = 0; k <= depth + 1; ++k) {
        out << " k=" << k << "\n";
        level_table(out, std::max(-1, k - 1), m, std::max(-1, k - 1), n,
                    [&](int i, int j) { return a.y(i, j, k).simplified().to_string(); });
    }
    out << "Z\n";
    level_table(out, 1, m, 1, n, [&](int i, int j) { return a.z(i, j).simplified().to_string(); });
    return out.str();
}

}  // namespace interlace
