#include "interlace/matrix.hpp"

#include "interlace/errors.hpp"
#include "interlace/paths.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace interlace {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ArgumentError("matrix dimensions must be nonnegative");
    a_.assign(static_cast<std::size_t>(rows) * cols, Scalar(0));
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw ArgumentError("rows have different lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

bool ExactMatrix::is_constant() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_constant(); });
}

ExactMatrix ExactMatrix::specialize(const std::map<VarIndex, Rational>& values) const {
    ExactMatrix m = *this;
    for (auto& s : m.a_) s = s.specialize(values);
    return m;
}

ExactMatrix ExactMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] < 1 || rows[i] > rows_ || cols[j] < 1 || cols[j] > cols_)
                throw ArgumentError("submatrix index out of range");
            m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i] - 1, cols[j] - 1);
        }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

std::vector<VarIndex> ExactMatrix::variables() const {
    std::set<VarIndex> vs;
    for (const auto& s : a_)
        for (VarIndex v : s.variables()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matrix product dimension mismatch");
    ExactMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            PolynomialAccumulator acc;
            for (int t = 0; t < a.cols(); ++t) acc.add(a(i, t) * b(t, j));
            m(i, j) = acc.result();
        }
    return m;
}

namespace {

Rational rational_determinant(const ExactMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j).constant_value();
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rational inv = a[c][c].inverse();
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Rational f = a[r][c] * inv;
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

// Expansion over the columns used by the first rows: O(2^n n) products.
Scalar symbolic_determinant(const ExactMatrix& m) {
    const int n = m.rows();
    if (n > 24) throw ArgumentError("symbolic determinant limited to 24 rows");
    std::vector<Scalar> dp(std::size_t{1} << n);
    std::vector<char> live(dp.size(), 0);
    dp[0] = Scalar(1);
    live[0] = 1;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask]) continue;
        int row = std::popcount(mask);
        if (row == n) continue;
        for (int c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            const Scalar& e = m(row, c);
            if (e.is_zero()) continue;
            int above = std::popcount(mask >> (c + 1));
            Scalar term = dp[mask] * e;
            if (above % 2) term = -term;
            dp[mask | (1u << c)] += term;
            live[mask | (1u << c)] = 1;
        }
    }
    return dp.back();
}

void check_index_set(const IndexSet& s, int bound, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > bound) throw ArgumentError(std::string(what) + " index out of range");
        if (i && s[i] <= s[i - 1]) throw ArgumentError(std::string(what) + " indices must be strictly increasing");
    }
}

}  // namespace

Scalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    if (m.is_constant()) return Scalar(rational_determinant(m));
    return symbolic_determinant(m);
}

Scalar minor(const ExactMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw ArgumentError("minor needs equally many rows and columns");
    check_index_set(rows, m.rows(), "row");
    check_index_set(cols, m.cols(), "column");
    return determinant(m.submatrix(rows, cols));
}

std::uint32_t index_mask(const IndexSet& s) {
    std::uint32_t mask = 0;
    for (int i : s) {
        if (i < 1 || i > 32) throw ArgumentError("index outside [1,32]");
        mask |= 1u << (i - 1);
    }
    return mask;
}

IndexSet mask_indices(std::uint32_t mask) {
    IndexSet out;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

MinorTable::MinorTable(const ExactMatrix& m) : m_(m) {
    if (m.rows() > 32 || m.cols() > 32) throw ArgumentError("minor table limited to 32 rows and columns");
}

const Scalar& MinorTable::get(std::uint32_t rowmask, std::uint32_t colmask) {
    if (std::popcount(rowmask) != std::popcount(colmask)) throw ArgumentError("minor needs equally many rows and columns");
    std::uint64_t key = (std::uint64_t{rowmask} << 32) | colmask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Scalar value;
    if (rowmask == 0) {
        value = Scalar(1);
    } else {
        int r = std::countr_zero(rowmask);
        std::uint32_t rest = rowmask & (rowmask - 1);
        PolynomialAccumulator acc;
        int pos = 0;
        for (int c = 0; c < m_.cols(); ++c) {
            if (!(colmask & (1u << c))) continue;
            const Scalar& e = m_(r, c);
            if (!e.is_zero()) {
                const Scalar& sub = get(rest, colmask & ~(1u << c));
                if (!sub.is_zero()) acc.add(e * sub, Rational(pos % 2 ? -1 : 1));
            }
            ++pos;
        }
        value = acc.result();
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

const Scalar& MinorTable::get(const IndexSet& rows, const IndexSet& cols) {
    check_index_set(rows, m_.rows(), "row");
    check_index_set(cols, m_.cols(), "column");
    return get(index_mask(rows), index_mask(cols));
}

int rank(const ExactMatrix& m) {
    if (!m.is_constant()) throw UnsupportedOperation("exact rank needs a constant matrix");
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).constant_value();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && a[p][c].is_zero()) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        Rational inv = a[r][c].inverse();
        for (int i = r + 1; i < m.rows(); ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c] * inv;
            for (int j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

bool rank_at_most(const ExactMatrix& m, int r) {
    if (r >= std::min(m.rows(), m.cols())) return true;
    if (m.is_constant()) return rank(m) <= r;
    std::vector<VarIndex> vars = m.variables();
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> pick(1, 97);
    for (int sample = 0; sample < 3; ++sample) {
        std::map<VarIndex, Rational> at;
        for (VarIndex v : vars) at[v] = Rational(pick(rng), pick(rng));
        if (rank(m.specialize(at)) > r) return false;
    }
    MinorTable table(m);
    for (const auto& rows : subsets(m.rows(), r + 1))
        for (const auto& cols : subsets(m.cols(), r + 1))
            if (!table.get(rows, cols).is_zero()) return false;
    return true;
}

ExactMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Scalar>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<Scalar> row;
        std::string tok;
        while (tokens >> tok) {
            try {
                row.push_back(parse_polynomial(tok));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()),
                             lineno);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    return ExactMatrix::from_rows(rows);
}

std::string format_matrix(const ExactMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> width(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells[i][j] = m(i, j).to_compact_string();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += std::string(width[j] - cells[i][j].size(), ' ') + cells[i][j];
        }
        out += '\n';
    }
    return out;
}

}  // namespace interlace
