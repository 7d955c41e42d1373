#pragma once

#include "interlace/network.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace interlace {

// Dense matrix of exact scalars. Accessors are 0-based; minor() takes 1-based index sets.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_constant() const;
    ExactMatrix specialize(const std::map<VarIndex, Rational>& values) const;
    ExactMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
    ExactMatrix transpose() const;
    std::vector<VarIndex> variables() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

// Gaussian elimination over the rationals for constant matrices, expansion over column
// subsets otherwise.
Scalar determinant(const ExactMatrix& m);
// det m[rows|cols]; both must be strictly increasing 1-based sets of equal size.
Scalar minor(const ExactMatrix& m, const IndexSet& rows, const IndexSet& cols);

// Memoized minors by cofactor expansion along the first chosen row. Up to 32 rows and columns.
class MinorTable {
public:
    explicit MinorTable(const ExactMatrix& m);
    // Bit i of a mask selects row or column i + 1. The empty minor is 1.
    const Scalar& get(std::uint32_t rowmask, std::uint32_t colmask);
    const Scalar& get(const IndexSet& rows, const IndexSet& cols);

private:
    const ExactMatrix& m_;
    std::unordered_map<std::uint64_t, Scalar> memo_;
};

std::uint32_t index_mask(const IndexSet& s);
IndexSet mask_indices(std::uint32_t mask);

// Exact rank of a constant matrix.
int rank(const ExactMatrix& m);
// For symbolic entries: three random positive specializations, then a scan of all
// (r+1)-minors. The scan decides; a specialization with larger rank ends early.
bool rank_at_most(const ExactMatrix& m, int r);

// Whitespace-separated entries, one row per line; entries use the polynomial syntax
// without spaces.
ExactMatrix parse_matrix(const std::string& text);
std::string format_matrix(const ExactMatrix& m);

}  // namespace interlace
