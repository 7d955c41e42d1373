#pragma once

#include "interlace/fraction.hpp"
#include "interlace/matrix.hpp"
#include "interlace/paths.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace interlace {

// x_ij becomes the variable with index 10*i + j, so it renders as x12. Needs m, n <= 9.
VarIndex rsk_variable(int i, int j);
ExactMatrix symbolic_input(int m, int n);
// Positive rationals with numerator and denominator in [1, 100].
ExactMatrix random_input(int m, int n, std::uint64_t seed);

// Product of x_rs over r <= i, s <= j; 1 outside [1,m] x [1,n].
Scalar rect(const ExactMatrix& x, int i, int j);
// Increasing and decreasing triangular products of length l (1 when l = 0).
Scalar tri_plus(const ExactMatrix& x, int i, int j, int l);
Scalar tri_minus(const ExactMatrix& x, int i, int j, int l);

using ArrayIndex = std::array<int, 3>;

class RskArrays {
public:
    // Computes every ybar entry by tuple enumeration and by an LGV determinant and throws
    // IntegrityError if they disagree.
    explicit RskArrays(const ExactMatrix& x);

    int m() const { return m_; }
    int n() const { return n_; }
    const ExactMatrix& input() const { return x_; }

    static bool in_ybar_range(int m, int n, int i, int j, int k);
    static bool in_y_range(int m, int n, int i, int j, int k);

    const Scalar& ybar(int i, int j, int k) const;
    Fraction ytilde(int i, int j, int k) const;
    Fraction y(int i, int j, int k) const;
    Fraction z(int i, int j) const;
    const std::map<ArrayIndex, Scalar>& ybar_entries() const { return ybar_; }

private:
    ExactMatrix x_;
    int m_ = 0;
    int n_ = 0;
    std::map<ArrayIndex, Scalar> ybar_;
};

// Sum of hat weights over RSKPath(i, j, k) by enumeration, and the same sum as a determinant.
Scalar ybar_by_enumeration(const ExactMatrix& x, int i, int j, int k);
Scalar ybar_by_lgv(const ExactMatrix& x, int i, int j, int k);

struct CheckReport {
    bool ok = true;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;
    void record(bool pass, const std::string& what);
};

// Boundary values and the recurrence for 1 <= k <= min(i,j) - 1.
CheckReport verify_octahedron(const RskArrays& a);
// ybar_ijk ybar_{i-1,j-1,k-1} = (ybar_{i-1,j,k} ybar_{i,j-1,k-1} + ybar_{i-1,j,k-1} ybar_{i,j-1,k}) x_ij.
bool verify_star_equation(const RskArrays& a, int i, int j, int k);
CheckReport verify_star_all(const RskArrays& a);

enum class RecursionRange {
    Full,     // 1 <= k <= min(i,j)
    Interior  // 2 <= k <= min(i,j) - 1
};
CheckReport verify_y_recursion(const RskArrays& a, RecursionRange range);
// Right-hand side of the recursion for y_ijk.
Fraction y_recursion_rhs(const RskArrays& a, int i, int j, int k);

// Labeled tables for every level of each array, bottom-right corners aligned.
std::string format_arrays(const RskArrays& a);

// Self-tests of the three extension maps behind the star equation, on Gamma^k_{i,j}.
struct BijectionReport {
    std::string name;
    std::size_t domain = 0;
    std::size_t codomain = 0;
    bool bijective = false;
    bool weights_ok = false;
    std::string failure;
};
std::vector<BijectionReport> check_bijections(const ExactMatrix& x, int i, int j, int k);

}  // namespace interlace
