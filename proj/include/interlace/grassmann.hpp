#pragma once

#include "interlace/matrix.hpp"
#include "interlace/paths.hpp"

#include <optional>
#include <string>
#include <vector>

namespace interlace {

// Entry (i, j) sums the weights of all paths from source i to sink j.
ExactMatrix path_matrix(const Network& g);

struct InterlacingCheck {
    bool interlacing = false;
    bool totally_nonnegative = false;
    bool rank_ok = false;        // rank <= k
    bool inner_rank_ok = false;  // rank of the middle 2k-3 columns <= k-1
    // First violating minor, 1-based.
    IndexSet rows;
    IndexSet cols;
    std::string certificate;
};

// Symbolic minors count as nonnegative when every coefficient is.
InterlacingCheck check_interlacing_matrix(const ExactMatrix& m, int k);
bool is_interlacing_matrix(const ExactMatrix& m, int k);

// Coordinates of a point of Gr(l, n) indexed by l-subsets of [n].
class PluckerVector {
public:
    PluckerVector() = default;
    // All maximal minors of an l x n matrix.
    static PluckerVector from_matrix(const ExactMatrix& m);

    int l() const { return l_; }
    int n() const { return n_; }
    // Sorted 1-based set.
    const Scalar& at(const IndexSet& s) const;
    // Any tuple: zero with repeats, otherwise the sign of the sorting permutation times the
    // coordinate of the sorted set.
    Scalar signed_at(const std::vector<int>& tuple) const;
    const std::vector<IndexSet>& index_sets() const { return sets_; }
    std::vector<IndexSet> vanishing_sets() const;

private:
    int l_ = 0;
    int n_ = 0;
    std::vector<IndexSet> sets_;
    std::vector<Scalar> values_;
};

// The l x (l + n) block matrix (identity | alternating-sign rows of a in reverse order).
ExactMatrix phi_matrix(const ExactMatrix& a);
// Column set of phi(a) whose coordinate equals det a[rows|cols].
IndexSet phi_index(int l, const IndexSet& rows, const IndexSet& cols);
// Plucker vector of phi_matrix(a). Compares every minor of a against its coordinate and
// throws IntegrityError on the first mismatch.
PluckerVector phi_embed(const ExactMatrix& a);

struct IdentityCheck {
    bool holds = false;
    Scalar lhs;
    Scalar rhs;
    std::string detail;
};

// Delta_p Delta_q against the sum over m-subsets of positions of p, exchanging those entries
// of p with the last m entries of q.
IdentityCheck plucker_relation(const PluckerVector& v, const std::vector<int>& p, const std::vector<int>& q, int m);

// det M[Ib|Jb] det M[I|J] = det M[Ib|Jb'] det M[I|J'] + det M[Ib|Jb''] det M[I|J''].
// Throws ArgumentError if M is not interlacing or 1 or 2k-1 lies in J.
IdentityCheck verify_intermat(const ExactMatrix& m, int k, const IndexSet& I, const IndexSet& J);
// Same identity written with the Plucker coordinates of phi(M).
IdentityCheck verify_intermat_plucker(const PluckerVector& v, int k, const IndexSet& I, const IndexSet& J);

// (2k-1)-subsets of [4k-2] forced to vanish on phi of an interlacing matrix: at least k+1
// entries above 2k-1, or exactly k of them with neither 2k nor 4k-2 present.
bool in_mstar(const IndexSet& s, int k);
std::vector<IndexSet> mstar_set(int k);
// Thresholds k and k-1 instead of k+1 and k. Kept for comparison only.
bool in_mstar_shifted(const IndexSet& s, int k);

struct MStarMembership {
    bool in_cell_closure = false;  // every coordinate in M* vanishes
    bool exact_cell = false;       // the vanishing set is exactly M*
    std::optional<IndexSet> first_violation;
};
MStarMembership mstar_membership(const PluckerVector& v, int k);

// Two vanishing conditions behind the three-term determinant identity, for l = 2k-1, n = 4k-2.
bool vanishing_condition_a(const IndexSet& s, int k);
bool vanishing_condition_b(const IndexSet& s, int k);
// First coordinate covered by (a) or (b) that does not vanish.
std::optional<IndexSet> check_vanishing_conditions(const PluckerVector& v, int k);

}  // namespace interlace
