#pragma once

#include "interlace/paths.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace interlace {

// Weakly decreasing nonnegative parts; trailing zeros are dropped.
class Partition {
public:
    Partition() = default;
    // Throws ArgumentError unless `parts` is weakly decreasing and nonnegative.
    explicit Partition(const std::vector<int>& parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    // nullopt for sequences with a negative entry or an ascent.
    static std::optional<Partition> from_sequence(const std::vector<int>& seq);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    // i-th part, 1-based; 0 past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;
    Partition conjugate() const;
    // Parts padded with zeros to `len` entries.
    std::vector<int> padded(int len) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Rectangle c^r.
Partition rectangle(int c, int r);
// All partitions of `size` with at most `max_parts` parts (all if negative), in reverse
// lexicographic order.
std::vector<Partition> partitions_of(int size, int max_parts = -1);
std::string format_sequence(const std::vector<int>& seq);

// Complete homogeneous polynomial of degree r in x_a..x_b (0 for r < 0, 1 for r = 0).
Polynomial complete_homogeneous(int r, int a, int b);
// Schur polynomial in the window x_a..x_b by Jacobi-Trudi; memoized.
Polynomial schur(const Partition& lambda, int a, int b);
inline Polynomial schur(const Partition& lambda, int n) { return schur(lambda, 1, n); }
// Zero when the sequence is not a partition.
Polynomial schur_or_zero(const std::vector<int>& seq, int a, int b);
// Oracles: semistandard tableaux, and weighted lattice paths in the plane.
Polynomial schur_by_tableaux(const Partition& lambda, int a, int b);
Polynomial schur_by_paths(const Partition& lambda, int a, int b);

// Skew Schur polynomial by the skew Jacobi-Trudi determinant; 0 unless outer contains inner.
Polynomial skew_schur(const Partition& outer, const Partition& inner, int a, int b);
Polynomial skew_schur_by_tableaux(const Partition& outer, const Partition& inner, int a, int b);
// nu minus its top-left box. Throws ArgumentError for the empty partition.
Polynomial skew_schur_minus_box(const Partition& nu, int a, int b);
// d/dx_1 of s_nu(x_1..x_n) at x_1 = 0, a polynomial in x_2..x_n.
Polynomial skew_minus_box_by_derivative(const Partition& nu, int n);

// The identities of the Schur section, checked as polynomial identities in x_1..x_n.
enum class SchurIdentity {
    ThreeTerm,         // (a) flagged three-term identity with parameter t
    ThreeTermLast,     // (b) the case t = k-1
    Rectangle,         // (c) rectangles c^r
    Kirillov,          // (d)
    SkewThreeTerm,     // (e) the derivative at x_1 = 0 of (a)
    FulmekKleber,      // (f)
    InterlacingPairs,  // (g) sum over i of s_{lambda^i} s_{mu^i}
};

struct IdentityParams {
    std::vector<int> lambda;  // (a), (b), (e), (g); nu for (f)
    std::vector<int> mu;      // (g)
    int t = 0;                // (a), (e)
    int c = 0;                // (c), (d)
    int r = 0;                // (c), (d)
};

struct IdentityCheckResult {
    bool holds = false;
    Polynomial lhs;
    Polynomial rhs;
    std::string statement;  // the instance with its partitions filled in
};

SchurIdentity parse_identity_name(const std::string& name);
std::string identity_name(SchurIdentity id);
// Throws ArgumentError when the parameters violate the statement's hypotheses.
IdentityCheckResult verify_identity(SchurIdentity id, const IdentityParams& p, int n);

// The partitions mu, nu, rho of (a) for lambda and t.
struct ThreeTermShapes {
    std::vector<int> mu, nu, rho;
};
ThreeTermShapes three_term_shapes(const std::vector<int>& lambda, int t);
// lambda^i and mu^i of (g) as raw sequences; either may fail to be a partition.
std::pair<std::vector<int>, std::vector<int>> interlacing_terms(const std::vector<int>& lambda,
                                                                const std::vector<int>& mu, int i);

// Path-network route: builds the matching Schur path network and compares its pattern weights
// with the corresponding Schur products. Covers (a) and (g).
struct NetworkRouteResult {
    bool holds = false;
    std::vector<std::string> lines;  // one per compared pattern weight
};
NetworkRouteResult verify_three_term_by_network(const std::vector<int>& lambda, int t, int n);
NetworkRouteResult verify_interlacing_by_network(const std::vector<int>& lambda, const std::vector<int>& mu, int n);

// Expansion in the Schur basis, keyed by partition.
using SchurExpansion = std::map<Partition, Rational>;
std::string format_expansion(const SchurExpansion& e);

// Invariant under every adjacent transposition of x_1..x_n (and free of other variables).
bool is_symmetric(const Polynomial& f, int n);
// Repeatedly removes c * s_alpha for the graded-lex leading monomial x^alpha.
SchurExpansion lr_expand(const Polynomial& f, int n);
Polynomial from_expansion(const SchurExpansion& e, int n);
// Coefficients of s_lambda s_mu counted as Littlewood-Richardson tableaux, restricted to
// shapes with at most n rows.
SchurExpansion lr_product_by_tableaux(const Partition& lambda, const Partition& mu, int n);

struct PositivityResult {
    bool positive = false;
    SchurExpansion expansion;
};
PositivityResult is_schur_positive(const Polynomial& f, int n);

// s_{(c^{r-1},c-1)} s_{(c^t,(c-1)^{r-t-1})} - s_{(c-1)^r} s_{((c+1)^t,c^{r-t-1})}.
Polynomial rectangle_positivity_difference(int c, int r, int t, int n);
// s_nu s_{nu without part t} - s_{(nu_1-1..nu_{t-1}-1,nu_t..nu_k)} s_{(nu_1+1..nu_{t-1}+1,nu_{t+1}..nu_k)}.
Polynomial removal_positivity_difference(const std::vector<int>& nu, int t, int n);

struct ConjectureTerm {
    int i = 0;
    std::vector<int> lambda_minus;
    std::vector<int> mu_plus;
    bool partitions = false;
    bool positive = false;
    SchurExpansion difference;  // s_{lambda-} s_{mu+} - s_lambda s_mu
};

struct ConjectureReport {
    std::vector<int> lambda, mu;  // padded to a common length
    std::vector<int> delta;
    std::vector<int> sigma;  // 1-based one-line notation
    std::vector<int> descents;  // the set D
    int n_vars = 0;
    std::vector<ConjectureTerm> terms;
    bool all_positive = true;
};
// n_vars <= 0 selects twice the common length.
ConjectureReport conjecture_check(const std::vector<int>& lambda, const std::vector<int>& mu, int n_vars = 0);
std::string format_conjecture_report(const ConjectureReport& r);

}  // namespace interlace
