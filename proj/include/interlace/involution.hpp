#pragma once

#include "interlace/paths.hpp"

#include <optional>
#include <string>
#include <vector>

namespace interlace {

// Vertices shared by at least two paths of a tuple. If a vertex comes after another on
// some path it is below it; the order is the transitive closure of that relation.
class IntersectionPoset {
public:
    explicit IntersectionPoset(const PathTuple& paths);

    int size() const { return static_cast<int>(elements_.size()); }
    VertexId vertex(int e) const { return elements_[e]; }
    const std::vector<VertexId>& vertices() const { return elements_; }
    // 0-based indices of the paths through element e.
    const std::vector<int>& label(int e) const { return labels_[e]; }
    std::optional<int> index_of(VertexId v) const;
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool less(int a, int b) const { return a != b && leq_[a][b]; }
    bool comparable(int a, int b) const { return leq_[a][b] || leq_[b][a]; }

    // Size of the largest antichain (Dilworth width).
    int width() const;
    // Partition into width() chains, each sorted from bottom to top.
    std::vector<std::vector<int>> chain_partition() const;

private:
    std::vector<VertexId> elements_;
    std::vector<std::vector<int>> labels_;
    std::vector<std::vector<char>> leq_;
};

using Antichain = std::vector<int>;  // sorted element indices

// X <= Y when every x in X lies below some y in Y.
bool antichain_leq(const IntersectionPoset& p, const Antichain& x, const Antichain& y);
std::vector<Antichain> maximum_antichains(const IntersectionPoset& p);
// Minimum of the maximum-size antichains, found by comparing every pair.
Antichain min_max_antichain(const IntersectionPoset& p);
// Same minimum by folding the chainwise meet over all maximum antichains.
Antichain min_max_antichain_by_meets(const IntersectionPoset& p);

// Exchanges the tails after v of the two paths through v. Throws unless v is a 2-crossing.
PathTuple flip(const PathTuple& paths, VertexId v);
PathTuple flip_set(PathTuple paths, const std::vector<VertexId>& at);

struct TauStep {
    VertexId w = -1;  // w_c
    int m = 0;        // red index through w_c, 1-based
    VertexId v = -1;  // v_c
    std::vector<VertexId> flip;  // FLIP_c
    int n = 0;        // blue index through v_c, 1-based
};

struct TauTrace {
    std::vector<VertexId> antichain;  // U
    int n0 = 0;                       // blue index missing from U, 1-based
    std::vector<TauStep> steps;
    std::vector<VertexId> flip;       // final FLIP
    int pivot = 0;                    // sink index left out of J and J'
    int poset_size = 0;
};

struct TauResult {
    PncPair pair;
    TauTrace trace;
};

// Sink-swapping involution. Needs a stored source cut of size k (VacuousDomain if smaller).
TauResult tau(const Network& g, const PncPair& pair);
std::string format_trace(const Network& g, const PncPair& input, const TauResult& result);

// Reverses every path, moving the pair into the opposite network with pattern (J°, I°)
// where X° = {2k - x}.
PncPair reverse_pair(const Network& g, const PncPair& pair);
IndexSet reflect(const IndexSet& s, int k);

// Source-swapping involution: reverse, sink-swap in the opposite network, reverse back.
PncPair sigma(const Network& g, const Network& g_op, const PncPair& pair);

enum class SwapKind { NotSwap, Swap, Balanced, End };
struct SwapClass {
    SwapKind kind = SwapKind::NotSwap;
    int pivot = 0;
};
// End implies balanced implies swap; the strongest kind is reported.
SwapClass classify_swap(const IndexSet& a, const IndexSet& b, int k);

struct RelationCheck {
    bool holds = false;
    Scalar lhs;
    Scalar rhs;
    std::string detail;
};

// sum over J with J_even = K of wt(I,J) against the sum over J' with J'_even = K'.
RelationCheck verify_parity_relation(PatternWeights& w, int k, const IndexSet& I, const IndexSet& K);
// wt(I,J) = wt(I,J') + wt(I,J'') with J' = [2,2k-1] \ J and J'' = [1,2k-2] \ J.
// Requires 1, 2k-1 not in J.
RelationCheck verify_three_term(PatternWeights& w, int k, const IndexSet& I, const IndexSet& J);
// wt(I,J) = sum over odd pivots of wt(I^i, J) for I = J = evens, on a source-swap network.
RelationCheck verify_source_swap_sum(PatternWeights& w, int k);

struct InvolutionReport {
    std::size_t pairs = 0;
    std::size_t fixed_points = 0;
    bool involution = true;
    bool weight_preserving = true;
    bool balanced = true;
    bool end_swap = true;
    std::string first_failure;
};

// Runs tau over every pair of every pattern and checks the involution properties.
InvolutionReport check_tau_exhaustive(const Network& g);

}  // namespace interlace
