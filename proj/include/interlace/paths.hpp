#pragma once

#include "interlace/network.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace interlace {

using Path = std::vector<VertexId>;
using PathTuple = std::vector<Path>;

// Complement of a 1-based index set within [1, total].
IndexSet complement(const IndexSet& s, int total);
// All size-`size` subsets of [1, total] in lexicographic order.
std::vector<IndexSet> subsets(int total, int size);
std::string format_index_set(const IndexSet& s);

// Entries of `terminals` at the 1-based positions in `idx`.
std::vector<VertexId> select_terminals(const std::vector<VertexId>& terminals, const IndexSet& idx);

bool is_path(const Network& g, const Path& p);
// Vertex-disjoint, endpoints included.
bool is_noncrossing(const PathTuple& t);

Scalar weight(const Network& g, const Path& p);
Scalar weight(const Network& g, const PathTuple& t);
// Product of per-vertex weights over every visited vertex.
Scalar hat_weight(const std::vector<Scalar>& vertex_weights, const Path& p);
Scalar hat_weight(const std::vector<Scalar>& vertex_weights, const PathTuple& t);

// Visits every vertex-disjoint tuple (p_1..p_r) with p_i from `from[i]` to `to[i]`, in
// lexicographic order of vertex ids. Repeated endpoints give no tuples.
void for_each_nc_tuple(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                       const std::function<void(const PathTuple&)>& visit);
std::vector<PathTuple> enumerate_nc_tuples(const Network& g, const std::vector<VertexId>& from,
                                           const std::vector<VertexId>& to);
std::uint64_t count_nc_tuples(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to);

enum class WeightMode { Edge, Hat };

// Sum of tuple weights over the same enumeration. Hat mode needs vertex weights.
Scalar nc_weight_sum(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                     WeightMode mode = WeightMode::Edge, const std::vector<Scalar>* vertex_weights = nullptr);

// NCPath(I, J) for 1-based source and sink index sets of equal size.
std::vector<PathTuple> enumerate_nc(const Network& g, const IndexSet& sources, const IndexSet& sinks);

// A red tuple in NCPath(I, J) and a blue tuple in NCPath(I-bar, J-bar). The pattern is kept
// explicitly because repeated terminals let one geometric pair belong to several patterns.
struct PncPair {
    IndexSet I;
    IndexSet J;
    PathTuple red;
    PathTuple blue;
    friend bool operator==(const PncPair&, const PncPair&) = default;
    friend auto operator<=>(const PncPair&, const PncPair&) = default;
};

// Requires |I| = |J| = k-1.
std::vector<PncPair> enumerate_pnc(const Network& g, const IndexSet& I, const IndexSet& J);
void validate_pattern(const Network& g, const IndexSet& I, const IndexSet& J);
// Every (I, J) with |I| = |J| = k-1.
std::vector<std::pair<IndexSet, IndexSet>> all_patterns(int k);

// Memoized NCPath sums. pattern_weight(I, J) = sum over NCPath(I,J) times sum over NCPath(I-bar,J-bar).
class PatternWeights {
public:
    explicit PatternWeights(const Network& g, WeightMode mode = WeightMode::Edge,
                            const std::vector<Scalar>* vertex_weights = nullptr);
    const Scalar& nc_sum(const IndexSet& sources, const IndexSet& sinks);
    Scalar pattern_weight(const IndexSet& I, const IndexSet& J);

private:
    const Network& g_;
    WeightMode mode_;
    const std::vector<Scalar>* vw_;
    std::map<std::pair<IndexSet, IndexSet>, Scalar> cache_;
};

Scalar pattern_weight(const Network& g, const IndexSet& I, const IndexSet& J, WeightMode mode = WeightMode::Edge,
                      const std::vector<Scalar>* vertex_weights = nullptr);

std::string format_path(const Network& g, const Path& p);

}  // namespace interlace
