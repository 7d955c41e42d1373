#pragma once

#include "interlace/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace interlace {

using VertexId = int;
// Sorted 1-based index set, e.g. a subset of [2k-1].
using IndexSet = std::vector<int>;

struct Coord {
    int r = 0;
    int c = 0;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

// Matrix: (row, col) with edges pointing down and right.
// Cartesian: (x, y) with edges pointing left and down.
enum class CoordConvention { None, Matrix, Cartesian };

struct Edge {
    VertexId from;
    VertexId to;
    Scalar weight;
};

// Cut sets certifying the bottleneck properties: sources_cut is N, sinks_cut is N_T.
struct Witness {
    std::vector<VertexId> sources_cut;
    std::vector<VertexId> sinks_cut;
};

// Acyclic planar network with 2k-1 distinguished sources and sinks (repeats allowed).
// Immutable once built; see NetworkBuilder.
class Network {
public:
    int vertex_count() const { return static_cast<int>(coords_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    // Outgoing edge indices of v, sorted by target id.
    const std::vector<int>& out_edges(VertexId v) const { return out_[v]; }
    const std::vector<int>& in_edges(VertexId v) const { return in_[v]; }
    // Edge index of u->v, or -1.
    int find_edge(VertexId u, VertexId v) const;

    const std::optional<Coord>& coord(VertexId v) const { return coords_[v]; }
    std::optional<VertexId> find_vertex(Coord c) const;
    // "(r,c)" when coordinates are known, "v<id>" otherwise.
    std::string label(VertexId v) const;

    int k() const { return k_; }
    const std::vector<VertexId>& sources() const { return sources_; }
    const std::vector<VertexId>& sinks() const { return sinks_; }
    VertexId source(int i) const { return sources_.at(i - 1); }  // 1-based
    VertexId sink(int j) const { return sinks_.at(j - 1); }      // 1-based

    CoordConvention convention() const { return convention_; }
    // False for user-supplied networks whose planar embedding was not checked.
    bool embedding_verified() const { return embedding_verified_; }
    const std::optional<Witness>& witness() const { return witness_; }
    const std::string& name() const { return name_; }

    bool reaches(VertexId u, VertexId v) const;
    const std::vector<VertexId>& topological_order() const { return topo_; }

private:
    friend class NetworkBuilder;
    std::vector<std::optional<Coord>> coords_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<VertexId> sources_, sinks_;
    int k_ = 0;
    CoordConvention convention_ = CoordConvention::None;
    bool embedding_verified_ = false;
    std::optional<Witness> witness_;
    std::string name_;
    std::map<Coord, VertexId> by_coord_;
    std::vector<VertexId> topo_;
    std::vector<std::vector<std::uint64_t>> reach_;
};

class NetworkBuilder {
public:
    VertexId add_vertex(std::optional<Coord> c = std::nullopt);
    void add_edge(VertexId u, VertexId v, Scalar w = Scalar(1));
    void set_k(int k) { k_ = k; }
    void set_sources(std::vector<VertexId> s) { sources_ = std::move(s); }
    void set_sinks(std::vector<VertexId> t) { sinks_ = std::move(t); }
    void set_convention(CoordConvention c) { convention_ = c; }
    void set_embedding_verified(bool v) { verified_ = v; }
    void set_witness(std::optional<Witness> w) { witness_ = std::move(w); }
    void set_name(std::string n) { name_ = std::move(n); }
    std::optional<VertexId> find_vertex(Coord c) const;

    // Validates ids, acyclicity and duplicate edges; with terminals also k >= 2 and
    // |S| = |T| = 2k-1.
    Network build(bool require_terminals = true) const;

private:
    std::vector<std::optional<Coord>> coords_;
    std::vector<Edge> edges_;
    std::vector<VertexId> sources_, sinks_;
    int k_ = 0;
    CoordConvention convention_ = CoordConvention::None;
    bool verified_ = false;
    std::optional<Witness> witness_;
    std::string name_;
};

using EdgeWeightFn = std::function<Scalar(Coord from, Coord to)>;

// Grid Gamma^k_{m,n} in matrix coordinates; requires m, n >= 3 and 2 <= k < min(m, n).
// Null weights mean all ones.
Network build_grid_network(int m, int n, int k, const EdgeWeightFn& weights = nullptr);

// Positive random rationals with numerator and denominator in [1, 100].
EdgeWeightFn random_edge_weights(std::uint64_t seed);

// Reverses every edge; sources become the reversed sinks and vice versa.
Network build_opposite(const Network& g);

// Two glued grids whose path matrix realizes the positroid cell of the interlacing
// minors (unit weights).
Network build_interspace_witness(int k);

// Path network for the Schur identity with a single unpaired source at position k - t.
// Horizontal edges at height j carry x_j. Requires lambda with exactly k >= 2 positive parts,
// 0 <= t <= k-1 and n >= k.
Network build_schur_network(const std::vector<int>& lambda, int t, int n);

// Path network pairing lambda (k parts, trailing zeros allowed) with an interlacing mu
// (k-1 parts). Requires lambda_i >= mu_i >= lambda_{i+1} and n >= k.
Network build_interlace_pair_network(const std::vector<int>& lambda, const std::vector<int>& mu, int n);

// Cartesian rectangle [x_lo, x_hi] x [y_lo, y_hi] with edges (x,y)->(x-1,y) weighted x_y and
// (x,y)->(x,y-1) weighted 1. Carries no sources or sinks.
Network build_cartesian_grid(int x_lo, int x_hi, int y_lo, int y_hi);

struct PropertyReport {
    bool non_returning_ok = false;
    bool sink_non_returning_ok = false;
    bool source_cut_ok = false;  // every source-sink path meets N
    bool sink_cut_ok = false;    // every path into an interior sink meets N_T
    bool sink_branching_ok = false;
    bool k_bottlenecked = false;
    bool sink_bottlenecked = false;
    bool interlacing = false;
    bool witness_searched = false;
    std::optional<Witness> witness;
    // First failing condition, with a path or vertex list showing why.
    std::string failure;
    std::vector<VertexId> counterexample;
};

struct PropertyOptions {
    // Cap on candidate vertices for the witness search when none is supplied.
    int max_search_vertices = 20;
};

// Checks the supplied witness, or searches for one among vertices lying on source-sink paths.
PropertyReport check_properties(const Network& g, const PropertyOptions& opts = {});
// Checks an explicit witness, ignoring the one stored in g.
PropertyReport check_witness(const Network& g, const Witness& w);

// Text format, one record per line:
//   ILNET 1 / v <id> [<r> <c>] / e <src> <dst> <weight> / S ids / T ids / k <int> / N ids / NT ids
// Blank lines and '#' comments are ignored. Loaded networks are flagged as unverified embeddings.
Network read_network(const std::string& text);
std::string write_network(const Network& g);

}  // namespace interlace
