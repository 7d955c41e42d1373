#include "interlace/errors.hpp"
#include "interlace/paths.hpp"

#include <algorithm>

namespace interlace {

IndexSet complement(const IndexSet& s, int total) {
    IndexSet out;
    for (int i = 1; i <= total; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

std::vector<IndexSet> subsets(int total, int size) {
    std::vector<IndexSet> out;
    if (size < 0 || size > total) return out;
    IndexSet cur(size);
    for (int i = 0; i < size; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = size - 1;
        while (i >= 0 && cur[i] == total - size + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::string format_index_set(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::vector<VertexId> select_terminals(const std::vector<VertexId>& terminals, const IndexSet& idx) {
    std::vector<VertexId> out;
    for (int i : idx) {
        if (i < 1 || i > static_cast<int>(terminals.size()))
            throw ArgumentError("index " + std::to_string(i) + " outside [1," + std::to_string(terminals.size()) + "]");
        out.push_back(terminals[i - 1]);
    }
    return out;
}

bool is_path(const Network& g, const Path& p) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (g.find_edge(p[i], p[i + 1]) < 0) return false;
    return true;
}

bool is_noncrossing(const PathTuple& t) {
    std::vector<VertexId> all;
    for (const auto& p : t) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

Scalar weight(const Network& g, const Path& p) {
    Scalar w(1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        int e = g.find_edge(p[i], p[i + 1]);
        if (e < 0) throw ArgumentError("not a path: no edge " + g.label(p[i]) + "->" + g.label(p[i + 1]));
        w *= g.edge(e).weight;
    }
    return w;
}

Scalar weight(const Network& g, const PathTuple& t) {
    Scalar w(1);
    for (const auto& p : t) w *= weight(g, p);
    return w;
}

Scalar hat_weight(const std::vector<Scalar>& vw, const Path& p) {
    Scalar w(1);
    for (VertexId v : p) {
        if (v < 0 || v >= static_cast<VertexId>(vw.size()))
            throw ArgumentError("no vertex weight for vertex " + std::to_string(v));
        w *= vw[v];
    }
    return w;
}

Scalar hat_weight(const std::vector<Scalar>& vw, const PathTuple& t) {
    Scalar w(1);
    for (const auto& p : t) w *= hat_weight(vw, p);
    return w;
}

namespace {

// Depth-first enumeration of vertex-disjoint path tuples. Path i is extended only through
// vertices that still reach its target and are not reserved as another path's endpoint;
// after each completed path the remaining ones are checked for a free route.
class NcEnumerator {
public:
    using Visit = std::function<void(const PathTuple&, const Scalar&)>;

    NcEnumerator(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                 WeightMode mode, const std::vector<Scalar>* vw, bool weighted)
        : g_(g), from_(from), to_(to), mode_(mode), vw_(vw), weighted_(weighted) {
        if (from.size() != to.size()) throw ArgumentError("source and sink lists differ in length");
        if (weighted && mode == WeightMode::Hat) {
            if (!vw || static_cast<int>(vw->size()) != g.vertex_count())
                throw ArgumentError("hat weights need one weight per vertex");
        }
    }

    void run(const Visit& visit) {
        visit_ = &visit;
        const int r = static_cast<int>(from_.size());
        owner_.assign(g_.vertex_count(), -1);
        for (int i = 0; i < r; ++i) {
            for (VertexId v : {from_[i], to_[i]}) {
                if (owner_[v] != -1 && owner_[v] != i) return;
                owner_[v] = i;
            }
            if (!g_.reaches(from_[i], to_[i])) return;
        }
        used_.assign(g_.vertex_count(), 0);
        cur_.assign(r, {});
        start(0, Scalar(1));
    }

private:
    const Network& g_;
    const std::vector<VertexId>& from_;
    const std::vector<VertexId>& to_;
    WeightMode mode_;
    const std::vector<Scalar>* vw_;
    bool weighted_;
    const Visit* visit_ = nullptr;
    std::vector<int> owner_;
    std::vector<char> used_;
    PathTuple cur_;
    std::vector<int> seen_;
    int stamp_ = 0;

    bool blocked(VertexId v, int i) const { return used_[v] || (owner_[v] != -1 && owner_[v] != i); }

    bool routable(int i) {
        if (seen_.size() != used_.size()) seen_.assign(used_.size(), 0);
        ++stamp_;
        std::vector<VertexId> stack{from_[i]};
        seen_[from_[i]] = stamp_;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (v == to_[i]) return true;
            for (int e : g_.out_edges(v)) {
                VertexId w = g_.edge(e).to;
                if (seen_[w] == stamp_ || blocked(w, i) || !g_.reaches(w, to_[i])) continue;
                seen_[w] = stamp_;
                stack.push_back(w);
            }
        }
        return false;
    }

    void start(int i, const Scalar& w) {
        if (i == static_cast<int>(from_.size())) {
            (*visit_)(cur_, w);
            return;
        }
        for (int j = i; j < static_cast<int>(from_.size()); ++j)
            if (!routable(j)) return;
        VertexId v = from_[i];
        used_[v] = 1;
        cur_[i].assign(1, v);
        if (weighted_ && mode_ == WeightMode::Hat)
            extend(i, v, w * (*vw_)[v]);
        else
            extend(i, v, w);
        used_[v] = 0;
    }

    void extend(int i, VertexId v, const Scalar& w) {
        if (v == to_[i]) {
            start(i + 1, w);
            return;
        }
        for (int e : g_.out_edges(v)) {
            VertexId u = g_.edge(e).to;
            if (blocked(u, i) || !g_.reaches(u, to_[i])) continue;
            used_[u] = 1;
            cur_[i].push_back(u);
            if (!weighted_)
                extend(i, u, w);
            else if (mode_ == WeightMode::Hat)
                extend(i, u, w * (*vw_)[u]);
            else
                extend(i, u, w * g_.edge(e).weight);
            cur_[i].pop_back();
            used_[u] = 0;
        }
    }
};

}  // namespace

void for_each_nc_tuple(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                       const std::function<void(const PathTuple&)>& visit) {
    NcEnumerator en(g, from, to, WeightMode::Edge, nullptr, false);
    en.run([&](const PathTuple& t, const Scalar&) { visit(t); });
}

std::vector<PathTuple> enumerate_nc_tuples(const Network& g, const std::vector<VertexId>& from,
                                           const std::vector<VertexId>& to) {
    std::vector<PathTuple> out;
    for_each_nc_tuple(g, from, to, [&](const PathTuple& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_nc_tuples(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
    std::uint64_t n = 0;
    for_each_nc_tuple(g, from, to, [&](const PathTuple&) { ++n; });
    return n;
}

Scalar nc_weight_sum(const Network& g, const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                     WeightMode mode, const std::vector<Scalar>* vw) {
    PolynomialAccumulator acc;
    NcEnumerator en(g, from, to, mode, vw, true);
    en.run([&](const PathTuple&, const Scalar& w) { acc.add(w); });
    return acc.result();
}

namespace {

void validate_index_set(const IndexSet& s, int total, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > total)
            throw ArgumentError(std::string(what) + " index " + std::to_string(s[i]) + " outside [1," +
                                std::to_string(total) + "]");
        if (i > 0 && s[i] <= s[i - 1]) throw ArgumentError(std::string(what) + " indices must be strictly increasing");
    }
}

}  // namespace

std::vector<PathTuple> enumerate_nc(const Network& g, const IndexSet& sources, const IndexSet& sinks) {
    const int total = static_cast<int>(g.sources().size());
    validate_index_set(sources, total, "source");
    validate_index_set(sinks, total, "sink");
    if (sources.size() != sinks.size()) throw ArgumentError("source and sink index sets differ in size");
    return enumerate_nc_tuples(g, select_terminals(g.sources(), sources), select_terminals(g.sinks(), sinks));
}

void validate_pattern(const Network& g, const IndexSet& I, const IndexSet& J) {
    const int total = 2 * g.k() - 1;
    validate_index_set(I, total, "source");
    validate_index_set(J, total, "sink");
    if (static_cast<int>(I.size()) != g.k() - 1 || static_cast<int>(J.size()) != g.k() - 1)
        throw ArgumentError("a pattern needs |I| = |J| = k-1 = " + std::to_string(g.k() - 1));
}

std::vector<PncPair> enumerate_pnc(const Network& g, const IndexSet& I, const IndexSet& J) {
    validate_pattern(g, I, J);
    const int total = 2 * g.k() - 1;
    auto reds = enumerate_nc(g, I, J);
    std::vector<PncPair> out;
    if (reds.empty()) return out;
    auto blues = enumerate_nc(g, complement(I, total), complement(J, total));
    out.reserve(reds.size() * blues.size());
    for (const auto& r : reds)
        for (const auto& b : blues) out.push_back({I, J, r, b});
    return out;
}

std::vector<std::pair<IndexSet, IndexSet>> all_patterns(int k) {
    std::vector<std::pair<IndexSet, IndexSet>> out;
    auto sets = subsets(2 * k - 1, k - 1);
    for (const auto& I : sets)
        for (const auto& J : sets) out.push_back({I, J});
    return out;
}

PatternWeights::PatternWeights(const Network& g, WeightMode mode, const std::vector<Scalar>* vw)
    : g_(g), mode_(mode), vw_(vw) {}

const Scalar& PatternWeights::nc_sum(const IndexSet& sources, const IndexSet& sinks) {
    auto key = std::make_pair(sources, sinks);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Scalar s = nc_weight_sum(g_, select_terminals(g_.sources(), sources), select_terminals(g_.sinks(), sinks), mode_,
                             vw_);
    return cache_.emplace(key, std::move(s)).first->second;
}

Scalar PatternWeights::pattern_weight(const IndexSet& I, const IndexSet& J) {
    validate_pattern(g_, I, J);
    const int total = 2 * g_.k() - 1;
    const Scalar& red = nc_sum(I, J);
    if (red.is_zero()) return Scalar();
    return red * nc_sum(complement(I, total), complement(J, total));
}

Scalar pattern_weight(const Network& g, const IndexSet& I, const IndexSet& J, WeightMode mode,
                      const std::vector<Scalar>* vw) {
    PatternWeights pw(g, mode, vw);
    return pw.pattern_weight(I, J);
}

std::string format_path(const Network& g, const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + g.label(p[i]);
    return s;
}

}  // namespace interlace
