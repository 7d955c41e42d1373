#include "interlace/errors.hpp"
#include "interlace/network.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace interlace {

namespace {

// Directed path from `from` to `to` avoiding `blocked` (endpoints exempt); empty if none.
std::vector<VertexId> find_path(const Network& g, VertexId from, VertexId to, const std::vector<char>& blocked) {
    std::vector<VertexId> parent(g.vertex_count(), -2);
    std::vector<VertexId> queue{from};
    parent[from] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        VertexId v = queue[h];
        if (v == to) break;
        for (int e : g.out_edges(v)) {
            VertexId w = g.edge(e).to;
            if (parent[w] != -2) continue;
            if (blocked[w] && w != to) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    if (parent[to] == -2) return {};
    std::vector<VertexId> path;
    for (VertexId v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<char> membership(const Network& g, const std::vector<VertexId>& set) {
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : set) in[v] = 1;
    return in;
}

struct Check {
    bool ok = true;
    std::string why;
    std::vector<VertexId> path;
};

Check non_returning(const Network& g, const std::vector<VertexId>& set, const char* name) {
    auto in = membership(g, set);
    for (VertexId a : set) {
        for (VertexId b : set) {
            if (a == b || !g.reaches(a, b)) continue;
            for (VertexId w = 0; w < g.vertex_count(); ++w) {
                if (in[w] || !g.reaches(a, w) || !g.reaches(w, b)) continue;
                std::vector<char> none(g.vertex_count(), 0);
                auto p1 = find_path(g, a, w, none), p2 = find_path(g, w, b, none);
                p1.insert(p1.end(), p2.begin() + 1, p2.end());
                return {false, std::string(name) + " is not non-returning: path leaves it at " + g.label(w), p1};
            }
        }
    }
    return {};
}

// Every path from a source to one of the selected sinks meets `cut`.
Check cut_hits(const Network& g, const std::vector<VertexId>& cut, const std::vector<int>& sink_indices,
               const char* name) {
    auto in = membership(g, cut);
    for (VertexId s : g.sources()) {
        if (in[s]) continue;
        for (int j : sink_indices) {
            VertexId t = g.sink(j);
            if (in[t]) continue;
            auto p = find_path(g, s, t, in);
            if (!p.empty()) return {false, std::string(name) + " misses a path to t" + std::to_string(j), p};
        }
    }
    return {};
}

Check sink_branching(const Network& g, const std::vector<VertexId>& set) {
    const int k = g.k();
    std::vector<char> none(g.vertex_count(), 0);
    for (VertexId u : set) {
        for (int i = 2; i <= 2 * k - 2; ++i) {
            for (int j : {1, 2 * k - 1}) {
                VertexId ti = g.sink(i), tj = g.sink(j);
                for (VertexId w = 0; w < g.vertex_count(); ++w) {
                    if (w == u || !g.reaches(u, w) || !g.reaches(w, ti) || !g.reaches(w, tj)) continue;
                    auto p = find_path(g, u, w, none);
                    return {false, "sink cut is not sink-branching: paths from " + g.label(u) + " to t" +
                                       std::to_string(i) + " and t" + std::to_string(j) + " share " + g.label(w),
                            p};
                }
            }
        }
    }
    return {};
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> r;
    for (int i = lo; i <= hi; ++i) r.push_back(i);
    return r;
}

std::vector<VertexId> dedup(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool source_side_ok(const Network& g, const std::vector<VertexId>& n, PropertyReport* r) {
    auto set = dedup(n);
    Check nr = non_returning(g, set, "source cut");
    Check hit = cut_hits(g, set, range(1, 2 * g.k() - 1), "source cut");
    if (r) {
        r->non_returning_ok = nr.ok;
        r->source_cut_ok = hit.ok;
        if (r->failure.empty() && !nr.ok) r->failure = nr.why, r->counterexample = nr.path;
        if (r->failure.empty() && !hit.ok) r->failure = hit.why, r->counterexample = hit.path;
        if (r->failure.empty() && static_cast<int>(set.size()) > g.k()) r->failure = "source cut larger than k";
    }
    return nr.ok && hit.ok && static_cast<int>(set.size()) <= g.k();
}

bool sink_side_ok(const Network& g, const std::vector<VertexId>& n, PropertyReport* r) {
    auto set = dedup(n);
    Check nr = non_returning(g, set, "sink cut");
    Check br = sink_branching(g, set);
    Check hit = cut_hits(g, set, range(2, 2 * g.k() - 2), "sink cut");
    if (r) {
        r->sink_non_returning_ok = nr.ok;
        r->sink_branching_ok = br.ok;
        r->sink_cut_ok = hit.ok;
        for (const Check* c : {&nr, &br, &hit})
            if (r->failure.empty() && !c->ok) r->failure = c->why, r->counterexample = c->path;
        if (r->failure.empty() && static_cast<int>(set.size()) > g.k() - 1) r->failure = "sink cut larger than k-1";
    }
    return nr.ok && br.ok && hit.ok && static_cast<int>(set.size()) <= g.k() - 1;
}

// Smallest subset (by size, then lexicographically) of `cand` satisfying `ok`.
std::optional<std::vector<VertexId>> search(const std::vector<VertexId>& cand, int max_size,
                                            const std::function<bool(const std::vector<VertexId>&)>& ok) {
    std::vector<VertexId> cur;
    std::optional<std::vector<VertexId>> found;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int left) -> bool {
        if (left == 0) {
            if (ok(cur)) {
                found = cur;
                return true;
            }
            return false;
        }
        for (std::size_t i = start; i < cand.size(); ++i) {
            cur.push_back(cand[i]);
            if (rec(i + 1, left - 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= max_size; ++size)
        if (rec(0, size)) return found;
    return std::nullopt;
}

std::vector<VertexId> on_paths(const Network& g, const std::vector<int>& sink_indices) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool from = std::any_of(g.sources().begin(), g.sources().end(), [&](VertexId s) { return g.reaches(s, v); });
        bool to = std::any_of(sink_indices.begin(), sink_indices.end(), [&](int j) { return g.reaches(v, g.sink(j)); });
        if (from && to) out.push_back(v);
    }
    return out;
}

}  // namespace

PropertyReport check_witness(const Network& g, const Witness& w) {
    PropertyReport r;
    r.witness = w;
    r.k_bottlenecked = source_side_ok(g, w.sources_cut, &r);
    r.sink_bottlenecked = sink_side_ok(g, w.sinks_cut, &r);
    r.interlacing = r.k_bottlenecked && r.sink_bottlenecked;
    return r;
}

PropertyReport check_properties(const Network& g, const PropertyOptions& opts) {
    if (g.witness()) return check_witness(g, *g.witness());
    PropertyReport r;
    r.witness_searched = true;
    auto cand_n = on_paths(g, range(1, 2 * g.k() - 1));
    auto cand_t = on_paths(g, range(2, 2 * g.k() - 2));
    if (static_cast<int>(cand_n.size()) > opts.max_search_vertices ||
        static_cast<int>(cand_t.size()) > opts.max_search_vertices) {
        r.failure = "witness search skipped: " + std::to_string(std::max(cand_n.size(), cand_t.size())) +
                    " candidate vertices exceed the cap of " + std::to_string(opts.max_search_vertices);
        return r;
    }
    auto n = search(cand_n, g.k(), [&](const std::vector<VertexId>& s) { return source_side_ok(g, s, nullptr); });
    auto t = search(cand_t, g.k() - 1, [&](const std::vector<VertexId>& s) { return sink_side_ok(g, s, nullptr); });
    Witness w{n.value_or(std::vector<VertexId>{}), t.value_or(std::vector<VertexId>{})};
    r = check_witness(g, w);
    r.witness_searched = true;
    if (!n) r.witness->sources_cut.clear(), r.k_bottlenecked = false;
    if (!t) r.witness->sinks_cut.clear(), r.sink_bottlenecked = false;
    if (!n && r.failure.empty()) r.failure = "no source cut of size <= k found";
    if (!t && r.failure.empty()) r.failure = "no sink cut of size <= k-1 found";
    r.interlacing = r.k_bottlenecked && r.sink_bottlenecked;
    return r;
}

}  // namespace interlace
