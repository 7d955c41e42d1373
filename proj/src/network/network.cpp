#include "interlace/errors.hpp"
#include "interlace/network.hpp"

#include <algorithm>

namespace interlace {

int Network::find_edge(VertexId u, VertexId v) const {
    for (int e : out_[u])
        if (edges_[e].to == v) return e;
    return -1;
}

std::optional<VertexId> Network::find_vertex(Coord c) const {
    auto it = by_coord_.find(c);
    if (it == by_coord_.end()) return std::nullopt;
    return it->second;
}

std::string Network::label(VertexId v) const {
    if (coords_[v]) return "(" + std::to_string(coords_[v]->r) + "," + std::to_string(coords_[v]->c) + ")";
    return "v" + std::to_string(v);
}

bool Network::reaches(VertexId u, VertexId v) const {
    return (reach_[u][v >> 6] >> (v & 63)) & 1u;
}

VertexId NetworkBuilder::add_vertex(std::optional<Coord> c) {
    coords_.push_back(c);
    return static_cast<VertexId>(coords_.size() - 1);
}

void NetworkBuilder::add_edge(VertexId u, VertexId v, Scalar w) {
    edges_.push_back({u, v, std::move(w)});
}

std::optional<VertexId> NetworkBuilder::find_vertex(Coord c) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] && *coords_[i] == c) return static_cast<VertexId>(i);
    return std::nullopt;
}

Network NetworkBuilder::build(bool require_terminals) const {
    Network g;
    const int n = static_cast<int>(coords_.size());
    g.coords_ = coords_;
    g.edges_ = edges_;
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    auto check_id = [n](VertexId v, const char* what) {
        if (v < 0 || v >= n) throw ArgumentError(std::string(what) + " refers to unknown vertex " + std::to_string(v));
    };
    for (int i = 0; i < n; ++i) {
        if (!coords_[i]) continue;
        if (!g.by_coord_.emplace(*coords_[i], i).second)
            throw ArgumentError("two vertices share coordinates");
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        check_id(edges_[e].from, "edge");
        check_id(edges_[e].to, "edge");
        if (edges_[e].from == edges_[e].to) throw ArgumentError("self-loop at vertex " + std::to_string(edges_[e].from));
        g.out_[edges_[e].from].push_back(e);
        g.in_[edges_[e].to].push_back(e);
    }
    for (auto& lst : g.out_) {
        std::sort(lst.begin(), lst.end(), [&](int a, int b) { return edges_[a].to < edges_[b].to; });
        for (std::size_t i = 1; i < lst.size(); ++i)
            if (edges_[lst[i]].to == edges_[lst[i - 1]].to)
                throw ArgumentError("parallel edges " + std::to_string(edges_[lst[i]].from) + "->" +
                                    std::to_string(edges_[lst[i]].to));
    }
    for (auto& lst : g.in_)
        std::sort(lst.begin(), lst.end(), [&](int a, int b) { return edges_[a].from < edges_[b].from; });

    // Kahn's algorithm, smallest id first for a deterministic order.
    std::vector<int> indeg(n, 0);
    for (const auto& e : edges_) ++indeg[e.to];
    std::vector<VertexId> ready;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end(), std::greater<>());
        VertexId v = ready.back();
        ready.pop_back();
        g.topo_.push_back(v);
        for (int e : g.out_[v])
            if (--indeg[edges_[e].to] == 0) ready.push_back(edges_[e].to);
    }
    if (static_cast<int>(g.topo_.size()) != n) throw ArgumentError("network has a directed cycle");

    const int words = (n + 63) / 64;
    g.reach_.assign(n, std::vector<std::uint64_t>(words, 0));
    for (auto it = g.topo_.rbegin(); it != g.topo_.rend(); ++it) {
        VertexId v = *it;
        g.reach_[v][v >> 6] |= std::uint64_t(1) << (v & 63);
        for (int e : g.out_[v]) {
            const auto& r = g.reach_[edges_[e].to];
            for (int w = 0; w < words; ++w) g.reach_[v][w] |= r[w];
        }
    }

    if (require_terminals) {
        if (k_ < 2) throw ArgumentError("k must be at least 2, got " + std::to_string(k_));
        const std::size_t expect = 2 * static_cast<std::size_t>(k_) - 1;
        if (sources_.size() != expect || sinks_.size() != expect)
            throw ArgumentError("expected " + std::to_string(expect) + " sources and sinks, got " +
                                std::to_string(sources_.size()) + " and " + std::to_string(sinks_.size()));
    }
    for (VertexId v : sources_) check_id(v, "source");
    for (VertexId v : sinks_) check_id(v, "sink");
    if (witness_) {
        for (VertexId v : witness_->sources_cut) check_id(v, "witness");
        for (VertexId v : witness_->sinks_cut) check_id(v, "witness");
    }
    g.sources_ = sources_;
    g.sinks_ = sinks_;
    g.k_ = k_;
    g.convention_ = convention_;
    g.embedding_verified_ = verified_;
    g.witness_ = witness_;
    g.name_ = name_;
    return g;
}

}  // namespace interlace
