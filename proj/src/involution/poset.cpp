#include "interlace/errors.hpp"
#include "interlace/involution.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace interlace {

IntersectionPoset::IntersectionPoset(const PathTuple& paths) {
    std::map<VertexId, std::vector<int>> through;
    for (int i = 0; i < static_cast<int>(paths.size()); ++i)
        for (VertexId v : paths[i]) {
            auto& lst = through[v];
            if (lst.empty() || lst.back() != i) lst.push_back(i);
        }
    std::map<VertexId, int> index;
    for (const auto& [v, lst] : through) {
        if (lst.size() < 2) continue;
        index[v] = static_cast<int>(elements_.size());
        elements_.push_back(v);
        labels_.push_back(lst);
    }
    const int n = size();
    leq_.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a) leq_[a][a] = 1;
    for (const auto& p : paths) {
        int prev = -1;
        for (VertexId v : p) {
            auto it = index.find(v);
            if (it == index.end()) continue;
            if (prev >= 0) leq_[it->second][prev] = 1;
            prev = it->second;
        }
    }
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            if (leq_[a][m])
                for (int b = 0; b < n; ++b)
                    if (leq_[m][b]) leq_[a][b] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (leq_[a][b] && leq_[b][a]) throw IntegrityError("intersection order is not antisymmetric");
}

std::optional<int> IntersectionPoset::index_of(VertexId v) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
    if (it == elements_.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - elements_.begin());
}

namespace {

// Maximum matching a -> b over strict relations a < b (Kuhn's algorithm).
std::vector<int> successor_matching(const IntersectionPoset& p) {
    const int n = p.size();
    std::vector<int> match_left(n, -1), match_right(n, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int a, std::vector<char>& seen) {
        for (int b = 0; b < n; ++b) {
            if (!p.less(a, b) || seen[b]) continue;
            seen[b] = 1;
            if (match_right[b] < 0 || augment(match_right[b], seen)) {
                match_left[a] = b;
                match_right[b] = a;
                return true;
            }
        }
        return false;
    };
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(n, 0);
        augment(a, seen);
    }
    return match_left;
}

}  // namespace

int IntersectionPoset::width() const {
    auto m = successor_matching(*this);
    return size() - static_cast<int>(std::count_if(m.begin(), m.end(), [](int b) { return b >= 0; }));
}

std::vector<std::vector<int>> IntersectionPoset::chain_partition() const {
    auto next = successor_matching(*this);
    std::vector<char> has_pred(size(), 0);
    for (int b : next)
        if (b >= 0) has_pred[b] = 1;
    std::vector<std::vector<int>> chains;
    for (int a = 0; a < size(); ++a) {
        if (has_pred[a]) continue;
        std::vector<int> chain;
        for (int x = a; x >= 0; x = next[x]) chain.push_back(x);
        chains.push_back(chain);
    }
    return chains;
}

bool antichain_leq(const IntersectionPoset& p, const Antichain& x, const Antichain& y) {
    return std::all_of(x.begin(), x.end(), [&](int a) {
        return std::any_of(y.begin(), y.end(), [&](int b) { return p.leq(a, b); });
    });
}

std::vector<Antichain> maximum_antichains(const IntersectionPoset& p) {
    const int w = p.width();
    const int n = p.size();
    std::vector<Antichain> out;
    Antichain cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == w) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            if (n - i < w - static_cast<int>(cur.size())) return;
            if (std::any_of(cur.begin(), cur.end(), [&](int a) { return p.comparable(a, i); })) continue;
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Antichain min_max_antichain(const IntersectionPoset& p) {
    auto all = maximum_antichains(p);
    std::optional<Antichain> found;
    for (const auto& x : all) {
        if (!std::all_of(all.begin(), all.end(), [&](const Antichain& y) { return antichain_leq(p, x, y); })) continue;
        if (found) throw IntegrityError("two minimum maximum antichains");
        found = x;
    }
    if (!found) throw IntegrityError("maximum antichains have no minimum");
    return *found;
}

Antichain min_max_antichain_by_meets(const IntersectionPoset& p) {
    auto chains = p.chain_partition();
    std::vector<int> chain_of(p.size(), -1);
    for (int c = 0; c < static_cast<int>(chains.size()); ++c)
        for (int x : chains[c]) chain_of[x] = c;
    auto per_chain = [&](const Antichain& a) {
        std::vector<int> slot(chains.size(), -1);
        for (int x : a) {
            if (slot[chain_of[x]] >= 0) throw IntegrityError("antichain meets a chain twice");
            slot[chain_of[x]] = x;
        }
        return slot;
    };
    auto all = maximum_antichains(p);
    if (all.empty()) return {};
    std::vector<int> z = per_chain(all.front());
    for (const auto& a : all) {
        auto y = per_chain(a);
        for (std::size_t c = 0; c < z.size(); ++c)
            if (p.leq(y[c], z[c])) z[c] = y[c];
    }
    Antichain out(z.begin(), z.end());
    std::sort(out.begin(), out.end());
    if (std::find(all.begin(), all.end(), out) == all.end())
        throw IntegrityError("chainwise meet is not a maximum antichain");
    return out;
}

PathTuple flip(const PathTuple& paths, VertexId v) {
    std::vector<std::pair<int, std::size_t>> hits;
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
        auto it = std::find(paths[i].begin(), paths[i].end(), v);
        if (it != paths[i].end()) hits.push_back({i, static_cast<std::size_t>(it - paths[i].begin())});
    }
    if (hits.size() != 2) throw ArgumentError("flip needs a vertex on exactly two paths");
    PathTuple out = paths;
    auto [i, a] = hits[0];
    auto [j, b] = hits[1];
    out[i].assign(paths[i].begin(), paths[i].begin() + a + 1);
    out[i].insert(out[i].end(), paths[j].begin() + b + 1, paths[j].end());
    out[j].assign(paths[j].begin(), paths[j].begin() + b + 1);
    out[j].insert(out[j].end(), paths[i].begin() + a + 1, paths[i].end());
    return out;
}

PathTuple flip_set(PathTuple paths, const std::vector<VertexId>& at) {
    for (VertexId v : at) paths = flip(paths, v);
    return paths;
}

}  // namespace interlace
