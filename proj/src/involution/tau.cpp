#include "interlace/errors.hpp"
#include "interlace/involution.hpp"

#include <algorithm>
#include <sstream>

namespace interlace {

namespace {

std::string vertex_set(const Network& g, const std::vector<VertexId>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.label(vs[i]);
    return s + "}";
}

void check_tuple(const Network& g, const PathTuple& t, const std::vector<VertexId>& from,
                 const std::vector<VertexId>& to, const char* what) {
    if (t.size() != from.size()) throw ArgumentError(std::string(what) + " tuple has the wrong number of paths");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_path(g, t[i])) throw ArgumentError(std::string(what) + " path " + std::to_string(i + 1) + " is not a path");
        if (t[i].front() != from[i] || t[i].back() != to[i])
            throw ArgumentError(std::string(what) + " path " + std::to_string(i + 1) + " has the wrong endpoints");
    }
    if (!is_noncrossing(t)) throw ArgumentError(std::string(what) + " tuple is not noncrossing");
}

void check_pair(const Network& g, const PncPair& p) {
    validate_pattern(g, p.I, p.J);
    const int total = 2 * g.k() - 1;
    check_tuple(g, p.red, select_terminals(g.sources(), p.I), select_terminals(g.sinks(), p.J), "red");
    check_tuple(g, p.blue, select_terminals(g.sources(), complement(p.I, total)),
                select_terminals(g.sinks(), complement(p.J, total)), "blue");
}

}  // namespace

TauResult tau(const Network& g, const PncPair& pair) {
    const int k = g.k();
    if (!g.witness()) throw ArgumentError("tau needs a network with a stored source cut");
    std::vector<VertexId> cut = g.witness()->sources_cut;
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    if (static_cast<int>(cut.size()) < k)
        throw VacuousDomain("source cut has fewer than k vertices, so there are no path pairs to act on");
    check_pair(g, pair);

    PathTuple pi = pair.red;
    pi.insert(pi.end(), pair.blue.begin(), pair.blue.end());
    const int reds = k - 1;
    IntersectionPoset poset(pi);
    TauResult res;
    TauTrace& tr = res.trace;
    tr.poset_size = poset.size();
    std::vector<std::string> log;
    auto fail = [&](const std::string& why) { throw IntegrityError("tau: " + why, log); };
    auto vid = [&](int e) { return poset.vertex(e); };
    auto is_red = [&](int path) { return path < reds; };
    auto unique_in_label = [&](int e, bool red) {
        int found = -1;
        for (int path : poset.label(e)) {
            if (is_red(path) != red) continue;
            if (found >= 0) fail("two paths of one colour through " + g.label(vid(e)));
            found = path;
        }
        if (found < 0) fail("no path of the needed colour through " + g.label(vid(e)));
        return found;
    };
    auto on_path = [&](int e, int path) {
        const auto& l = poset.label(e);
        return std::find(l.begin(), l.end(), path) != l.end();
    };
    // Unique maximal (or minimal) element of `cands`.
    auto extreme = [&](const std::vector<int>& cands, bool maximal) {
        std::vector<int> best;
        for (int x : cands) {
            bool beaten = std::any_of(cands.begin(), cands.end(),
                                      [&](int y) { return maximal ? poset.less(x, y) : poset.less(y, x); });
            if (!beaten) best.push_back(x);
        }
        if (best.size() != 1) fail(maximal ? "no unique maximal candidate" : "no unique minimal candidate");
        return best.front();
    };

    if (poset.width() != k - 1) fail("largest antichain has size " + std::to_string(poset.width()) + ", expected k-1");
    Antichain u = min_max_antichain(poset);
    // Listed by the red path through each element; later changes keep insertion order.
    std::sort(u.begin(), u.end(), [&](int a, int b) { return poset.label(a).front() < poset.label(b).front(); });
    std::vector<int> flips(u.begin(), u.end());
    for (int e : u) tr.antichain.push_back(vid(e));
    log.push_back("U = " + vertex_set(g, tr.antichain));

    int blue = -1;
    for (int b = reds; b < static_cast<int>(pi.size()); ++b) {
        bool seen = std::any_of(u.begin(), u.end(), [&](int e) { return on_path(e, b); });
        if (seen) continue;
        if (blue >= 0) fail("two blue paths avoid the antichain");
        blue = b;
    }
    if (blue < 0) fail("every blue path meets the antichain");
    tr.n0 = blue - reds + 1;

    std::vector<int> cands;
    for (int x = 0; x < poset.size(); ++x) {
        if (!on_path(x, blue)) continue;
        if (std::any_of(u.begin(), u.end(), [&](int y) { return poset.leq(x, y); })) cands.push_back(x);
    }
    if (!cands.empty()) {
        int w = extreme(cands, true);
        for (int guard = 0;; ++guard) {
            if (guard > poset.size()) fail("loop does not terminate");
            TauStep step;
            step.w = vid(w);
            int red = unique_in_label(w, true);
            step.m = red + 1;
            std::vector<int> above;
            for (int x = 0; x < poset.size(); ++x)
                if (poset.less(w, x) && on_path(x, red)) above.push_back(x);
            if (above.empty()) fail("no element above " + g.label(vid(w)) + " on its red path");
            int v = extreme(above, false);
            step.v = vid(v);
            for (int x : {w, v}) {
                auto it = std::find(flips.begin(), flips.end(), x);
                if (it == flips.end()) flips.push_back(x);
                else flips.erase(it);
            }
            for (int x : flips) step.flip.push_back(vid(x));
            blue = unique_in_label(v, false);
            step.n = blue - reds + 1;
            log.push_back("w=" + g.label(step.w) + " m=" + std::to_string(step.m) + " v=" + g.label(step.v) +
                          " n=" + std::to_string(step.n));
            tr.steps.push_back(step);
            cands.clear();
            for (int x = 0; x < poset.size(); ++x)
                if (poset.less(x, v) && on_path(x, blue)) cands.push_back(x);
            if (cands.empty()) break;
            w = extreme(cands, true);
        }
    }
    for (int x : flips) tr.flip.push_back(vid(x));

    auto hits = [&](int path) {
        return std::count_if(flips.begin(), flips.end(), [&](int e) { return on_path(e, path); });
    };
    for (int r = 0; r < reds; ++r)
        if (hits(r) % 2 != 1) fail("red path " + std::to_string(r + 1) + " meets FLIP an even number of times");
    if (hits(blue) % 2 != 0) fail("last blue path meets FLIP an odd number of times");

    const int total = 2 * k - 1;
    IndexSet jbar = complement(pair.J, total);
    tr.pivot = jbar[blue - reds];
    IndexSet used = pair.J;
    used.push_back(tr.pivot);
    std::sort(used.begin(), used.end());
    IndexSet jnew = complement(used, total);

    PathTuple out = flip_set(pi, tr.flip);
    res.pair.I = pair.I;
    res.pair.J = jnew;
    res.pair.red.assign(out.begin(), out.begin() + reds);
    res.pair.blue.assign(out.begin() + reds, out.end());
    try {
        check_pair(g, res.pair);
    } catch (const ArgumentError& e) {
        fail(std::string("output is not a path pair of the swapped pattern: ") + e.what());
    }
    return res;
}

std::string format_trace(const Network& g, const PncPair& input, const TauResult& result) {
    std::ostringstream out;
    const auto& tr = result.trace;
    out << "network " << g.name() << "\n";
    out << "input pattern I=" << format_index_set(input.I) << " J=" << format_index_set(input.J) << "\n";
    out << "poset elements " << tr.poset_size << "\n";
    out << "U = " << vertex_set(g, tr.antichain) << "\n";
    out << "n0 = " << tr.n0 << "\n";
    for (std::size_t c = 0; c < tr.steps.size(); ++c) {
        const auto& s = tr.steps[c];
        out << "step " << c + 1 << ": w = " << g.label(s.w) << ", m = " << s.m << ", v = " << g.label(s.v)
            << ", FLIP = " << vertex_set(g, s.flip) << ", n = " << s.n << "\n";
    }
    out << "FLIP = " << vertex_set(g, tr.flip) << "\n";
    out << "pivot = " << tr.pivot << "\n";
    out << "output pattern I=" << format_index_set(result.pair.I) << " J=" << format_index_set(result.pair.J) << "\n";
    for (std::size_t i = 0; i < result.pair.red.size(); ++i)
        out << "red " << i + 1 << ": " << format_path(g, result.pair.red[i]) << "\n";
    for (std::size_t i = 0; i < result.pair.blue.size(); ++i)
        out << "blue " << i + 1 << ": " << format_path(g, result.pair.blue[i]) << "\n";
    return out.str();
}

IndexSet reflect(const IndexSet& s, int k) {
    IndexSet out;
    for (int x : s) out.push_back(2 * k - x);
    std::sort(out.begin(), out.end());
    return out;
}

PncPair reverse_pair(const Network& g, const PncPair& pair) {
    const int k = g.k();
    PncPair out;
    out.I = reflect(pair.J, k);
    out.J = reflect(pair.I, k);
    auto rev = [](const PathTuple& t) {
        PathTuple r;
        for (auto it = t.rbegin(); it != t.rend(); ++it) r.emplace_back(it->rbegin(), it->rend());
        return r;
    };
    out.red = rev(pair.red);
    out.blue = rev(pair.blue);
    return out;
}

PncPair sigma(const Network& g, const Network& g_op, const PncPair& pair) {
    if (g_op.k() != g.k() || g_op.vertex_count() != g.vertex_count())
        throw ArgumentError("sigma needs the opposite of the given network");
    PncPair there = reverse_pair(g, pair);
    TauResult swapped = tau(g_op, there);
    return reverse_pair(g_op, swapped.pair);
}

SwapClass classify_swap(const IndexSet& a, const IndexSet& b, int k) {
    SwapClass out;
    if (static_cast<int>(a.size()) != k - 1 || static_cast<int>(b.size()) != k - 1)
        throw ArgumentError("swap classification needs two sets of size k-1");
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x)) return out;
    for (int p = 1; p <= 2 * k - 1; ++p)
        if (!std::binary_search(a.begin(), a.end(), p) && !std::binary_search(b.begin(), b.end(), p)) out.pivot = p;
    out.kind = SwapKind::Swap;
    auto below = [&](const IndexSet& s) { return std::count_if(s.begin(), s.end(), [&](int x) { return x <= out.pivot; }); };
    if (below(a) == below(b)) out.kind = SwapKind::Balanced;
    if (out.pivot == 1 || out.pivot == 2 * k - 1) out.kind = SwapKind::End;
    return out;
}

}  // namespace interlace
