#include "interlace/errors.hpp"
#include "interlace/network.hpp"
#include "interlace/schur.hpp"

namespace interlace {

namespace {

std::vector<int> shifted(const std::vector<int>& v, int first, int last, int delta) {
    std::vector<int> out;
    for (int i = first; i < last; ++i) out.push_back(v[i] + delta);
    return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void require_sequence_partition(const std::vector<int>& v, const char* what) {
    if (!Partition::from_sequence(v)) throw ArgumentError(std::string(what) + " is not a partition: " + format_sequence(v));
}

void require_positive_parts(const std::vector<int>& lambda) {
    if (lambda.empty()) throw ArgumentError("lambda needs at least one part");
    require_sequence_partition(lambda, "lambda");
    if (lambda.back() < 1) throw ArgumentError("lambda needs positive parts");
}

std::string s(const std::vector<int>& seq, const std::string& window = "") {
    auto p = Partition::from_sequence(seq);
    return "s" + window + (p ? p->to_string() : format_sequence(seq));
}

Polynomial sz(const std::vector<int>& seq, int a, int b) { return schur_or_zero(seq, a, b); }

// s_{seq/1}, zero for the empty partition.
Polynomial minus_box(const std::vector<int>& seq, int n) {
    Partition p(seq);
    return p.empty() ? Polynomial() : skew_schur_minus_box(p, 1, n);
}

IdentityCheckResult finish(Polynomial lhs, Polynomial rhs, std::string statement) {
    IdentityCheckResult r;
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.statement = std::move(statement);
    return r;
}

IdentityCheckResult three_term(const std::vector<int>& lambda, int t, int n) {
    require_positive_parts(lambda);
    const int k = static_cast<int>(lambda.size());
    if (t < 0 || t > k - 1) throw ArgumentError("t must lie in [0, k-1]");
    auto sh = three_term_shapes(lambda, t);
    Polynomial lhs = sz(lambda, 1, n) * sz(sh.mu, 2, n);
    Polynomial rhs = sz(lambda, 2, n) * sz(sh.mu, 1, n) + Polynomial::var(1) * sz(sh.rho, 1, n) * sz(sh.nu, 2, n);
    return finish(lhs, rhs,
                  s(lambda) + "*" + s(sh.mu, "[2,n]") + " = " + s(lambda, "[2,n]") + "*" + s(sh.mu) + " + x1*" +
                      s(sh.rho) + "*" + s(sh.nu, "[2,n]"));
}

}  // namespace

ThreeTermShapes three_term_shapes(const std::vector<int>& lambda, int t) {
    const int k = static_cast<int>(lambda.size());
    if (t < 0 || t > k - 1) throw ArgumentError("t must lie in [0, k-1]");
    ThreeTermShapes sh;
    sh.mu = concat(shifted(lambda, 0, t, 0), shifted(lambda, t + 1, k, -1));
    sh.nu = concat(shifted(lambda, 0, t, 1), shifted(lambda, t + 1, k, 0));
    sh.rho = shifted(lambda, 0, k, -1);
    return sh;
}

std::pair<std::vector<int>, std::vector<int>> interlacing_terms(const std::vector<int>& lambda,
                                                                const std::vector<int>& mu, int i) {
    const int k = static_cast<int>(lambda.size());
    if (static_cast<int>(mu.size()) != k - 1) throw ArgumentError("mu must have one part fewer than lambda");
    if (i < 1 || i > k) throw ArgumentError("i must lie in [1, k]");
    std::vector<int> li(k), mi(k - 1);
    for (int j = 1; j <= k; ++j) li[j - 1] = j < i ? mu[j - 1] - 1 : j == i ? lambda[i - 1] : mu[j - 2];
    for (int j = 1; j <= k - 1; ++j) mi[j - 1] = j < i ? lambda[j - 1] + 1 : lambda[j];
    return {li, mi};
}

SchurIdentity parse_identity_name(const std::string& name) {
    static const std::map<std::string, SchurIdentity> names = {
        {"a", SchurIdentity::ThreeTerm},       {"three-term", SchurIdentity::ThreeTerm},
        {"b", SchurIdentity::ThreeTermLast},   {"three-term-last", SchurIdentity::ThreeTermLast},
        {"c", SchurIdentity::Rectangle},       {"rectangle", SchurIdentity::Rectangle},
        {"d", SchurIdentity::Kirillov},        {"kirillov", SchurIdentity::Kirillov},
        {"e", SchurIdentity::SkewThreeTerm},   {"skew", SchurIdentity::SkewThreeTerm},
        {"f", SchurIdentity::FulmekKleber},    {"fulmek-kleber", SchurIdentity::FulmekKleber},
        {"g", SchurIdentity::InterlacingPairs}, {"interlacing", SchurIdentity::InterlacingPairs},
    };
    auto it = names.find(name);
    if (it == names.end()) throw ArgumentError("unknown identity: " + name);
    return it->second;
}

std::string identity_name(SchurIdentity id) {
    switch (id) {
        case SchurIdentity::ThreeTerm: return "three-term";
        case SchurIdentity::ThreeTermLast: return "three-term-last";
        case SchurIdentity::Rectangle: return "rectangle";
        case SchurIdentity::Kirillov: return "kirillov";
        case SchurIdentity::SkewThreeTerm: return "skew";
        case SchurIdentity::FulmekKleber: return "fulmek-kleber";
        case SchurIdentity::InterlacingPairs: return "interlacing";
    }
    return "?";
}

IdentityCheckResult verify_identity(SchurIdentity id, const IdentityParams& p, int n) {
    if (n < 1) throw ArgumentError("identity check needs n >= 1");
    switch (id) {
        case SchurIdentity::ThreeTerm: return three_term(p.lambda, p.t, n);
        case SchurIdentity::ThreeTermLast: {
            require_positive_parts(p.lambda);
            return three_term(p.lambda, static_cast<int>(p.lambda.size()) - 1, n);
        }
        case SchurIdentity::Rectangle: {
            if (p.c < 1 || p.r < 1) throw ArgumentError("rectangle identity needs c, r >= 1");
            const int c = p.c, r = p.r;
            auto rect = [](int cc, int rr) { return std::vector<int>(rr, cc); };
            Polynomial lhs = sz(rect(c, r), 1, n) * sz(rect(c, r - 1), 2, n);
            Polynomial rhs = sz(rect(c, r - 1), 1, n) * sz(rect(c, r), 2, n) +
                             Polynomial::var(1) * sz(rect(c - 1, r), 1, n) * sz(rect(c + 1, r - 1), 2, n);
            return finish(lhs, rhs,
                          s(rect(c, r)) + "*" + s(rect(c, r - 1), "[2,n]") + " = " + s(rect(c, r - 1)) + "*" +
                              s(rect(c, r), "[2,n]") + " + x1*" + s(rect(c - 1, r)) + "*" + s(rect(c + 1, r - 1), "[2,n]"));
        }
        case SchurIdentity::Kirillov: {
            if (p.c < 1 || p.r < 1) throw ArgumentError("Kirillov identity needs c, r >= 1");
            const int c = p.c, r = p.r;
            auto rect = [](int cc, int rr) { return std::vector<int>(rr, cc); };
            Polynomial sq = sz(rect(c, r), 1, n);
            Polynomial lhs = sq * sq;
            Polynomial rhs = sz(rect(c, r - 1), 1, n) * sz(rect(c, r + 1), 1, n) +
                             sz(rect(c - 1, r), 1, n) * sz(rect(c + 1, r), 1, n);
            return finish(lhs, rhs,
                          s(rect(c, r)) + "^2 = " + s(rect(c, r - 1)) + "*" + s(rect(c, r + 1)) + " + " +
                              s(rect(c - 1, r)) + "*" + s(rect(c + 1, r)));
        }
        case SchurIdentity::SkewThreeTerm: {
            require_positive_parts(p.lambda);
            const int k = static_cast<int>(p.lambda.size());
            if (p.t < 0 || p.t > k - 1) throw ArgumentError("t must lie in [0, k-1]");
            auto sh = three_term_shapes(p.lambda, p.t);
            Polynomial lhs = minus_box(p.lambda, n) * sz(sh.mu, 1, n);
            Polynomial rhs = minus_box(sh.mu, n) * sz(p.lambda, 1, n) + sz(sh.rho, 1, n) * sz(sh.nu, 1, n);
            return finish(lhs, rhs,
                          s(p.lambda) + "/1*" + s(sh.mu) + " = " + s(sh.mu) + "/1*" + s(p.lambda) + " + " + s(sh.rho) +
                              "*" + s(sh.nu));
        }
        case SchurIdentity::FulmekKleber: {
            const auto& nu = p.lambda;
            if (nu.size() < 2) throw ArgumentError("Fulmek-Kleber identity needs nu with k+1 >= 2 entries");
            require_sequence_partition(nu, "nu");
            const int k1 = static_cast<int>(nu.size());
            std::vector<int> head = shifted(nu, 0, k1 - 1, 0), tail = shifted(nu, 1, k1, 0),
                             mid = shifted(nu, 1, k1 - 1, 0), tail_down = shifted(nu, 1, k1, -1),
                             head_up = shifted(nu, 0, k1 - 1, 1);
            Polynomial lhs = sz(head, 1, n) * sz(tail, 1, n);
            Polynomial rhs = sz(mid, 1, n) * sz(nu, 1, n) + sz(tail_down, 1, n) * sz(head_up, 1, n);
            return finish(lhs, rhs,
                          s(head) + "*" + s(tail) + " = " + s(mid) + "*" + s(nu) + " + " + s(tail_down) + "*" + s(head_up));
        }
        case SchurIdentity::InterlacingPairs: {
            const auto& lambda = p.lambda;
            const auto& mu = p.mu;
            const int k = static_cast<int>(lambda.size());
            if (k < 1) throw ArgumentError("lambda needs at least one entry");
            require_sequence_partition(lambda, "lambda");
            require_sequence_partition(mu, "mu");
            if (static_cast<int>(mu.size()) != k - 1) throw ArgumentError("mu must have one entry fewer than lambda");
            for (int i = 0; i < k - 1; ++i)
                if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) throw ArgumentError("lambda and mu do not interlace");
            Polynomial lhs = sz(lambda, 1, n) * sz(mu, 1, n);
            PolynomialAccumulator acc;
            std::string statement = s(lambda) + "*" + s(mu) + " =";
            for (int i = 1; i <= k; ++i) {
                auto [li, mi] = interlacing_terms(lambda, mu, i);
                acc.add(sz(li, 1, n) * sz(mi, 1, n));
                statement += (i > 1 ? " + " : " ") + s(li) + "*" + s(mi);
            }
            return finish(lhs, acc.result(), statement);
        }
    }
    throw ArgumentError("unknown identity");
}

namespace {

IndexSet evens(int k) {
    IndexSet out;
    for (int i = 2; i <= 2 * k - 2; i += 2) out.push_back(i);
    return out;
}

void compare(NetworkRouteResult& r, const std::string& label, const Polynomial& got, const Polynomial& want) {
    const bool ok = got == want;
    r.lines.push_back(label + (ok ? ": ok" : ": MISMATCH (network " + got.to_string() + ")"));
    if (!ok) r.holds = false;
}

}  // namespace

NetworkRouteResult verify_three_term_by_network(const std::vector<int>& lambda, int t, int n) {
    Network g = build_schur_network(lambda, t, n);
    const int k = static_cast<int>(lambda.size());
    auto sh = three_term_shapes(lambda, t);
    IndexSet I = evens(k), J1, J2;
    for (int j = 1; j <= 2 * k - 3; j += 2) J1.push_back(j);
    for (int j = 3; j <= 2 * k - 1; j += 2) J2.push_back(j);
    PatternWeights pw(g);
    NetworkRouteResult r;
    r.holds = true;
    Polynomial w = pw.pattern_weight(I, I), w1 = pw.pattern_weight(I, J1), w2 = pw.pattern_weight(I, J2);
    compare(r, "wt(I,J) = " + s(sh.mu, "[2,n]") + "*" + s(lambda), w, sz(sh.mu, 2, n) * sz(lambda, 1, n));
    compare(r, "wt(I," + format_index_set(J1) + ") = x1*" + s(sh.nu, "[2,n]") + "*" + s(sh.rho), w1,
            Polynomial::var(1) * sz(sh.nu, 2, n) * sz(sh.rho, 1, n));
    compare(r, "wt(I," + format_index_set(J2) + ") = " + s(sh.mu) + "*" + s(lambda, "[2,n]"), w2,
            sz(sh.mu, 1, n) * sz(lambda, 2, n));
    compare(r, "three-term relation", w, w1 + w2);
    return r;
}

NetworkRouteResult verify_interlacing_by_network(const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
    Network g = build_interlace_pair_network(lambda, mu, n);
    const int k = static_cast<int>(lambda.size());
    IndexSet I = evens(k);
    PatternWeights pw(g);
    NetworkRouteResult r;
    r.holds = true;
    Polynomial w = pw.pattern_weight(I, I);
    compare(r, "wt(I,J) = " + s(lambda) + "*" + s(mu), w, sz(lambda, 1, n) * sz(mu, 1, n));
    PolynomialAccumulator acc;
    // Source v_i sits at column lambda_{k+1-i} + i, so dropping source 2i-1 matches term k+1-i.
    for (int i = 1; i <= k; ++i) {
        IndexSet Ii;
        for (int j = 1; j <= 2 * k - 1; j += 2)
            if (j != 2 * (k + 1 - i) - 1) Ii.push_back(j);
        auto [li, mi] = interlacing_terms(lambda, mu, i);
        Polynomial wi = pw.pattern_weight(Ii, I);
        acc.add(wi);
        compare(r, "wt(" + format_index_set(Ii) + ",J) = " + s(li) + "*" + s(mi), wi, sz(li, 1, n) * sz(mi, 1, n));
    }
    compare(r, "source-swap sum", w, acc.result());
    return r;
}

}  // namespace interlace
