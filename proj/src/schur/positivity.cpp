#include "interlace/errors.hpp"
#include "interlace/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace interlace {

namespace {

// Graded order on partitions: size first, then lexicographic.
bool graded_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
}

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, std::int64_t> kostka_cache;

// Semistandard tableaux of shape `shape` with content `content` (any composition).
std::int64_t kostka(const Partition& shape, const std::vector<int>& content) {
    if (content.empty()) return shape.empty() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lock(kostka_mutex);
        auto it = kostka_cache.find({shape, content});
        if (it != kostka_cache.end()) return it->second;
    }
    const int strip = content.back();
    std::vector<int> rest(content.begin(), content.end() - 1);
    const int len = shape.length();
    std::vector<int> inner(len);
    std::int64_t total = 0;
    // The largest entries form a horizontal strip: inner_i lies in [shape_{i+1}, shape_i].
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == len) {
            if (left == 0) total += kostka(Partition(inner), rest);
            return;
        }
        const int hi = shape.part(i + 1), lo = shape.part(i + 2);
        for (int v = hi; v >= lo; --v) {
            if (hi - v > left) break;
            inner[i] = v;
            rec(i + 1, left - (hi - v));
        }
    };
    rec(0, strip);
    std::lock_guard<std::mutex> lock(kostka_mutex);
    kostka_cache.emplace(std::pair{shape, content}, total);
    return total;
}

std::optional<Partition> exponent_partition(const Monomial& m, int n) {
    auto e = m.exponents(static_cast<VarIndex>(n));
    for (int i = 1; i < n; ++i)
        if (e[i] > e[i - 1]) return std::nullopt;
    return Partition(std::vector<int>(e.begin(), e.end()));
}

}  // namespace

std::string format_expansion(const SchurExpansion& e) {
    if (e.empty()) return "0";
    std::string out;
    // Largest shapes first.
    std::vector<std::pair<Partition, Rational>> terms(e.begin(), e.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
    bool first = true;
    for (const auto& [p, c] : terms) {
        Rational mag = c < Rational(0) ? -c : c;
        if (first) out += c < Rational(0) ? "-" : "";
        else out += c < Rational(0) ? " - " : " + ";
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += "s" + p.to_string();
        first = false;
    }
    return out;
}

bool is_symmetric(const Polynomial& f, int n) {
    if (n < 1) throw ArgumentError("is_symmetric needs n >= 1");
    if (f.max_variable() > static_cast<VarIndex>(n)) return false;
    for (int i = 1; i < n; ++i) {
        std::vector<Polynomial::Term> swapped;
        swapped.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            std::vector<Monomial::Factor> fs = t.mono.factors();
            for (auto& [v, e] : fs) {
                if (v == static_cast<VarIndex>(i)) v = i + 1;
                else if (v == static_cast<VarIndex>(i + 1)) v = i;
            }
            swapped.push_back({Monomial::from_factors(std::move(fs)), t.coeff});
        }
        if (Polynomial::from_terms(std::move(swapped)) != f) return false;
    }
    return true;
}

SchurExpansion lr_expand(const Polynomial& f, int n) {
    if (!is_symmetric(f, n)) throw ArgumentError("lr_expand needs a symmetric polynomial in x1..x" + std::to_string(n));
    // A symmetric polynomial is determined by its coefficients on x^beta for partitions beta,
    // and [x^beta] s_alpha is the Kostka number K(alpha, beta).
    std::map<Partition, Rational, decltype(&graded_less)> dominant(&graded_less);
    for (const auto& t : f.terms())
        if (auto p = exponent_partition(t.mono, n)) dominant[*p] = t.coeff;
    SchurExpansion out;
    while (!dominant.empty()) {
        auto lead = std::prev(dominant.end());
        const Partition alpha = lead->first;
        const Rational c = lead->second;
        out[alpha] = c;
        for (const Partition& beta : partitions_of(alpha.size(), n)) {
            const std::int64_t kab = kostka(alpha, beta.parts());
            if (kab == 0) continue;
            Rational& slot = dominant[beta];
            slot -= c * Rational(static_cast<long>(kab));
            if (slot == Rational(0)) dominant.erase(beta);
        }
        if (dominant.count(alpha)) throw IntegrityError("leading coefficient did not cancel for s" + alpha.to_string());
    }
    return out;
}

Polynomial from_expansion(const SchurExpansion& e, int n) {
    PolynomialAccumulator acc;
    for (const auto& [p, c] : e) acc.add(schur(p, 1, n), c);
    return acc.result();
}

SchurExpansion lr_product_by_tableaux(const Partition& lambda, const Partition& mu, int n) {
    SchurExpansion out;
    const int total = lambda.size() + mu.size();
    const int m = mu.length();
    for (const Partition& nu : partitions_of(total, n)) {
        if (!nu.contains(lambda)) continue;
        struct Cell {
            int r, c;
        };
        std::vector<Cell> cells;  // reading order: rows top to bottom, right to left
        for (int r = 1; r <= nu.length(); ++r)
            for (int c = nu.part(r); c > lambda.part(r); --c) cells.push_back({r, c});
        std::map<std::pair<int, int>, int> filled;
        std::vector<int> count(m + 2, 0);
        std::int64_t tableaux = 0;
        std::function<void(std::size_t)> rec = [&](std::size_t idx) {
            if (idx == cells.size()) {
                ++tableaux;
                return;
            }
            const Cell cell = cells[idx];
            int lo = 1, hi = m;
            if (auto it = filled.find({cell.r, cell.c + 1}); it != filled.end()) hi = std::min(hi, it->second);
            if (auto it = filled.find({cell.r - 1, cell.c}); it != filled.end()) lo = std::max(lo, it->second + 1);
            for (int v = lo; v <= hi; ++v) {
                if (count[v] >= mu.part(v)) continue;
                if (v > 1 && count[v] + 1 > count[v - 1]) continue;
                filled[{cell.r, cell.c}] = v;
                ++count[v];
                rec(idx + 1);
                --count[v];
            }
            filled.erase({cell.r, cell.c});
        };
        rec(0);
        if (tableaux) out[nu] = Rational(static_cast<long>(tableaux));
    }
    return out;
}

PositivityResult is_schur_positive(const Polynomial& f, int n) {
    PositivityResult r;
    r.expansion = lr_expand(f, n);
    r.positive = std::all_of(r.expansion.begin(), r.expansion.end(),
                             [](const auto& kv) { return kv.second >= Rational(0); });
    return r;
}

Polynomial rectangle_positivity_difference(int c, int r, int t, int n) {
    if (c < 1 || r < 1) throw ArgumentError("needs c, r >= 1");
    if (t < 0 || t > r - 1) throw ArgumentError("t must lie in [0, r-1]");
    auto seq = [](std::initializer_list<std::pair<int, int>> blocks) {
        std::vector<int> out;
        for (auto [value, times] : blocks) out.insert(out.end(), std::max(times, 0), value);
        return out;
    };
    return schur_or_zero(seq({{c, r - 1}, {c - 1, 1}}), 1, n) * schur_or_zero(seq({{c, t}, {c - 1, r - t - 1}}), 1, n) -
           schur_or_zero(seq({{c - 1, r}}), 1, n) * schur_or_zero(seq({{c + 1, t}, {c, r - t - 1}}), 1, n);
}

Polynomial removal_positivity_difference(const std::vector<int>& nu, int t, int n) {
    const int k = static_cast<int>(nu.size());
    if (!Partition::from_sequence(nu)) throw ArgumentError("nu is not a partition");
    if (t < 1 || t > k) throw ArgumentError("t must lie in [1, k]");
    std::vector<int> without, down, up;
    for (int j = 1; j <= k; ++j) {
        if (j != t) without.push_back(nu[j - 1]);
        down.push_back(j < t ? nu[j - 1] - 1 : nu[j - 1]);
        if (j < t) up.push_back(nu[j - 1] + 1);
        else if (j > t) up.push_back(nu[j - 1]);
    }
    return schur_or_zero(nu, 1, n) * schur_or_zero(without, 1, n) - schur_or_zero(down, 1, n) * schur_or_zero(up, 1, n);
}

ConjectureReport conjecture_check(const std::vector<int>& lambda, const std::vector<int>& mu, int n_vars) {
    if (!Partition::from_sequence(lambda) || !Partition::from_sequence(mu))
        throw ArgumentError("conjecture_check needs two partitions");
    ConjectureReport r;
    const int len = static_cast<int>(std::max(lambda.size(), mu.size()));
    if (len == 0) throw ArgumentError("conjecture_check needs a nonempty partition");
    r.lambda = lambda;
    r.mu = mu;
    r.lambda.resize(len, 0);
    r.mu.resize(len, 0);
    r.n_vars = n_vars > 0 ? n_vars : 2 * len;
    for (int i = 0; i < len; ++i) r.delta.push_back(r.lambda[i] - r.mu[i]);
    r.sigma.resize(len);
    std::iota(r.sigma.begin(), r.sigma.end(), 1);
    std::stable_sort(r.sigma.begin(), r.sigma.end(), [&](int a, int b) { return r.delta[a - 1] > r.delta[b - 1]; });
    auto dsig = [&](int i) { return r.delta[r.sigma[i - 1] - 1]; };
    for (int i = 1; i <= len; ++i)
        if (dsig(i) > 0 && (i == len || dsig(i) > dsig(i + 1))) r.descents.push_back(i);

    const Polynomial base = schur_or_zero(r.lambda, 1, r.n_vars) * schur_or_zero(r.mu, 1, r.n_vars);
    for (int i : r.descents) {
        ConjectureTerm term;
        term.i = i;
        term.lambda_minus = r.lambda;
        term.mu_plus = r.mu;
        for (int q = 1; q <= i; ++q) {
            --term.lambda_minus[r.sigma[q - 1] - 1];
            ++term.mu_plus[r.sigma[q - 1] - 1];
        }
        term.partitions = Partition::from_sequence(term.lambda_minus) && Partition::from_sequence(term.mu_plus);
        if (term.partitions) {
            Polynomial diff =
                schur_or_zero(term.lambda_minus, 1, r.n_vars) * schur_or_zero(term.mu_plus, 1, r.n_vars) - base;
            auto pos = is_schur_positive(diff, r.n_vars);
            term.positive = pos.positive;
            term.difference = std::move(pos.expansion);
        }
        if (!term.partitions || !term.positive) r.all_positive = false;
        r.terms.push_back(std::move(term));
    }
    return r;
}

std::string format_conjecture_report(const ConjectureReport& r) {
    auto set = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    std::string out;
    out += "lambda = " + format_sequence(r.lambda) + "\n";
    out += "mu = " + format_sequence(r.mu) + "\n";
    out += "delta = " + format_sequence(r.delta) + "\n";
    out += "sigma = " + format_sequence(r.sigma) + "\n";
    out += "D = " + set(r.descents) + "\n";
    out += "variables = " + std::to_string(r.n_vars) + "\n";
    for (const auto& t : r.terms) {
        out += "i = " + std::to_string(t.i) + ": lambda- = " + format_sequence(t.lambda_minus) +
               ", mu+ = " + format_sequence(t.mu_plus);
        if (!t.partitions) {
            out += ", not partitions\n";
            continue;
        }
        out += "\n  difference = " + format_expansion(t.difference) + "\n";
        out += std::string("  schur positive: ") + (t.positive ? "yes" : "no") + "\n";
    }
    out += std::string("verdict: ") + (r.all_positive ? "holds" : "fails") + "\n";
    return out;
}

}  // namespace interlace
