#include "interlace/grassmann.hpp"

#include "interlace/errors.hpp"

#include <algorithm>

namespace interlace {

ExactMatrix path_matrix(const Network& g) {
    const int size = static_cast<int>(g.sources().size());
    ExactMatrix m(size, static_cast<int>(g.sinks().size()));
    for (int i = 0; i < size; ++i) {
        std::vector<Scalar> reach(g.vertex_count());
        reach[g.sources()[i]] = Scalar(1);
        for (VertexId v : g.topological_order()) {
            if (reach[v].is_zero()) continue;
            for (int e : g.out_edges(v)) reach[g.edge(e).to] += reach[v] * g.edge(e).weight;
        }
        for (int j = 0; j < m.cols(); ++j) m(i, j) = reach[g.sinks()[j]];
    }
    return m;
}

namespace {

bool nonnegative(const Scalar& s) {
    return std::all_of(s.terms().begin(), s.terms().end(), [](const Polynomial::Term& t) { return t.coeff.sign() >= 0; });
}

std::string minor_label(const IndexSet& rows, const IndexSet& cols) {
    return "det[" + format_index_set(rows) + "|" + format_index_set(cols) + "]";
}

}  // namespace

InterlacingCheck check_interlacing_matrix(const ExactMatrix& m, int k) {
    const int size = 2 * k - 1;
    if (k < 2 || m.rows() != size || m.cols() != size)
        throw ArgumentError("an interlacing matrix of order 2k-1 needs k >= 2 and a square matrix of that size");
    InterlacingCheck out;
    MinorTable table(m);
    auto fail = [&](const IndexSet& rows, const IndexSet& cols, const std::string& why) {
        if (!out.certificate.empty()) return;
        out.rows = rows;
        out.cols = cols;
        out.certificate = minor_label(rows, cols) + " = " + table.get(rows, cols).to_string() + " " + why;
    };
    out.totally_nonnegative = true;
    for (int r = 1; r <= size && out.totally_nonnegative; ++r)
        for (const auto& rows : subsets(size, r)) {
            for (const auto& cols : subsets(size, r))
                if (!nonnegative(table.get(rows, cols))) {
                    out.totally_nonnegative = false;
                    fail(rows, cols, "is negative");
                    break;
                }
            if (!out.totally_nonnegative) break;
        }
    out.rank_ok = true;
    if (k + 1 <= size) {
        for (const auto& rows : subsets(size, k + 1)) {
            for (const auto& cols : subsets(size, k + 1))
                if (!table.get(rows, cols).is_zero()) {
                    out.rank_ok = false;
                    fail(rows, cols, "is nonzero, so the rank exceeds k");
                    break;
                }
            if (!out.rank_ok) break;
        }
    }
    out.inner_rank_ok = true;
    for (const auto& rows : subsets(size, k)) {
        for (const auto& inner : subsets(size - 2, k)) {
            IndexSet cols;
            for (int c : inner) cols.push_back(c + 1);
            if (!table.get(rows, cols).is_zero()) {
                out.inner_rank_ok = false;
                fail(rows, cols, "is nonzero, so the middle columns have rank above k-1");
                break;
            }
        }
        if (!out.inner_rank_ok) break;
    }
    out.interlacing = out.totally_nonnegative && out.rank_ok && out.inner_rank_ok;
    return out;
}

bool is_interlacing_matrix(const ExactMatrix& m, int k) { return check_interlacing_matrix(m, k).interlacing; }

PluckerVector PluckerVector::from_matrix(const ExactMatrix& m) {
    PluckerVector v;
    v.l_ = m.rows();
    v.n_ = m.cols();
    IndexSet all_rows;
    for (int i = 1; i <= v.l_; ++i) all_rows.push_back(i);
    v.sets_ = subsets(v.n_, v.l_);
    v.values_.reserve(v.sets_.size());
    for (const auto& s : v.sets_) v.values_.push_back(determinant(m.submatrix(all_rows, s)));
    return v;
}

const Scalar& PluckerVector::at(const IndexSet& s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it == sets_.end() || *it != s) throw ArgumentError("not an index set of this Plucker vector: " + format_index_set(s));
    return values_[it - sets_.begin()];
}

Scalar PluckerVector::signed_at(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != l_) throw ArgumentError("Plucker index has the wrong length");
    std::vector<int> t = tuple;
    int swaps = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
            if (t[j] > t[j + 1]) {
                std::swap(t[j], t[j + 1]);
                ++swaps;
            }
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) return Scalar(0);
    return swaps % 2 ? -at(t) : at(t);
}

std::vector<IndexSet> PluckerVector::vanishing_sets() const {
    std::vector<IndexSet> out;
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (values_[i].is_zero()) out.push_back(sets_[i]);
    return out;
}

ExactMatrix phi_matrix(const ExactMatrix& a) {
    const int l = a.rows(), n = a.cols();
    ExactMatrix m(l, l + n);
    for (int r = 1; r <= l; ++r) {
        m(r - 1, r - 1) = Scalar(1);
        int src = l + 1 - r;
        bool negate = (l - r) % 2 == 1;
        for (int j = 0; j < n; ++j) m(r - 1, l + j) = negate ? -a(src - 1, j) : a(src - 1, j);
    }
    return m;
}

IndexSet phi_index(int l, const IndexSet& rows, const IndexSet& cols) {
    IndexSet drop;
    for (int i : rows) drop.push_back(l + 1 - i);
    std::sort(drop.begin(), drop.end());
    IndexSet out = complement(drop, l);
    for (int j : cols) out.push_back(j + l);
    return out;
}

PluckerVector phi_embed(const ExactMatrix& a) {
    PluckerVector v = PluckerVector::from_matrix(phi_matrix(a));
    MinorTable table(a);
    for (int r = 0; r <= std::min(a.rows(), a.cols()); ++r)
        for (const auto& rows : subsets(a.rows(), r))
            for (const auto& cols : subsets(a.cols(), r)) {
                IndexSet idx = phi_index(a.rows(), rows, cols);
                if (table.get(rows, cols) != v.at(idx))
                    throw IntegrityError("index law fails: " + minor_label(rows, cols) + " differs from coordinate " +
                                         format_index_set(idx));
            }
    return v;
}

IdentityCheck plucker_relation(const PluckerVector& v, const std::vector<int>& p, const std::vector<int>& q, int m) {
    const int l = v.l();
    if (static_cast<int>(p.size()) != l || static_cast<int>(q.size()) != l || m < 1 || m > l)
        throw ArgumentError("Plucker relation needs two l-tuples and 1 <= m <= l");
    IdentityCheck out;
    out.lhs = v.signed_at(p) * v.signed_at(q);
    PolynomialAccumulator rhs;
    for (const auto& pos : subsets(l, m)) {
        std::vector<int> p2 = p, q2(q.begin(), q.begin() + (l - m));
        for (int t = 0; t < m; ++t) {
            p2[pos[t] - 1] = q[l - m + t];
            q2.push_back(p[pos[t] - 1]);
        }
        rhs.add(v.signed_at(p2) * v.signed_at(q2));
    }
    out.rhs = rhs.result();
    out.holds = out.lhs == out.rhs;
    return out;
}

namespace {

struct ThreeTermSets {
    IndexSet ibar, jbar, j1, j1bar, j2, j2bar;
};

ThreeTermSets three_term_sets(int k, const IndexSet& I, const IndexSet& J) {
    const int size = 2 * k - 1;
    if (static_cast<int>(I.size()) != k - 1 || static_cast<int>(J.size()) != k - 1)
        throw ArgumentError("I and J must have k-1 elements");
    if (std::binary_search(J.begin(), J.end(), 1) || std::binary_search(J.begin(), J.end(), size))
        throw ArgumentError("J must avoid 1 and 2k-1");
    ThreeTermSets s;
    s.ibar = complement(I, size);
    s.jbar = complement(J, size);
    IndexSet with_first = J, with_last = J;
    with_first.insert(with_first.begin(), 1);
    with_last.push_back(size);
    s.j1 = complement(with_first, size);
    s.j1bar = with_first;
    s.j2 = complement(with_last, size);
    s.j2bar = with_last;
    return s;
}

}  // namespace

IdentityCheck verify_intermat(const ExactMatrix& m, int k, const IndexSet& I, const IndexSet& J) {
    ThreeTermSets s = three_term_sets(k, I, J);
    InterlacingCheck check = check_interlacing_matrix(m, k);
    if (!check.interlacing) throw ArgumentError("matrix is not interlacing: " + check.certificate);
    MinorTable t(m);
    IdentityCheck out;
    out.lhs = t.get(s.ibar, s.jbar) * t.get(I, J);
    out.rhs = t.get(s.ibar, s.j1bar) * t.get(I, s.j1) + t.get(s.ibar, s.j2bar) * t.get(I, s.j2);
    out.holds = out.lhs == out.rhs;
    out.detail = "I=" + format_index_set(I) + " J=" + format_index_set(J) + " J'=" + format_index_set(s.j1) +
                 " J''=" + format_index_set(s.j2);
    return out;
}

IdentityCheck verify_intermat_plucker(const PluckerVector& v, int k, const IndexSet& I, const IndexSet& J) {
    const int l = 2 * k - 1;
    if (v.l() != l || v.n() != 2 * l) throw ArgumentError("Plucker vector must live in Gr(2k-1, 4k-2)");
    ThreeTermSets s = three_term_sets(k, I, J);
    auto d = [&](const IndexSet& rows, const IndexSet& cols) { return v.at(phi_index(l, rows, cols)); };
    IdentityCheck out;
    out.lhs = d(s.ibar, s.jbar) * d(I, J);
    out.rhs = d(s.ibar, s.j1bar) * d(I, s.j1) + d(s.ibar, s.j2bar) * d(I, s.j2);
    out.holds = out.lhs == out.rhs;
    out.detail = "I=" + format_index_set(I) + " J=" + format_index_set(J);
    return out;
}

namespace {

int upper_count(const IndexSet& s, int k) {
    return static_cast<int>(std::count_if(s.begin(), s.end(), [&](int x) { return x >= 2 * k; }));
}

bool has(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

bool in_mstar(const IndexSet& s, int k) {
    int c = upper_count(s, k);
    return c >= k + 1 || (c >= k && !has(s, 2 * k) && !has(s, 4 * k - 2));
}

bool in_mstar_shifted(const IndexSet& s, int k) {
    int c = upper_count(s, k);
    return c >= k || (c >= k - 1 && !has(s, 2 * k) && !has(s, 4 * k - 2));
}

std::vector<IndexSet> mstar_set(int k) {
    std::vector<IndexSet> out;
    for (const auto& s : subsets(4 * k - 2, 2 * k - 1))
        if (in_mstar(s, k)) out.push_back(s);
    return out;
}

MStarMembership mstar_membership(const PluckerVector& v, int k) {
    if (v.l() != 2 * k - 1 || v.n() != 4 * k - 2) throw ArgumentError("Plucker vector must live in Gr(2k-1, 4k-2)");
    MStarMembership out;
    out.in_cell_closure = true;
    out.exact_cell = true;
    for (const auto& s : v.index_sets()) {
        bool zero = v.at(s).is_zero();
        bool forced = in_mstar(s, k);
        if (forced && !zero) {
            out.in_cell_closure = false;
            out.exact_cell = false;
            out.first_violation = s;
            return out;
        }
        if (!forced && zero && out.exact_cell) {
            out.exact_cell = false;
            out.first_violation = s;
        }
    }
    return out;
}

bool vanishing_condition_a(const IndexSet& s, int k) {
    return static_cast<int>(s.size()) == 2 * k - 1 && s[k - 2] > 2 * k - 1;
}

bool vanishing_condition_b(const IndexSet& s, int k) {
    return static_cast<int>(s.size()) == 2 * k - 1 && !has(s, 2 * k) && !has(s, 4 * k - 2) && s[k - 1] > 2 * k - 1;
}

std::optional<IndexSet> check_vanishing_conditions(const PluckerVector& v, int k) {
    for (const auto& s : v.index_sets())
        if ((vanishing_condition_a(s, k) || vanishing_condition_b(s, k)) && !v.at(s).is_zero()) return s;
    return std::nullopt;
}

}  // namespace interlace
