#include "interlace/errors.hpp"
#include "interlace/involution.hpp"

#include <algorithm>

namespace interlace {

namespace {

IndexSet evens(const IndexSet& s) {
    IndexSet out;
    for (int x : s)
        if (x % 2 == 0) out.push_back(x);
    return out;
}

IndexSet odd_range(int total) {
    IndexSet out;
    for (int x = 1; x <= total; x += 2) out.push_back(x);
    return out;
}

IndexSet even_range(int total) {
    IndexSet out;
    for (int x = 2; x <= total; x += 2) out.push_back(x);
    return out;
}

RelationCheck finish(Scalar lhs, Scalar rhs, std::string detail) {
    RelationCheck out;
    out.holds = lhs == rhs;
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    out.detail = std::move(detail);
    return out;
}

}  // namespace

RelationCheck verify_parity_relation(PatternWeights& w, int k, const IndexSet& I, const IndexSet& K) {
    const int total = 2 * k - 1;
    IndexSet all_even = even_range(total);
    for (int x : K)
        if (!std::binary_search(all_even.begin(), all_even.end(), x))
            throw ArgumentError("parity relation needs a set of even sink indices");
    IndexSet other;
    std::set_difference(all_even.begin(), all_even.end(), K.begin(), K.end(), std::back_inserter(other));
    PolynomialAccumulator lhs, rhs;
    for (const auto& J : subsets(total, k - 1)) {
        IndexSet e = evens(J);
        if (e == K) lhs.add(w.pattern_weight(I, J));
        if (e == other) rhs.add(w.pattern_weight(I, J));
    }
    return finish(lhs.result(), rhs.result(),
                  "I=" + format_index_set(I) + " K=" + format_index_set(K) + " K'=" + format_index_set(other));
}

RelationCheck verify_three_term(PatternWeights& w, int k, const IndexSet& I, const IndexSet& J) {
    const int total = 2 * k - 1;
    if (static_cast<int>(J.size()) != k - 1 || static_cast<int>(I.size()) != k - 1)
        throw ArgumentError("three-term relation needs patterns of size k-1");
    if (std::binary_search(J.begin(), J.end(), 1) || std::binary_search(J.begin(), J.end(), total))
        throw ArgumentError("three-term relation needs 1 and 2k-1 outside J");
    IndexSet with_first = J, with_last = J;
    with_first.insert(with_first.begin(), 1);
    with_last.push_back(total);
    IndexSet j1 = complement(with_first, total);  // [2, 2k-1] \ J
    IndexSet j2 = complement(with_last, total);   // [1, 2k-2] \ J
    Scalar lhs = w.pattern_weight(I, J);
    Scalar rhs = w.pattern_weight(I, j1) + w.pattern_weight(I, j2);
    return finish(lhs, rhs,
                  "I=" + format_index_set(I) + " J=" + format_index_set(J) + " J'=" + format_index_set(j1) +
                      " J''=" + format_index_set(j2));
}

RelationCheck verify_source_swap_sum(PatternWeights& w, int k) {
    const int total = 2 * k - 1;
    IndexSet I = even_range(total);
    IndexSet odds = odd_range(total);
    PolynomialAccumulator rhs;
    for (int i = 1; i <= k; ++i) {
        IndexSet Ii;
        for (int x : odds)
            if (x != 2 * i - 1) Ii.push_back(x);
        rhs.add(w.pattern_weight(Ii, I));
    }
    return finish(w.pattern_weight(I, I), rhs.result(), "I=J=" + format_index_set(I));
}

InvolutionReport check_tau_exhaustive(const Network& g) {
    InvolutionReport rep;
    const int k = g.k();
    auto note = [&](bool& flag, const std::string& what) {
        if (flag && rep.first_failure.empty()) rep.first_failure = what;
        flag = false;
    };
    for (const auto& [I, J] : all_patterns(k)) {
        for (const auto& pair : enumerate_pnc(g, I, J)) {
            ++rep.pairs;
            std::string where = "I=" + format_index_set(I) + " J=" + format_index_set(J);
            PncPair image = tau(g, pair).pair;
            if (image == pair) ++rep.fixed_points;
            if (tau(g, image).pair != pair) note(rep.involution, "tau is not an involution at " + where);
            if (weight(g, image.red) * weight(g, image.blue) != weight(g, pair.red) * weight(g, pair.blue))
                note(rep.weight_preserving, "weight changes at " + where);
            SwapClass sc = classify_swap(J, image.J, k);
            if (sc.kind != SwapKind::Balanced && sc.kind != SwapKind::End)
                note(rep.balanced, "image pattern is not a balanced swap at " + where);
            if (sc.kind != SwapKind::End) note(rep.end_swap, "image pattern is not an end swap at " + where);
        }
    }
    return rep;
}

}  // namespace interlace
