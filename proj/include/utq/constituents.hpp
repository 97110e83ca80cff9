#pragma once

// Constituent statistics for the basic-character configurations with known
// decompositions, and the construction tables for the three largest character
// degrees.  Everything here is symbolic; the concrete-group oracle checks it.

#include <string>
#include <vector>

#include "utq/counting.hpp"
#include "utq/superalg.hpp"

namespace utq {

struct StatLine {
    int degree_exponent = 0;
    PolyQ count;             // number of distinct irreducible constituents
    long long multiplicity = 1;
};

using ConstituentStats = std::vector<StatLine>;

/// sum count * multiplicity * q^exponent over the lines, evaluated at q0
/// (multiplicities are stored as integers at the ambient field size).
inline Bigint stats_total(const ConstituentStats& st, const Bigint& q0) {
    Bigint out = 0;
    for (const auto& line : st) {
        Bigint pw = 1;
        for (int t = 0; t < line.degree_exponent; ++t) pw *= q0;
        out += line.count.eval(q0) * line.multiplicity * pw;
    }
    return out;
}

/// sum count * multiplicity^2, evaluated at q0: the norm the Mackey sum sees.
inline Bigint stats_norm(const ConstituentStats& st, const Bigint& q0) {
    Bigint out = 0;
    for (const auto& line : st)
        out += line.count.eval(q0) * line.multiplicity * line.multiplicity;
    return out;
}

namespace detail {

inline bool matches_pattern(const std::vector<Root>& sorted, std::initializer_list<Root> pat) {
    return std::equal(sorted.begin(), sorted.end(), pat.begin(), pat.end());
}

inline ConstituentStats product_stats(const ConstituentStats& a, const ConstituentStats& b) {
    ConstituentStats out;
    for (const auto& la : a)
        for (const auto& lb : b)
            out.push_back(StatLine{la.degree_exponent + lb.degree_exponent, la.count * lb.count,
                                   la.multiplicity * lb.multiplicity});
    return out;
}

}  // namespace detail

/// Partial function: single factors, separate pairs, the two three-root
/// antidiagonal patterns near the top corner, and anything that splits under
/// basic-set decomposition (statistics multiply across the parts).
inline ConstituentStats constituent_stats(const BasicSymbol& s) {
    const int n = s.n();
    const auto& fs = s.factors();

    if (fs.empty()) return {StatLine{0, PolyQ::constant(1), 1}};
    if (fs.size() == 1) return {StatLine{height(fs[0].root), PolyQ::constant(1), 1}};

    if (fs.size() == 2) {
        const int d = height(fs[0].root) + height(fs[1].root);
        const PairClass pc = classify_pair(n, fs[0].root, fs[1].root);
        if (pc.relation == PairRelation::separate_disjoint)
            return {StatLine{d, PolyQ::constant(1), 1}};
        return {StatLine{d - 1, PolyQ::q(), 1}};
    }

    std::vector<Root> sorted;
    for (const auto& f : fs) sorted.push_back(f.root);
    std::sort(sorted.begin(), sorted.end());

    if (fs.size() == 3 && n >= 7) {
        // {a_{2,n-3}, a_{1,n-2}, a_{3,n-1}} and its graph-automorphism image:
        // q^2 distinct constituents of degree q^{3n-14}.
        if (detail::matches_pattern(sorted, {Root{1, n - 2}, Root{2, n - 3}, Root{3, n - 1}}) ||
            detail::matches_pattern(sorted, {Root{1, n - 3}, Root{2, n - 1}, Root{3, n - 2}}))
            return {StatLine{3 * n - 14, PolyQ::q() * PolyQ::q(), 1}};
        // {a_{1,n-3}, a_{2,n-2}, a_{3,n-1}}: q^2 at q^{3n-15} plus (q-1)
        // constituents at q^{3n-14} of multiplicity q.
        if (detail::matches_pattern(sorted, {Root{1, n - 3}, Root{2, n - 2}, Root{3, n - 1}}))
            return {StatLine{3 * n - 15, PolyQ::q() * PolyQ::q(), 1},
                    StatLine{3 * n - 14, PolyQ::qm1(), static_cast<long long>(s.q())}};
    }

    const BasicSet d = validate_basic_set(n, s.root_set());
    if (auto w = decompose_basic_set(n, d)) {
        FactorList fa, fb;
        for (const auto& f : fs)
            (w->part_a.contains(f.root) ? fa : fb).push_back(f);
        return detail::product_stats(constituent_stats(BasicSymbol(n, s.q(), fa)),
                                     constituent_stats(BasicSymbol(n, s.q(), fb)));
    }

    throw Unsupported("no known constituent profile for this basic-set configuration");
}

// ---------------------------------------------------------------------------
// construction tables for the top three degrees

struct InnerRef {
    int n = 0;
    int rank = 0;  // 1 = top, 2 = second, 3 = third
};

struct CaseDescriptor {
    std::string label;
    RootSet outer;                  // the roots placed in the ambient group
    std::optional<InnerRef> inner;  // recursion into a smaller rank, if any
    SeededPoly count;
};

/// The case lists behind the counts of the three largest degrees.  rank_index
/// selects highest (1), second (2, n >= 5) or third (3, n >= 7).
inline std::vector<CaseDescriptor> extremal_constructions(
    int n, int rank_index, const BaseValueTable& seeds = BaseValueTable::with_defaults()) {
    std::vector<CaseDescriptor> out;
    const auto antidiagonal = [&](int upto) {
        RootSet s(n);
        for (int k = 1; k <= upto; ++k) s.insert(Root{k, n - k});
        return s;
    };

    if (rank_index == 1) {
        if (n < 1) throw ValidationError("rank must be >= 1");
        const int m = n / 2;
        if (n % 2 == 1) {
            out.push_back({"top.antidiagonal", antidiagonal(m), std::nullopt,
                           SeededPoly(PolyQ::qm1_pow(m))});
        } else {
            out.push_back({"top.antidiagonal-with-middle", antidiagonal(m), std::nullopt,
                           SeededPoly(PolyQ::qm1_pow(m))});
            out.push_back({"top.antidiagonal-without-middle", antidiagonal(m - 1), std::nullopt,
                           SeededPoly(PolyQ::qm1_pow(m - 1))});
        }
        return out;
    }

    if (rank_index == 2) {
        if (n < 5) throw ValidationError("second-highest construction needs n >= 5");
        out.push_back({"second.i", RootSet(n, {Root{1, n - 1}}), InnerRef{n - 2, 2},
                       SeededPoly(PolyQ::qm1() * detail::n_second_any(n - 2, seeds))});
        out.push_back({"second.ii", RootSet(n, {Root{1, n - 2}, Root{2, n - 1}}), InnerRef{n - 4, 1},
                       SeededPoly(PolyQ::q() * PolyQ::qm1_pow(2) * n_top(n - 4))});
        return out;
    }

    if (rank_index == 3) {
        if (n < 7) throw ValidationError("third-highest construction needs n >= 7");
        const PolyQ q2 = PolyQ::q() * PolyQ::q();
        out.push_back({"third.i", RootSet(n, {Root{1, n - 1}}), InnerRef{n - 2, 3},
                       PolyQ::qm1() * detail::n_third_ref(n - 2, seeds, ThirdVariant::prose)});
        out.push_back({"third.ii", RootSet(n, {Root{1, n - 2}, Root{2, n - 1}}), InnerRef{n - 4, 2},
                       SeededPoly(PolyQ::q() * PolyQ::qm1_pow(2) * detail::n_second_any(n - 4, seeds))});
        out.push_back({"third.iii", RootSet(n, {Root{2, n - 3}, Root{1, n - 2}, Root{3, n - 1}}),
                       InnerRef{n - 6, 1}, SeededPoly(q2 * PolyQ::qm1_pow(3) * n_top(n - 6))});
        out.push_back({"third.iv", RootSet(n, {Root{1, n - 3}, Root{3, n - 2}, Root{2, n - 1}}),
                       InnerRef{n - 6, 1}, SeededPoly(q2 * PolyQ::qm1_pow(3) * n_top(n - 6))});
        out.push_back({"third.v", RootSet(n, {Root{1, n - 3}, Root{2, n - 2}, Root{3, n - 1}}),
                       InnerRef{n - 6, 1}, SeededPoly(PolyQ::qm1_pow(4) * n_top(n - 6))});
        return out;
    }

    throw ValidationError("rank_index must be 1, 2 or 3");
}

/// Sum of the case counts at one rank; equals the corresponding global count.
inline SeededPoly extremal_total(int n, int rank_index,
                                 const BaseValueTable& seeds = BaseValueTable::with_defaults()) {
    SeededPoly total;
    for (const auto& c : extremal_constructions(n, rank_index, seeds)) total = total + c.count;
    return total;
}

}  // namespace utq
