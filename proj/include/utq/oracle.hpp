#pragma once

// Verification-side character theory: histograms, decomposition against a
// table, almost-faithful filtering, and Mackey intertwining numbers computed
// from double cosets without ever materializing induced values.

#include <numeric>

#include "utq/dixon.hpp"

namespace utq {

// ---------------------------------------------------------------------------
// table consumers

struct NonPowerDegree : Error {
    explicit NonPowerDegree(const Bigint& d)
        : Error("irreducible degree " + d.str() + " is not a power of q") {}
};

/// Counts of irreducibles per exponent e with degree q^e.
inline std::map<int, long long> degree_histogram(const CharTable& t, int q) {
    std::map<int, long long> out;
    for (const auto& chi : t.irreducibles) {
        Bigint d = chi.degree_int();
        int e = 0;
        while (d > 1 && d % q == 0) {
            d /= q;
            ++e;
        }
        if (d != 1) throw NonPowerDegree(chi.degree_int());
        ++out[e];
    }
    return out;
}

/// Multiplicities of f against the table; throws when one is not a
/// nonnegative integer (f is then not a character).
inline std::vector<std::pair<std::size_t, Bigint>> decompose_into_irr(const ClassFunction& f,
                                                                      const CharTable& t) {
    std::vector<std::pair<std::size_t, Bigint>> out;
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
        const Rat m = cf_inner(f, t.irreducibles[i]);
        if (denominator(m) != 1 || m < 0)
            throw ValidationError("non-integral multiplicity " + m.str() +
                                  "; the class function is not a character");
        if (m != 0) out.emplace_back(i, numerator(m));
    }
    return out;
}

/// Indices of irreducibles whose center restriction is not degree * trivial,
/// bucketed by the nonzero parameter t with sigma(x(c)) = psi(t c).
inline std::map<int, std::vector<std::size_t>> almost_faithful_subset(const CharTable& t,
                                                                      const GroupHandle& center) {
    const GroupHandle& g = t.classes->group;
    const FieldSpec& F = FieldSpec::get(g.q());
    if (!center.is_subgroup_of(g)) throw ValidationError("center handle is not a subgroup");
    {
        // the handle must be the full center
        const auto central = center_elements(g);
        if (Bigint(central.size()) != center.order())
            throw ValidationError("handle does not match the center of the group");
        for (std::uint64_t idx : central)
            if (!center.member(element_matrix(g, idx)))
                throw ValidationError("handle does not match the center of the group");
    }
    if (center.roots().size() != 1)
        throw ValidationError("center of a nontrivial pattern group here is a single root subgroup");
    const Root zroot = center.roots()[0];

    std::map<int, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
        const ClassFunction& chi = t.irreducibles[i];
        const Rat deg(chi.degree_int());
        // sigma(c) = chi(x_z(c)) / chi(1); find t with sigma(c) = psi(t c)
        int found = 0;
        for (int tt = 1; tt < g.q() && found == 0; ++tt) {
            bool all = true;
            for (int c = 1; c < g.q(); ++c) {
                const auto idx = element_index(
                    g, GenericOps(g.n(), F).root_elem(zroot, c));
                const Cyclo sigma = (Rat(1) / deg) * chi.at_element(*idx);
                if (!(sigma == psi(F, F.mul(tt, c)))) {
                    all = false;
                    break;
                }
            }
            if (all) found = tt;
        }
        if (found != 0) out[found].push_back(i);
    }
    return out;
}

/// Irreducibles of G with the subgroup h inside their kernel (the characters
/// of the quotient G/h).
inline std::vector<std::size_t> irr_with_kernel_containing(const CharTable& t,
                                                           const GroupHandle& h) {
    const GroupHandle& g = t.classes->group;
    if (!h.is_subgroup_of(g)) throw ValidationError("kernel candidate is not a subgroup");
    std::vector<std::size_t> out;
    std::vector<std::size_t> h_classes;
    for (std::uint64_t idx = 0; idx < h.order_u64(); ++idx) {
        const auto gidx = element_index(g, element_matrix(h, idx));
        h_classes.push_back(t.classes->class_of[*gidx]);
    }
    std::sort(h_classes.begin(), h_classes.end());
    h_classes.erase(std::unique(h_classes.begin(), h_classes.end()), h_classes.end());
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
        const ClassFunction& chi = t.irreducibles[i];
        bool contained = true;
        for (std::size_t c : h_classes)
            if (!(chi.at_class(c) == chi.degree())) {
                contained = false;
                break;
            }
        if (contained) out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Mackey intertwining numbers

/// Basic data: a basic set with one nonzero parameter per root.
struct BasicData {
    BasicSymbol symbol;

    BasicData(int n, int q, FactorList factors) : symbol(n, q, std::move(factors)) {
        if (symbol.trivial()) throw ValidationError("basic data needs at least one factor");
        validate_basic_set(n, symbol.root_set());
    }
};

namespace detail {

/// Canonical right-coset representative of V g:  peeling coordinates in
/// canonical root order and killing exactly the V-coordinates leaves the
/// unique coset element supported on the complement positions.
template <class Ops>
typename Ops::Mat straighten(const Ops& ops, const FieldSpec& F, const RootSet& ambient,
                             const RootSet& v_roots, typename Ops::Mat m) {
    for (Root r : ambient) {
        if (!v_roots.contains(r)) continue;
        const int c = ops.entry(m, r.i, r.j + 1);
        if (c != 0) ops.left_mult_root(m, r, F.neg(c));
    }
    return m;
}

template <class Ops>
std::uint64_t coset_label(const Ops& ops, int q, const std::vector<Root>& complement,
                          const typename Ops::Mat& canonical) {
    std::uint64_t label = 0, weight = 1;
    for (Root r : complement) {
        label += weight * static_cast<std::uint64_t>(ops.entry(canonical, r.i, r.j + 1));
        weight *= static_cast<std::uint64_t>(q);
    }
    return label;
}

/// The canonical coset element is supported exactly on the complement
/// positions, so it is written entry by entry.
inline UTMat coset_rep(int n, int q, const std::vector<Root>& complement, std::uint64_t label) {
    UTMat m = UTMat::identity(n);
    for (Root r : complement) {
        const int c = static_cast<int>(label % static_cast<std::uint64_t>(q));
        label /= static_cast<std::uint64_t>(q);
        m.at(r.i, r.j + 1) = static_cast<std::uint8_t>(c);
    }
    return m;
}

struct DisjointSets {
    std::vector<std::uint32_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Nilpotent part of m as a GF(q) coordinate vector over the ambient positions.
inline std::vector<int> nilpotent_coords(const UTMat& m) {
    std::vector<int> out;
    out.reserve(m.e.size());
    for (std::uint8_t v : m.e) out.push_back(v);
    return out;
}

/// Zassenhaus intersection of two spanned subspaces of GF(q)^dim.
inline std::vector<std::vector<int>> intersect_spans(const FieldSpec& F,
                                                     const std::vector<std::vector<int>>& a,
                                                     const std::vector<std::vector<int>>& b) {
    const std::size_t dim = a.empty() ? (b.empty() ? 0 : b[0].size()) : a[0].size();
    std::vector<std::vector<int>> rows;
    for (const auto& u : a) {
        std::vector<int> row(2 * dim);
        std::copy(u.begin(), u.end(), row.begin());
        std::copy(u.begin(), u.end(), row.begin() + static_cast<std::ptrdiff_t>(dim));
        rows.push_back(std::move(row));
    }
    for (const auto& w : b) {
        std::vector<int> row(2 * dim, 0);
        std::copy(w.begin(), w.end(), row.begin());
        rows.push_back(std::move(row));
    }
    // row echelon over GF(q)
    std::size_t r = 0;
    for (std::size_t col = 0; col < 2 * dim && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const int inv = F.inv(rows[r][col]);
        for (auto& v : rows[r]) v = F.mul(v, inv);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == r || rows[other][col] == 0) continue;
            const int f = rows[other][col];
            for (std::size_t cc = col; cc < 2 * dim; ++cc)
                rows[other][cc] = F.sub(rows[other][cc], F.mul(f, rows[r][cc]));
        }
        ++r;
    }
    std::vector<std::vector<int>> out;
    for (const auto& row : rows) {
        bool left_zero = true;
        for (std::size_t c = 0; c < dim; ++c)
            if (row[c] != 0) {
                left_zero = false;
                break;
            }
        bool right_zero = true;
        for (std::size_t c = dim; c < 2 * dim; ++c)
            if (row[c] != 0) {
                right_zero = false;
                break;
            }
        if (left_zero && !right_zero)
            out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(dim), row.end());
    }
    return out;
}

inline UTMat unipotent_from_coords(int n, const std::vector<int>& coords) {
    UTMat m = UTMat::identity(n);
    for (std::size_t t = 0; t < coords.size(); ++t) m.e[t] = static_cast<std::uint8_t>(coords[t]);
    return m;
}

}  // namespace detail

/// <lambda_D^G, lambda_{D'}^G> by the double-coset sum.  Each summand is 1
/// exactly when the two linear characters agree on V_D^x intersect V_{D'},
/// which (both being entry-linear) reduces to a GF(p)-basis test on the
/// intersection algebra.
inline Bigint mackey_inner(const GroupHandle& g, const BasicData& b1, const BasicData& b2,
                           const Caps& caps = default_caps()) {
    const int n = g.n(), q = g.q();
    const FieldSpec& F = FieldSpec::get(q);
    if (b1.symbol.n() != n || b1.symbol.q() != q || b2.symbol.n() != n || b2.symbol.q() != q)
        throw ValidationError("basic data ambient does not match the group");

    const RootSet v1 = base_group_roots(n, b1.symbol.root_set());
    const RootSet v2 = base_group_roots(n, b2.symbol.root_set());
    const RootSet complement_set = g.roots().set_minus(v1);
    const std::vector<Root> complement(complement_set.begin(), complement_set.end());

    std::uint64_t cosets = 1;
    for (std::size_t t = 0; t < complement.size(); ++t) {
        cosets *= static_cast<std::uint64_t>(q);
        if (cosets > caps.cosets)
            throw CapExceeded("index |G : V_D| exceeds the coset cap");
    }

    const GenericOps ops(n, F);

    // right cosets of V_{D1}: labels are exactly the complement coordinate
    // tuples; glue them into V_{D1} x V_{D2} double cosets
    detail::DisjointSets dsu(cosets);
    std::vector<UTMat> gen2;
    for (Root r : generator_roots(v2))
        for (int b : field_basis(F)) gen2.push_back(ops.root_elem(r, b));
    for (std::uint64_t label = 0; label < cosets; ++label) {
        const UTMat rep = detail::coset_rep(n, q, complement, label);
        for (const UTMat& s : gen2) {
            const UTMat moved = detail::straighten(ops, F, g.roots(), v1, ops.mul(rep, s));
            dsu.unite(static_cast<std::uint32_t>(label),
                      static_cast<std::uint32_t>(detail::coset_label(ops, q, complement, moved)));
        }
    }

    // V_{D2} as a coordinate subspace, once
    std::vector<std::vector<int>> m2basis;
    for (Root r : v2)
        m2basis.push_back(detail::nilpotent_coords(ops.root_elem(r, 1)));

    Bigint norm = 0;
    for (std::uint64_t label = 0; label < cosets; ++label) {
        if (dsu.find(static_cast<std::uint32_t>(label)) != label) continue;
        const UTMat x = detail::coset_rep(n, q, complement, label);
        const UTMat xinv = ops.inv(x);

        std::vector<std::vector<int>> conj_basis;
        for (Root r : v1)
            conj_basis.push_back(
                detail::nilpotent_coords(ops.mul(ops.mul(xinv, ops.root_elem(r, 1)), x)));
        const auto w_basis = detail::intersect_spans(F, conj_basis, m2basis);

        bool all_trivial = true;
        for (const auto& w : w_basis) {
            const UTMat gmat = detail::unipotent_from_coords(n, w);
            const Cyclo lhs =
                lambda_value(F, b1.symbol.factors(), ops.mul(ops.mul(x, gmat), xinv));
            const Cyclo rhs = lambda_value(F, b2.symbol.factors(), gmat);
            if (!(lhs == rhs)) {
                all_trivial = false;
                break;
            }
        }
        if (all_trivial) norm += 1;
    }
    return norm;
}

}  // namespace utq
