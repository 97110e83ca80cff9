#pragma once

// Exact irreducible character tables of enumerable pattern groups.  The class
// matrices act on the vectors of normalized class sums; their simultaneous
// eigenvectors over a prime field GF(l), l = 1 mod conductor and l > 2*sqrt|G|,
// determine every irreducible character.  Eigenvalues lift to cyclotomic
// values through the power maps of class representatives and a discrete
// Fourier inversion mod l.

#include <algorithm>
#include <cmath>

#include "utq/classfun.hpp"

namespace utq {

namespace modl {

inline std::int64_t mulm(std::int64_t a, std::int64_t b, std::int64_t l) { return (a * b) % l; }

inline std::int64_t powm(std::int64_t a, std::int64_t e, std::int64_t l) {
    std::int64_t r = 1 % l;
    a %= l;
    while (e > 0) {
        if (e & 1) r = mulm(r, a, l);
        a = mulm(a, a, l);
        e >>= 1;
    }
    return r;
}

inline std::int64_t invm(std::int64_t a, std::int64_t l) { return powm((a % l + l) % l, l - 2, l); }

inline bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t v) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(v);
    return out;
}

/// Smallest prime l = 1 (mod m) with l > bound.
inline std::int64_t find_prime(std::int64_t m, std::int64_t bound) {
    std::int64_t l = ((bound / m) + 1) * m + 1;
    while (!is_prime(l)) l += m;
    return l;
}

/// An element of order exactly m in GF(l)*.
inline std::int64_t order_m_element(std::int64_t m, std::int64_t l) {
    const auto factors = prime_factors(l - 1);
    for (std::int64_t g = 2; g < l; ++g) {
        bool primitive = true;
        for (std::int64_t pf : factors)
            if (powm(g, (l - 1) / pf, l) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return powm(g, (l - 1) / m, l);
    }
    throw Error("no generator found mod l");
}

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& a, std::int64_t l) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col] % l == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        const std::int64_t inv = invm(a[row][col], l);
        for (std::size_t c = col; c < cols; ++c) a[row][c] = mulm(a[row][c], inv, l);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const std::int64_t f = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = ((a[r][c] - mulm(f, a[row][c], l)) % l + l) % l;
        }
        pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    return pivots;
}

/// Basis of the right nullspace of a (rows are vectors).
inline Mat nullspace(Mat a, std::int64_t l) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    const auto pivots = rref(a, l);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Mat out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (l - a[r][free]) % l;
        out.push_back(std::move(v));
    }
    return out;
}

/// Characteristic polynomial via Hessenberg reduction, coefficients low-first.
inline Vec char_poly(Mat h, std::int64_t l) {
    const std::size_t d = h.size();
    // similarity reduction to upper Hessenberg
    for (std::size_t col = 0; col + 2 < d; ++col) {
        std::size_t sel = col + 1;
        while (sel < d && h[sel][col] == 0) ++sel;
        if (sel == d) continue;
        if (sel != col + 1) {
            std::swap(h[sel], h[col + 1]);
            for (std::size_t r = 0; r < d; ++r) std::swap(h[r][sel], h[r][col + 1]);
        }
        const std::int64_t inv = invm(h[col + 1][col], l);
        for (std::size_t row = col + 2; row < d; ++row) {
            if (h[row][col] == 0) continue;
            const std::int64_t f = mulm(h[row][col], inv, l);
            for (std::size_t c = 0; c < d; ++c)
                h[row][c] = ((h[row][c] - mulm(f, h[col + 1][c], l)) % l + l) % l;
            for (std::size_t r = 0; r < d; ++r)
                h[r][col + 1] = (h[r][col + 1] + mulm(f, h[r][row], l)) % l;
        }
    }
    // p_m(x) = (x - H[m-1][m-1]) p_{m-1}(x)
    //          - sum_k H[k-1][m-1] (prod_{j=k}^{m-1} H[j][j-1]) p_{k-1}(x)
    std::vector<Vec> p(d + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= d; ++m) {
        Vec cur(m + 1, 0);
        const std::int64_t diag = h[m - 1][m - 1] % l;
        for (std::size_t t = 0; t < p[m - 1].size(); ++t) {
            cur[t + 1] = (cur[t + 1] + p[m - 1][t]) % l;
            cur[t] = ((cur[t] - mulm(diag, p[m - 1][t], l)) % l + l) % l;
        }
        std::int64_t subprod = 1;
        for (std::size_t k = m - 1; k >= 1; --k) {
            subprod = mulm(subprod, h[k][k - 1], l);
            if (subprod == 0) break;
            const std::int64_t coeff = mulm(h[k - 1][m - 1], subprod, l);
            if (coeff == 0) continue;
            for (std::size_t t = 0; t < p[k - 1].size(); ++t)
                cur[t] = ((cur[t] - mulm(coeff, p[k - 1][t], l)) % l + l) % l;
        }
        p[m] = std::move(cur);
    }
    return p[d];
}

inline std::int64_t eval_poly(const Vec& p, std::int64_t x, std::int64_t l) {
    std::int64_t acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = (mulm(acc, x, l) + *it) % l;
    return acc;
}

}  // namespace modl

struct CharTable {
    ClassDataPtr classes;
    int conductor = 1;
    std::vector<ClassFunction> irreducibles;  // sorted by (degree, values)

    std::size_t count() const { return irreducibles.size(); }
};

/// Longest composable chain of roots; bounds the nilpotency degree.
inline int longest_root_chain(const RootSet& s) {
    std::map<Root, int> memo;
    const auto chain = [&](auto&& self, Root r) -> int {
        if (auto it = memo.find(r); it != memo.end()) return it->second;
        int best = 1;
        for (Root t : s)
            if (t.i == r.j + 1) best = std::max(best, 1 + self(self, t));
        memo[r] = best;
        return best;
    };
    int best = 0;
    for (Root r : s) best = std::max(best, chain(chain, r));
    return best;
}

/// Exponent of the pattern group: p^(ceil log_p (longest chain + 1)).
inline int group_conductor(const GroupHandle& g) {
    const int p = FieldSpec::get(g.q()).p();
    const int need = longest_root_chain(g.roots()) + 1;
    int m = 1;
    while (m < need) m *= p;
    return m;
}

namespace detail {

template <class Ops>
struct DixonContext {
    const Ops& ops;
    const ClassData& cd;
    std::int64_t l;
    std::vector<std::vector<std::uint32_t>> members;   // class -> element indices
    std::vector<typename Ops::Mat> reps;               // class -> representative matrix
    std::vector<std::size_t> inv_class;                // class of rep^{-1}
    std::vector<std::vector<std::size_t>> pow_class;   // class of rep^s, s in [0, m)

    DixonContext(const Ops& o, const ClassData& c, std::int64_t lp, int m) : ops(o), cd(c), l(lp) {
        const GroupHandle& g = cd.group;
        members.resize(cd.count());
        for (std::size_t t = 0; t < cd.class_of.size(); ++t)
            members[cd.class_of[t]].push_back(static_cast<std::uint32_t>(t));
        reps.resize(cd.count());
        inv_class.resize(cd.count());
        pow_class.assign(cd.count(), std::vector<std::size_t>(static_cast<std::size_t>(m)));
        for (std::size_t c = 0; c < cd.count(); ++c) {
            reps[c] = element_of_index(ops, g, cd.reps[c]);
            inv_class[c] = cd.class_of[*index_of_element(ops, g, ops.inv(reps[c]))];
            typename Ops::Mat acc = ops.identity();
            for (int s = 0; s < m; ++s) {
                pow_class[c][static_cast<std::size_t>(s)] = cd.class_of[*index_of_element(ops, g, acc)];
                acc = ops.mul(acc, reps[c]);
            }
        }
    }

    /// A_i[j][t] = #{x in C_i : x^{-1} z_t in C_j}; class-sum vectors are
    /// right eigenvectors of every A_i.
    modl::Mat class_matrix(std::size_t i) const {
        const GroupHandle& g = cd.group;
        const std::size_t k = cd.count();
        std::vector<typename Ops::Mat> xinvs;
        xinvs.reserve(members[i].size());
        for (std::uint32_t x : members[i])
            xinvs.push_back(ops.inv(element_of_index(ops, g, x)));
        modl::Mat a(k, modl::Vec(k, 0));
        for (std::size_t t = 0; t < k; ++t)
            for (const auto& xi : xinvs) {
                const auto y = index_of_element(ops, g, ops.mul(xi, reps[t]));
                a[cd.class_of[*y]][t] += 1;
            }
        for (auto& row : a)
            for (auto& v : row) v %= l;
        return a;
    }
};

template <class Ops>
std::vector<modl::Vec> common_eigenvectors(const DixonContext<Ops>& ctx) {
    const std::size_t k = ctx.cd.count();
    const std::int64_t l = ctx.l;

    struct Space {
        modl::Mat basis;                  // rows, reduced echelon
        std::vector<std::size_t> pivots;
    };
    std::vector<Space> done;
    std::vector<Space> todo;
    {
        modl::Mat id(k, modl::Vec(k, 0));
        for (std::size_t t = 0; t < k; ++t) id[t][t] = 1;
        Space all{std::move(id), {}};
        for (std::size_t t = 0; t < k; ++t) all.pivots.push_back(t);
        todo.push_back(std::move(all));
    }

    // cheap class matrices first
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < k; ++c)
        if (ctx.cd.reps[c] != 0) order.push_back(c);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ctx.cd.sizes[a] != ctx.cd.sizes[b]) return ctx.cd.sizes[a] < ctx.cd.sizes[b];
        return ctx.cd.reps[a] < ctx.cd.reps[b];
    });

    for (std::size_t oi = 0; oi < order.size() && !todo.empty(); ++oi) {
        const modl::Mat a = ctx.class_matrix(order[oi]);
        std::vector<Space> next;
        for (Space& sp : todo) {
            const std::size_t d = sp.basis.size();
            // restriction r: a * basis_t = sum_s r[s][t] basis_s
            modl::Mat r(d, modl::Vec(d, 0));
            for (std::size_t t = 0; t < d; ++t) {
                modl::Vec w(k, 0);
                for (std::size_t j = 0; j < k; ++j) {
                    std::int64_t acc = 0;
                    for (std::size_t c = 0; c < k; ++c)
                        if (sp.basis[t][c] != 0) acc = (acc + modl::mulm(a[j][c], sp.basis[t][c], l)) % l;
                    w[j] = acc;
                }
                for (std::size_t s = 0; s < d; ++s) r[s][t] = w[sp.pivots[s]];
                // invariance: w must equal sum r[s][t] basis_s (commuting class algebra)
                for (std::size_t j = 0; j < k; ++j) {
                    std::int64_t acc = 0;
                    for (std::size_t s = 0; s < d; ++s)
                        acc = (acc + modl::mulm(r[s][t], sp.basis[s][j], l)) % l;
                    if (acc != w[j]) throw Error("class-matrix restriction left the subspace; bug");
                }
            }
            const modl::Vec cp = modl::char_poly(r, l);
            std::vector<std::int64_t> eigen;
            for (std::int64_t x = 0; x < l; ++x)
                if (modl::eval_poly(cp, x, l) == 0) eigen.push_back(x);
            if (eigen.size() <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            std::size_t covered = 0;
            for (std::int64_t lambda : eigen) {
                modl::Mat shifted = r;
                for (std::size_t t = 0; t < d; ++t)
                    shifted[t][t] = ((shifted[t][t] - lambda) % l + l) % l;
                modl::Mat local = modl::nullspace(std::move(shifted), l);
                if (local.empty()) continue;
                covered += local.size();
                modl::Mat global(local.size(), modl::Vec(k, 0));
                for (std::size_t r2 = 0; r2 < local.size(); ++r2)
                    for (std::size_t s = 0; s < d; ++s)
                        if (local[r2][s] != 0)
                            for (std::size_t c = 0; c < k; ++c)
                                global[r2][c] =
                                    (global[r2][c] + modl::mulm(local[r2][s], sp.basis[s][c], l)) % l;
                Space ns;
                ns.pivots = modl::rref(global, l);
                ns.basis = std::move(global);
                (ns.basis.size() == 1 ? done : next).push_back(std::move(ns));
            }
            if (covered != d) throw Error("eigen decomposition did not cover the subspace; bug");
        }
        todo = std::move(next);
    }
    if (!todo.empty()) throw Error("class matrices exhausted before the splitting finished; bug");

    std::vector<modl::Vec> out;
    for (Space& sp : done) out.push_back(std::move(sp.basis[0]));
    return out;
}

template <class Ops>
CharTable irr_table_impl(const Ops& ops, const ClassDataPtr& cd) {
    const GroupHandle& g = cd->group;
    const int m = group_conductor(g);
    CharTable table;
    table.classes = cd;
    table.conductor = m;

    if (g.order() == 1) {
        table.irreducibles.push_back(ClassFunction::trivial(cd));
        return table;
    }

    const std::int64_t order_ll = static_cast<std::int64_t>(g.order_u64());
    const std::int64_t bound = static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(order_ll))) + 1;
    const std::int64_t l = modl::find_prime(m, std::max<std::int64_t>(bound, m));
    const std::int64_t z = modl::order_m_element(m, l);

    DixonContext<Ops> ctx(ops, *cd, l, m);
    const std::size_t k = cd->count();
    auto vectors = common_eigenvectors(ctx);
    if (vectors.size() != k) throw Error("eigenvector count differs from class count; bug");

    std::vector<std::int64_t> size_inv(k), zpow(static_cast<std::size_t>(m));
    for (std::size_t t = 0; t < k; ++t)
        size_inv[t] = modl::invm(static_cast<std::int64_t>(cd->sizes[t] % static_cast<std::uint64_t>(l)), l);
    for (int s = 0; s < m; ++s) zpow[static_cast<std::size_t>(s)] = modl::powm(z, s, l);
    const std::int64_t m_inv = modl::invm(m, l);

    Bigint degree_square_sum = 0;
    for (modl::Vec& v : vectors) {
        if (v[0] == 0) throw Error("eigenvector vanishes at the identity class; bug");
        const std::int64_t norm = modl::invm(v[0], l);
        for (auto& x : v) x = modl::mulm(x, norm, l);

        std::int64_t denom = 0;
        for (std::size_t t = 0; t < k; ++t)
            denom = (denom + modl::mulm(modl::mulm(v[t], v[ctx.inv_class[t]], l), size_inv[t], l)) % l;
        const std::int64_t d2 = modl::mulm(order_ll % l, modl::invm(denom, l), l);
        std::int64_t degree = 0;
        for (std::int64_t c = 1; 2 * c < l; ++c)
            if (modl::mulm(c, c, l) == d2) {
                degree = c;
                break;
            }
        if (degree == 0) throw Error("no degree square root mod l; bug");
        degree_square_sum += Bigint(degree) * Bigint(degree);

        modl::Vec chat(k);
        for (std::size_t t = 0; t < k; ++t)
            chat[t] = modl::mulm(modl::mulm(degree, v[t], l), size_inv[t], l);

        std::vector<Cyclo> values(k);
        for (std::size_t t = 0; t < k; ++t) {
            Cyclo val = Cyclo::zero(m);
            for (int j = 0; j < m; ++j) {
                std::int64_t acc = 0;
                for (int s = 0; s < m; ++s) {
                    const std::int64_t zji =
                        modl::invm(zpow[static_cast<std::size_t>((j * s) % m)], l);
                    acc = (acc + modl::mulm(chat[ctx.pow_class[t][static_cast<std::size_t>(s)]], zji, l)) % l;
                }
                const std::int64_t mult = modl::mulm(acc, m_inv, l);
                if (mult > degree)
                    throw Error("lifted eigenvalue multiplicity exceeds the degree; bug");
                if (mult != 0) val += Rat(mult) * Cyclo::root_of_unity(m, j);
            }
            values[t] = val;
        }
        if (!(values[0] == Cyclo::from_rational(Rat(degree), m)))
            throw Error("lifted degree disagrees with the identity value; bug");
        table.irreducibles.emplace_back(cd, std::move(values));
    }

    if (degree_square_sum != g.order())
        throw Error("sum of squared degrees differs from the group order; bug");

    std::sort(table.irreducibles.begin(), table.irreducibles.end(),
              [](const ClassFunction& a, const ClassFunction& b) {
                  const Bigint da = a.degree_int(), db = b.degree_int();
                  if (da != db) return da < db;
                  for (std::size_t t = 0; t < a.values().size(); ++t) {
                      const int c = Cyclo::compare(a.values()[t], b.values()[t]);
                      if (c != 0) return c < 0;
                  }
                  return false;
              });
    return table;
}

}  // namespace detail

inline CharTable irr_table(const ClassDataPtr& cd, const Caps& caps = default_caps()) {
    const GroupHandle& g = cd->group;
    if (!g.enumerable(caps.char_table))
        throw CapExceeded("group order " + g.order().str() + " exceeds the character-table cap");
    if (g.q() == 2) return detail::irr_table_impl(Gf2Ops(g.n()), cd);
    return detail::irr_table_impl(GenericOps(g.n(), FieldSpec::get(g.q())), cd);
}

inline CharTable irr_table(const GroupHandle& g, const Caps& caps = default_caps()) {
    if (!g.enumerable(caps.char_table))
        throw CapExceeded("group order " + g.order().str() + " exceeds the character-table cap");
    return irr_table(make_class_data(g, caps), caps);
}

}  // namespace utq
