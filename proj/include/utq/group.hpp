#pragma once

// Concrete pattern subgroups of U_n(q): a handle names a closed root set; the
// product of root elements over the handle's roots in canonical order is a
// bijective normal form, which drives the index <-> element coordinates, the
// membership test, conjugacy classes and homomorphism checks.

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "utq/matrix.hpp"

namespace utq {

struct NotClosedError : ValidationError {
    Root a, b;
    NotClosedError(Root x, Root y)
        : ValidationError("root set not closed: " + to_string(x) + " + " + to_string(y) + " = " +
                          to_string(root_sum(x, y)) + " is missing"),
          a(x),
          b(y) {}
};

class GroupHandle {
public:
    GroupHandle() = default;
    GroupHandle(int n, int q, RootSet roots) : n_(n), q_(q), roots_(std::move(roots)) {
        FieldSpec::get(q_);
        if (auto bad = roots_.closure_violation())
            throw NotClosedError(bad->first, bad->second);
        order_ = 1;
        for (std::size_t t = 0; t < roots_.size(); ++t) order_ *= q_;
    }

    int n() const { return n_; }
    int q() const { return q_; }
    const RootSet& roots() const { return roots_; }
    const Bigint& order() const { return order_; }

    bool enumerable(std::uint64_t cap) const { return order_ <= cap; }
    std::uint64_t order_u64() const {
        if (order_ > Bigint(UINT64_MAX)) throw CapExceeded("group order exceeds 64 bits");
        return static_cast<std::uint64_t>(order_);
    }

    bool is_subgroup_of(const GroupHandle& g) const {
        if (n_ != g.n_ || q_ != g.q_) return false;
        for (Root r : roots_)
            if (!g.roots().contains(r)) return false;
        return true;
    }

    /// Membership: the support of m lies inside the handle's roots.
    bool member(const UTMat& m) const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (m.at(i, j) != 0 && !roots_.contains(Root{i, j - 1})) return false;
        return true;
    }

    friend bool operator==(const GroupHandle&, const GroupHandle&) = default;

private:
    int n_ = 0;
    int q_ = 2;
    RootSet roots_;
    Bigint order_ = 1;
};

/// The full group U_n(q).
inline GroupHandle full_group(int n, int q) { return GroupHandle(n, q, positive_roots(n)); }

inline GroupHandle subgroup_from_roots(int n, int q, const RootSet& s) {
    return GroupHandle(n, q, s);
}

// ---------------------------------------------------------------------------
// index <-> element coordinates

template <class Ops>
typename Ops::Mat element_of_index(const Ops& ops, const GroupHandle& g, std::uint64_t idx) {
    typename Ops::Mat m = ops.identity();
    const std::uint64_t q = static_cast<std::uint64_t>(g.q());
    for (Root r : g.roots()) {
        const int c = static_cast<int>(idx % q);
        idx /= q;
        ops.right_mult_root(m, r, c);
    }
    return m;
}

/// Peels normal-form coordinates in canonical root order; nullopt when the
/// residual fails to empty (the matrix is not a member).
template <class Ops>
std::optional<std::uint64_t> index_of_element(const Ops& ops, const GroupHandle& g,
                                              typename Ops::Mat m) {
    const int q = g.q();
    const FieldSpec& F = FieldSpec::get(q);
    std::uint64_t idx = 0;
    std::uint64_t weight = 1;
    for (Root r : g.roots()) {
        const int c = ops.entry(m, r.i, r.j + 1);
        if (c != 0) ops.left_mult_root(m, r, F.neg(c));
        idx += weight * static_cast<std::uint64_t>(c);
        weight *= static_cast<std::uint64_t>(q);
    }
    if (!(m == ops.identity())) return std::nullopt;
    return idx;
}

inline UTMat element_matrix(const GroupHandle& g, std::uint64_t idx) {
    if (g.q() == 2) return to_generic(element_of_index(Gf2Ops(g.n()), g, idx));
    return element_of_index(GenericOps(g.n(), FieldSpec::get(g.q())), g, idx);
}

inline std::optional<std::uint64_t> element_index(const GroupHandle& g, const UTMat& m) {
    if (g.q() == 2) return index_of_element(Gf2Ops(g.n()), g, to_packed(m));
    return index_of_element(GenericOps(g.n(), FieldSpec::get(g.q())), g, m);
}

// ---------------------------------------------------------------------------
// generators

/// Roots of s that are not sums of two members; the corresponding root
/// subgroups generate the pattern group.
inline std::vector<Root> generator_roots(const RootSet& s) {
    std::vector<Root> out;
    for (Root r : s) {
        bool decomposes = false;
        for (Root a : s) {
            if (a.i == r.i && a.j < r.j && s.contains(Root{a.j + 1, r.j})) {
                decomposes = true;
                break;
            }
        }
        if (!decomposes) out.push_back(r);
    }
    return out;
}

/// A GF(p)-basis of GF(q) as field codes (1, x, x^2, ...).
inline std::vector<int> field_basis(const FieldSpec& F) {
    std::vector<int> out;
    int v = 1;
    for (int t = 0; t < F.ext_degree(); ++t) {
        out.push_back(v);
        v *= F.p();  // code of x^t in base-p digit encoding
    }
    return out;
}

// ---------------------------------------------------------------------------
// conjugacy classes

struct ClassData {
    GroupHandle group;
    std::vector<std::uint64_t> reps;      // minimal element index per class
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> class_of;  // element index -> class index

    std::size_t count() const { return reps.size(); }
};

namespace detail {

template <class Ops>
ClassData conjugacy_classes_impl(const Ops& ops, const GroupHandle& g) {
    const std::uint64_t order = g.order_u64();
    const FieldSpec& F = FieldSpec::get(g.q());

    std::vector<typename Ops::Mat> gens, gen_invs;
    for (Root r : generator_roots(g.roots()))
        for (int b : field_basis(F)) {
            gens.push_back(ops.root_elem(r, b));
            gen_invs.push_back(ops.inv(gens.back()));
        }

    ClassData out;
    out.group = g;
    out.class_of.assign(order, UINT32_MAX);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t seed = 0; seed < order; ++seed) {
        if (out.class_of[seed] != UINT32_MAX) continue;
        const std::uint32_t cls = static_cast<std::uint32_t>(out.reps.size());
        out.reps.push_back(seed);
        out.class_of[seed] = cls;
        queue.assign(1, seed);
        std::uint64_t size = 1;
        while (!queue.empty()) {
            const std::uint64_t cur = queue.back();
            queue.pop_back();
            const typename Ops::Mat m = element_of_index(ops, g, cur);
            for (std::size_t t = 0; t < gens.size(); ++t) {
                const typename Ops::Mat c = ops.mul(ops.mul(gen_invs[t], m), gens[t]);
                const auto idx = index_of_element(ops, g, c);
                if (!idx) throw Error("conjugate left the group; handle roots not closed?");
                if (out.class_of[*idx] == UINT32_MAX) {
                    out.class_of[*idx] = cls;
                    queue.push_back(*idx);
                    ++size;
                }
            }
        }
        out.sizes.push_back(size);
    }
    return out;
}

}  // namespace detail

inline ClassData conjugacy_classes(const GroupHandle& g, const Caps& caps = default_caps()) {
    if (!g.enumerable(caps.enumeration))
        throw CapExceeded("group of order " + g.order().str() + " exceeds the enumeration cap");
    if (g.q() == 2) return detail::conjugacy_classes_impl(Gf2Ops(g.n()), g);
    return detail::conjugacy_classes_impl(GenericOps(g.n(), FieldSpec::get(g.q())), g);
}

// ---------------------------------------------------------------------------
// homomorphism verification

struct HomCheck {
    bool bijective = false;
    bool multiplicative = false;
};

/// Extends the root map phi to elements through the normal form and verifies
/// multiplicativity: on all pairs when the pair count is small, otherwise on
/// all elements against every generator (which suffices, by induction on the
/// generator word length of the second factor).
inline HomCheck verify_homomorphism(const std::map<Root, Root>& phi, const GroupHandle& dom,
                                    const GroupHandle& cod,
                                    std::uint64_t pair_cap = (std::uint64_t{1} << 20)) {
    for (Root r : dom.roots())
        if (!phi.count(r)) throw ValidationError("generator image undefined at root " + to_string(r));
    const std::uint64_t order = dom.order_u64();
    const FieldSpec& F = FieldSpec::get(dom.q());
    const GenericOps dops(dom.n(), F), cops(cod.n(), F);

    const auto image_of = [&](std::uint64_t idx) {
        UTMat img = cops.identity();
        std::uint64_t rest = idx;
        for (Root r : dom.roots()) {
            const int c = static_cast<int>(rest % static_cast<std::uint64_t>(dom.q()));
            rest /= static_cast<std::uint64_t>(dom.q());
            cops.right_mult_root(img, phi.at(r), c);
        }
        return img;
    };

    std::vector<UTMat> image(order);
    for (std::uint64_t t = 0; t < order; ++t) image[t] = image_of(t);

    HomCheck out;
    // bijective onto cod: equal orders plus pairwise distinct member images
    out.bijective = (dom.order() == cod.order());
    if (out.bijective) {
        std::vector<bool> seen(cod.order_u64(), false);
        for (const UTMat& m : image) {
            const auto idx = element_index(cod, m);
            if (!idx || seen[*idx]) {
                out.bijective = false;
                break;
            }
            seen[*idx] = true;
        }
    }

    const auto mul_in_dom = [&](std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t> {
        const UTMat prod = dops.mul(element_matrix(dom, a), element_matrix(dom, b));
        return element_index(dom, prod);
    };

    out.multiplicative = true;
    if (order * order <= pair_cap) {
        for (std::uint64_t a = 0; a < order && out.multiplicative; ++a)
            for (std::uint64_t b = 0; b < order; ++b) {
                const auto ab = mul_in_dom(a, b);
                if (!ab || !(image[*ab] == cops.mul(image[a], image[b]))) {
                    out.multiplicative = false;
                    break;
                }
            }
    } else {
        std::vector<std::uint64_t> gen_idx;
        for (Root r : generator_roots(dom.roots()))
            for (int b : field_basis(F)) {
                const auto idx = element_index(dom, dops.root_elem(r, b));
                gen_idx.push_back(*idx);
            }
        for (std::uint64_t a = 0; a < order && out.multiplicative; ++a)
            for (std::uint64_t s : gen_idx) {
                const auto as = mul_in_dom(a, s);
                if (!as || !(image[*as] == cops.mul(image[a], image[s]))) {
                    out.multiplicative = false;
                    break;
                }
            }
    }
    return out;
}

/// Brute-force center of an enumerable group (for cross-checks).
inline std::vector<std::uint64_t> center_elements(const GroupHandle& g,
                                                  const Caps& caps = default_caps()) {
    if (!g.enumerable(caps.enumeration)) throw CapExceeded("center: group too large");
    const FieldSpec& F = FieldSpec::get(g.q());
    const GenericOps ops(g.n(), F);
    std::vector<UTMat> gens;
    for (Root r : generator_roots(g.roots()))
        for (int b : field_basis(F)) gens.push_back(ops.root_elem(r, b));
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < g.order_u64(); ++t) {
        const UTMat m = element_matrix(g, t);
        bool central = true;
        for (const UTMat& x : gens)
            if (!(ops.mul(m, x) == ops.mul(x, m))) {
                central = false;
                break;
            }
        if (central) out.push_back(t);
    }
    return out;
}

}  // namespace utq
