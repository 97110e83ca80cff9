#pragma once

// Symbolic algebra of elementary and basic characters.  A basic symbol is a
// set of (root, nonzero parameter) factors with pairwise separate roots; a
// tensor product of two symbols is normalized by rewriting the smallest
// non-separate factor pair until every pair is separate.  Rewrites:
//
//   same column   (b in leg(a)):  a (x) [1 + sum_{g in arm(b), u != 0} (g,u)]
//   same row      (b in arm(a)):  a (x) [1 + sum_{g in leg(b), u != 0} (g,u)]
//   equal root, s+t != 0:         (a,s+t) (x) [1 + sum_{g in arm(a), u != 0} (g,u)]
//   equal root, s+t  = 0:         sum over xs1 in {1} u arm terms, xs2 in {1} u leg
//                                 terms of xs1 (x) xs2
//
// Each rewrite strictly lowers the multiset of factor heights, so the loop
// terminates; the empty factor set stands for the trivial character.

#include <map>
#include <vector>

#include "utq/field.hpp"
#include "utq/poly.hpp"
#include "utq/roots.hpp"

namespace utq {

struct ElemFactor {
    Root root;
    int param = 1;  // nonzero element of GF(q)

    friend bool operator==(const ElemFactor&, const ElemFactor&) = default;
    // canonical factor order: by (j, i), then parameter
    friend bool operator<(const ElemFactor& a, const ElemFactor& b) {
        if (a.root.j != b.root.j) return a.root.j < b.root.j;
        if (a.root.i != b.root.i) return a.root.i < b.root.i;
        return a.param < b.param;
    }
};

using FactorList = std::vector<ElemFactor>;  // kept sorted

inline bool factors_separate(const ElemFactor& a, const ElemFactor& b) {
    return a.root.i != b.root.i && a.root.j != b.root.j;
}

class BasicSymbol {
public:
    BasicSymbol() = default;
    /// Validates bounds, nonzero parameters and pairwise separateness; an
    /// empty factor list is the trivial character.
    BasicSymbol(int n, int q, FactorList factors) : n_(n), q_(q), factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        for (const auto& f : factors_) {
            check_root(n_, f.root);
            if (f.param <= 0 || f.param >= q_)
                throw ValidationError("factor parameter must be a nonzero element of GF(q)");
        }
        for (std::size_t s = 0; s < factors_.size(); ++s)
            for (std::size_t t = s + 1; t < factors_.size(); ++t)
                if (!factors_separate(factors_[s], factors_[t]))
                    throw ValidationError("factors at " + to_string(factors_[s].root) + " and " +
                                          to_string(factors_[t].root) + " are not separate");
    }

    int n() const { return n_; }
    int q() const { return q_; }
    const FactorList& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }

    RootSet root_set() const {
        RootSet out(n_);
        for (const auto& f : factors_) out.insert(f.root);
        return out;
    }

    friend bool operator==(const BasicSymbol&, const BasicSymbol&) = default;
    friend bool operator<(const BasicSymbol& a, const BasicSymbol& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.q_ != b.q_) return a.q_ < b.q_;
        return a.factors_ < b.factors_;
    }

private:
    int n_ = 0;
    int q_ = 2;
    FactorList factors_;
};

/// Sum of factor heights; the symbol's character has degree q^exponent.
inline int degree_exponent(const BasicSymbol& s) {
    int e = 0;
    for (const auto& f : s.factors()) e += height(f.root);
    return e;
}

inline BasicSymbol elementary(int n, int q, Root a, int t) {
    return BasicSymbol(n, q, {ElemFactor{a, t}});
}

/// Formal nonnegative-integer combination of basic symbols over one ambient (n, q).
class SuperExpr {
public:
    SuperExpr() = default;
    SuperExpr(int n, int q) : n_(n), q_(q) {}

    static SuperExpr trivial(int n, int q) {
        SuperExpr e(n, q);
        e.add(BasicSymbol(n, q, {}), 1);
        return e;
    }

    static SuperExpr of(const BasicSymbol& s, long long coeff = 1) {
        SuperExpr e(s.n(), s.q());
        e.add(s, coeff);
        return e;
    }

    int n() const { return n_; }
    int q() const { return q_; }
    const std::map<BasicSymbol, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const BasicSymbol& s, long long coeff) {
        if (s.n() != n_ || s.q() != q_)
            throw ValidationError("symbol ambient does not match expression ambient");
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(s, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SuperExpr& operator+=(const SuperExpr& o) {
        require_same_ambient(o);
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }

    friend bool operator==(const SuperExpr&, const SuperExpr&) = default;

    void require_same_ambient(const SuperExpr& o) const {
        if (n_ != o.n_ || q_ != o.q_)
            throw ValidationError("expressions live over different ambients (n, q)");
    }

private:
    int n_ = 0;
    int q_ = 2;
    std::map<BasicSymbol, long long> terms_;
};

/// sum coeff * q^exponent as an exact polynomial (evaluate at the ambient q
/// to compare actual character degrees).
inline PolyQ expr_total_degree(const SuperExpr& e) {
    PolyQ out;
    for (const auto& [s, c] : e.terms()) out += PolyQ::monomial(degree_exponent(s), Bigint(c));
    return out;
}

namespace detail {

/// Rewrites products of factor multisets into normal form, memoized on the
/// (sorted) multiset.  Reentrant via one engine per thread.
class TensorEngine {
public:
    TensorEngine(int n, int q) : n_(n), q_(q), F_(FieldSpec::get(q)) {}

    SuperExpr normalize(FactorList fs) {
        std::sort(fs.begin(), fs.end());
        return normalize_sorted(fs);
    }

private:
    SuperExpr normalize_sorted(const FactorList& fs) {
        if (auto it = memo_.find(fs); it != memo_.end()) return it->second;

        // smallest non-separate pair in canonical factor order
        std::size_t px = fs.size(), py = fs.size();
        for (std::size_t x = 0; x < fs.size() && px == fs.size(); ++x)
            for (std::size_t y = x + 1; y < fs.size(); ++y)
                if (!factors_separate(fs[x], fs[y])) {
                    px = x;
                    py = y;
                    break;
                }

        SuperExpr out(n_, q_);
        if (px == fs.size()) {
            out.add(BasicSymbol(n_, q_, fs), 1);
        } else {
            FactorList rest;
            for (std::size_t t = 0; t < fs.size(); ++t)
                if (t != px && t != py) rest.push_back(fs[t]);
            for (const FactorList& repl : rewrite_pair(fs[px], fs[py])) {
                FactorList next = rest;
                next.insert(next.end(), repl.begin(), repl.end());
                std::sort(next.begin(), next.end());
                out += normalize_sorted(next);
            }
        }
        memo_.emplace(fs, out);
        return out;
    }

    // The replacement lists for one non-separate pair; each list carries
    // an implicit coefficient 1.
    std::vector<FactorList> rewrite_pair(const ElemFactor& f, const ElemFactor& g) {
        std::vector<FactorList> out;
        if (f.root == g.root) {
            const int u = F_.add(f.param, g.param);
            const HookParts h = hook_parts(n_, f.root);
            if (u != 0) {
                out.push_back({ElemFactor{f.root, u}});
                for (Root gamma : h.arm)
                    for (int v = 1; v < q_; ++v)
                        out.push_back({ElemFactor{f.root, u}, ElemFactor{gamma, v}});
            } else {
                std::vector<FactorList> left{{}}, right{{}};
                for (Root b1 : h.arm)
                    for (int v = 1; v < q_; ++v) left.push_back({ElemFactor{b1, v}});
                for (Root b2 : h.leg)
                    for (int v = 1; v < q_; ++v) right.push_back({ElemFactor{b2, v}});
                for (const auto& l : left)
                    for (const auto& r : right) {
                        FactorList both = l;
                        both.insert(both.end(), r.begin(), r.end());
                        out.push_back(both);
                    }
            }
            return out;
        }
        // same row: the shorter root sits in the arm of the longer; the
        // longer factor survives with the leg expansion of the shorter.
        // Same column: arm expansion instead.
        const bool same_row = (f.root.i == g.root.i);
        const ElemFactor& keep = (height(f.root) > height(g.root)) ? f : g;
        const ElemFactor& drop = (height(f.root) > height(g.root)) ? g : f;
        const HookParts h = hook_parts(n_, drop.root);
        const RootSet& expansion = same_row ? h.leg : h.arm;
        out.push_back({keep});
        for (Root gamma : expansion)
            for (int v = 1; v < q_; ++v) out.push_back({keep, ElemFactor{gamma, v}});
        return out;
    }

    int n_, q_;
    const FieldSpec& F_;
    std::map<FactorList, SuperExpr> memo_;
};

inline TensorEngine& engine_for(int n, int q) {
    thread_local std::map<std::pair<int, int>, TensorEngine> engines;
    auto it = engines.find({n, q});
    if (it == engines.end()) it = engines.emplace(std::make_pair(n, q), TensorEngine(n, q)).first;
    return it->second;
}

}  // namespace detail

/// Product of two symbols in normal form.
inline SuperExpr tensor_symbols(const BasicSymbol& a, const BasicSymbol& b) {
    if (a.n() != b.n() || a.q() != b.q())
        throw ValidationError("symbols live over different ambients (n, q)");
    FactorList merged = a.factors();
    merged.insert(merged.end(), b.factors().begin(), b.factors().end());
    return detail::engine_for(a.n(), a.q()).normalize(std::move(merged));
}

/// Distributes over terms and normalizes every symbol pair.
inline SuperExpr tensor_normalize(const SuperExpr& e1, const SuperExpr& e2) {
    e1.require_same_ambient(e2);
    SuperExpr out(e1.n(), e1.q());
    for (const auto& [s1, c1] : e1.terms())
        for (const auto& [s2, c2] : e2.terms()) {
            SuperExpr prod = tensor_symbols(s1, s2);
            for (const auto& [s, c] : prod.terms()) out.add(s, c * c1 * c2);
        }
    return out;
}

}  // namespace utq
