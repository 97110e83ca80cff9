#pragma once

// Counting formulas for the numbers N_{n,e}(q) of irreducible characters of
// U_n(q) of degree q^e, for the three largest exponents e.  The third-highest
// recursion bottoms out in two values the closed forms do not cover, N_{5,2}
// and N_{6,4}; those enter as named seeds carried symbolically, with certified
// per-q values injected from concrete tables (never interpolated).

#include <map>
#include <string>
#include <utility>

#include "utq/poly.hpp"
#include "utq/roots.hpp"

namespace utq {

using SeedKey = std::pair<int, int>;  // (n, e)

inline std::string seed_name(SeedKey k) {
    return "N_{" + std::to_string(k.first) + "," + std::to_string(k.second) + "}";
}

/// Seed storage: exact polynomials where known, per-q integer values otherwise.
class BaseValueTable {
public:
    /// Starts with the four rank <= 3 base values.
    static BaseValueTable with_defaults() {
        BaseValueTable t;
        t.set_poly({1, 0}, PolyQ::constant(1));
        t.set_poly({2, 0}, PolyQ::q());
        t.set_poly({3, 0}, PolyQ::q() * PolyQ::q());
        t.set_poly({3, 1}, PolyQ::qm1());
        return t;
    }

    void set_poly(SeedKey k, PolyQ p) { polys_[k] = std::move(p); }
    void set_value(SeedKey k, const Bigint& q0, const Bigint& v) { values_[k][q0] = v; }

    const PolyQ* poly(SeedKey k) const {
        auto it = polys_.find(k);
        return it == polys_.end() ? nullptr : &it->second;
    }

    const Bigint* value(SeedKey k, const Bigint& q0) const {
        auto it = values_.find(k);
        if (it == values_.end()) return nullptr;
        auto jt = it->second.find(q0);
        return jt == it->second.end() ? nullptr : &jt->second;
    }

    const std::map<SeedKey, std::map<Bigint, Bigint>>& values() const { return values_; }
    const std::map<SeedKey, PolyQ>& polys() const { return polys_; }

private:
    std::map<SeedKey, PolyQ> polys_;
    std::map<SeedKey, std::map<Bigint, Bigint>> values_;
};

/// A polynomial in q plus a PolyQ-linear combination of named seed values.
class SeededPoly {
public:
    SeededPoly() = default;
    /*implicit*/ SeededPoly(PolyQ p) : constant_(std::move(p)) {}

    static SeededPoly seed(SeedKey k) {
        SeededPoly s;
        s.terms_[k] = PolyQ::constant(1);
        return s;
    }

    const PolyQ& constant() const { return constant_; }
    const std::map<SeedKey, PolyQ>& terms() const { return terms_; }
    bool is_polynomial() const { return terms_.empty(); }

    /// The plain polynomial, when no seed terms are present.
    const PolyQ& as_polynomial() const {
        if (!is_polynomial())
            throw Unsupported("value depends on seeds " + seed_list() + "; only per-q evaluation is certified");
        return constant_;
    }

    friend SeededPoly operator+(const SeededPoly& a, const SeededPoly& b) {
        SeededPoly out;
        out.constant_ = a.constant_ + b.constant_;
        out.terms_ = a.terms_;
        for (const auto& [k, p] : b.terms_) {
            auto& slot = out.terms_[k];
            slot += p;
            if (slot.is_zero()) out.terms_.erase(k);
        }
        return out;
    }

    friend SeededPoly operator*(const PolyQ& c, const SeededPoly& a) {
        SeededPoly out;
        out.constant_ = c * a.constant_;
        if (!c.is_zero())
            for (const auto& [k, p] : a.terms_) out.terms_[k] = c * p;
        return out;
    }

    friend bool operator==(const SeededPoly&, const SeededPoly&) = default;

    struct MissingSeed : Error {
        SeedKey key;
        MissingSeed(SeedKey k, const Bigint& q0)
            : Error("no certified value of " + seed_name(k) + " at q=" + q0.str()), key(k) {}
    };

    Bigint eval(const Bigint& q0, const BaseValueTable& seeds) const {
        Bigint acc = constant_.eval(q0);
        for (const auto& [k, p] : terms_) {
            const Bigint* v = seeds.value(k, q0);
            if (!v) throw MissingSeed(k, q0);
            acc += p.eval(q0) * (*v);
        }
        return acc;
    }

    std::string seed_list() const {
        std::string out;
        for (const auto& [k, p] : terms_) {
            if (!out.empty()) out += ", ";
            out += seed_name(k);
        }
        return out;
    }

private:
    PolyQ constant_;
    std::map<SeedKey, PolyQ> terms_;
};

/// Count of characters of the single largest degree q^{mu(n)}.
inline PolyQ n_top(int n) {
    if (n < 1) throw ValidationError("rank must be >= 1");
    const int m = n / 2;
    if (n % 2 == 1) return PolyQ::qm1_pow(m);
    return PolyQ::q() * PolyQ::qm1_pow(m - 1);
}

enum class SecondMode { closed, recursion };

inline PolyQ n_second_closed(int n) {
    if (n < 4) throw ValidationError("second-highest closed form needs n >= 4");
    const int m = n / 2;
    PolyQ inner = (n % 2 == 1)
                      ? PolyQ::constant(m) * PolyQ::qm1() + PolyQ::constant(1)
                      : PolyQ::constant(m - 1) * PolyQ::q() + PolyQ::constant(1);
    return PolyQ::q() * PolyQ::qm1_pow(m - 1) * inner;
}

namespace detail {
inline PolyQ n_second_any(int n, const BaseValueTable& seeds) {
    if (n == 3) {
        const PolyQ* p = seeds.poly({3, 0});
        if (!p) throw Error("seed table lacks N_{3,0}");
        return *p;
    }
    if (n == 4) return n_second_closed(4);
    return PolyQ::qm1() * n_second_any(n - 2, seeds) +
           PolyQ::q() * PolyQ::qm1_pow(2) * n_top(n - 4);
}
}  // namespace detail

/// Count at degree q^{mu(n)-1}.  Both modes agree; `recursion` unwinds the
/// two-step recurrence down to the base values.
inline PolyQ n_second(int n, SecondMode mode = SecondMode::closed) {
    if (mode == SecondMode::closed) return n_second_closed(n);
    if (n < 5) throw ValidationError("second-highest recursion needs n >= 5");
    return detail::n_second_any(n, BaseValueTable::with_defaults());
}

enum class ThirdVariant { prose, theorem };

namespace detail {
inline SeededPoly n_third_ref(int n, const BaseValueTable& seeds, ThirdVariant variant) {
    const SeedKey key{n, mu(n) - 2};
    if (n == 5 || n == 6) {
        if (const PolyQ* p = seeds.poly(key)) return SeededPoly(*p);
        return SeededPoly::seed(key);
    }
    // second-term coefficient: q(q-1)^2 in the case-by-case derivation, q(q-1)
    // as printed in the recursion statement; they agree at q = 2.
    const PolyQ second_coeff = (variant == ThirdVariant::prose)
                                   ? PolyQ::q() * PolyQ::qm1_pow(2)
                                   : PolyQ::q() * PolyQ::qm1();
    return PolyQ::qm1() * n_third_ref(n - 2, seeds, variant) +
           SeededPoly(second_coeff * n_second_any(n - 4, seeds)) +
           SeededPoly(PolyQ::constant(2) * PolyQ::q() * PolyQ::q() * PolyQ::qm1_pow(3) * n_top(n - 6)) +
           SeededPoly(PolyQ::qm1_pow(4) * n_top(n - 6));
}
}  // namespace detail

/// Count at degree q^{mu(n)-2} for n >= 7, as a seed-linear form.
inline SeededPoly n_third(int n, const BaseValueTable& seeds,
                          ThirdVariant variant = ThirdVariant::prose) {
    if (n < 7) throw ValidationError("third-highest recursion needs n >= 7");
    return detail::n_third_ref(n, seeds, variant);
}

}  // namespace utq
