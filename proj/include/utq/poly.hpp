#pragma once

// Dense integer polynomials in q with arbitrary-precision coefficients, plus
// the change of basis between powers of q and powers of (q-1).

#include <string>
#include <vector>

#include "utq/common.hpp"

namespace utq {

class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) c_.emplace_back(c);
        trim();
    }
    explicit PolyQ(std::vector<Bigint> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyQ zero() { return PolyQ(); }
    static PolyQ constant(Bigint v) { return PolyQ({std::move(v)}); }
    static PolyQ monomial(int e, Bigint coeff = 1) {
        std::vector<Bigint> c(static_cast<std::size_t>(e) + 1, 0);
        c.back() = std::move(coeff);
        return PolyQ(std::move(c));
    }
    /// The polynomial q.
    static PolyQ q() { return monomial(1); }
    /// The polynomial q - 1.
    static PolyQ qm1() { return PolyQ({-1, 1}); }
    /// (q-1)^e
    static PolyQ qm1_pow(int e) {
        PolyQ out = constant(1);
        for (int t = 0; t < e; ++t) out = out * qm1();
        return out;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    const std::vector<Bigint>& coeffs() const { return c_; }
    Bigint coeff(int e) const {
        return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(e)] : Bigint(0);
    }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        std::vector<Bigint> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t t = 0; t < a.c_.size(); ++t) c[t] += a.c_[t];
        for (std::size_t t = 0; t < b.c_.size(); ++t) c[t] += b.c_[t];
        return PolyQ(std::move(c));
    }

    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) {
        std::vector<Bigint> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t t = 0; t < a.c_.size(); ++t) c[t] += a.c_[t];
        for (std::size_t t = 0; t < b.c_.size(); ++t) c[t] -= b.c_[t];
        return PolyQ(std::move(c));
    }

    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return PolyQ();
        std::vector<Bigint> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t s = 0; s < a.c_.size(); ++s)
            for (std::size_t t = 0; t < b.c_.size(); ++t) c[s + t] += a.c_[s] * b.c_[t];
        return PolyQ(std::move(c));
    }

    PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
    PolyQ& operator-=(const PolyQ& o) { return *this = *this - o; }
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    Bigint eval(const Bigint& q0) const {
        Bigint acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int e = degree(); e >= 0; --e) {
            const Bigint& v = c_[static_cast<std::size_t>(e)];
            if (v == 0) continue;
            if (!out.empty()) out += (v > 0) ? " + " : " - ";
            else if (v < 0) out += "-";
            Bigint a = abs(v);
            if (a != 1 || e == 0) out += a.str();
            if (e > 0) {
                if (a != 1) out += "*";
                out += "q";
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Bigint> c_;  // c_[e] multiplies q^e
};

/// Coefficients of p rewritten in powers of (q-1): p = sum out[k] (q-1)^k.
inline std::vector<Bigint> to_qminus1(const PolyQ& p) {
    // q^i = ((q-1)+1)^i contributes binomial(i,k) to (q-1)^k.
    const int d = p.degree();
    if (d < 0) return {};
    std::vector<std::vector<Bigint>> binom(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 0);
        binom[static_cast<std::size_t>(i)][0] = 1;
        for (int k = 1; k <= i; ++k)
            binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
                (k <= i - 1 ? binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] : Bigint(0));
    }
    std::vector<Bigint> out(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= i; ++k)
            out[static_cast<std::size_t>(k)] +=
                p.coeff(i) * binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

/// Inverse substitution: rebuilds the q-basis polynomial from (q-1)-basis coefficients.
inline PolyQ from_qminus1(const std::vector<Bigint>& coeffs) {
    PolyQ out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        out += PolyQ::constant(coeffs[k]) * PolyQ::qm1_pow(static_cast<int>(k));
    return out;
}

inline bool nonnegative_in_qminus1(const PolyQ& p) {
    for (const Bigint& c : to_qminus1(p))
        if (c < 0) return false;
    return true;
}

}  // namespace utq
