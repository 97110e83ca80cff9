#pragma once

// Exact elements of the cyclotomic field Q(zeta_m) for prime-power m, stored
// as rational coordinates over the power basis zeta^0 .. zeta^{phi(m)-1} and
// reduced modulo the m-th cyclotomic polynomial.  All conductors appearing in
// one computation are powers of the same prime, so promotion is by divisibility.

#include <vector>

#include "utq/common.hpp"

namespace utq {

namespace detail {
inline int smallest_prime_factor(int m) {
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return d;
    return m;
}
}  // namespace detail

class Cyclo {
public:
    Cyclo() : Cyclo(1) {}
    explicit Cyclo(int conductor) : m_(conductor), c_(phi(conductor)) {}

    static int phi(int m) {
        if (m == 1) return 1;  // treat Q as Q(zeta_1) with basis {1}
        const int p = detail::smallest_prime_factor(m);
        return m - m / p;
    }

    static Cyclo zero(int m = 1) { return Cyclo(m); }
    static Cyclo from_rational(const Rat& r, int m = 1) {
        Cyclo out(m);
        out.c_[0] = r;
        return out;
    }
    static Cyclo one(int m = 1) { return from_rational(1, m); }
    /// zeta_m^e
    static Cyclo root_of_unity(int m, long long e) {
        Cyclo out(m);
        out.add_monomial(e, Rat(1));
        return out;
    }

    int conductor() const { return m_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const Rat& r : c_)
            if (r != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t t = 1; t < c_.size(); ++t)
            if (c_[t] != 0) return false;
        return true;
    }
    const Rat& rational_part() const { return c_[0]; }

    /// Rewrites the element over the larger conductor m2 (m must divide m2).
    Cyclo promoted(int m2) const {
        if (m2 == m_) return *this;
        if (m2 % m_ != 0)
            throw ValidationError("cannot promote conductor " + std::to_string(m_) + " into " +
                                  std::to_string(m2));
        Cyclo out(m2);
        const long long step = m2 / m_;
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (c_[e] != 0) out.add_monomial(static_cast<long long>(e) * step, c_[e]);
        return out;
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        const int m = std::max(a.m_, b.m_);
        Cyclo x = a.promoted(m), y = b.promoted(m);
        for (std::size_t t = 0; t < x.c_.size(); ++t) x.c_[t] += y.c_[t];
        return x;
    }

    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        const int m = std::max(a.m_, b.m_);
        Cyclo x = a.promoted(m), y = b.promoted(m);
        for (std::size_t t = 0; t < x.c_.size(); ++t) x.c_[t] -= y.c_[t];
        return x;
    }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        const int m = std::max(a.m_, b.m_);
        const Cyclo x = a.promoted(m), y = b.promoted(m);
        Cyclo out(m);
        for (std::size_t s = 0; s < x.c_.size(); ++s) {
            if (x.c_[s] == 0) continue;
            for (std::size_t t = 0; t < y.c_.size(); ++t) {
                if (y.c_[t] == 0) continue;
                out.add_monomial(static_cast<long long>(s + t), x.c_[s] * y.c_[t]);
            }
        }
        return out;
    }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    friend Cyclo operator*(const Rat& r, const Cyclo& a) {
        Cyclo out = a;
        for (Rat& v : out.c_) v *= r;
        return out;
    }

    /// Complex conjugation zeta -> zeta^{m-1}.
    Cyclo conj() const {
        Cyclo out(m_);
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (c_[e] != 0) out.add_monomial(static_cast<long long>(m_) - static_cast<long long>(e), c_[e]);
        return out;
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        const int m = std::max(a.m_, b.m_);
        return a.promoted(m).c_ == b.promoted(m).c_;
    }

    /// Total order used only for canonical sorting of character tables.
    static int compare(const Cyclo& a, const Cyclo& b) {
        const int m = std::max(a.m_, b.m_);
        const Cyclo x = a.promoted(m), y = b.promoted(m);
        for (std::size_t t = 0; t < x.c_.size(); ++t) {
            if (x.c_[t] < y.c_[t]) return -1;
            if (y.c_[t] < x.c_[t]) return 1;
        }
        return 0;
    }

    std::string str() const {
        std::string out;
        for (std::size_t e = 0; e < c_.size(); ++e) {
            if (c_[e] == 0) continue;
            if (!out.empty()) out += " + ";
            out += c_[e].str();
            if (e > 0) out += "*z^" + std::to_string(e);
        }
        return out.empty() ? "0" : out;
    }

private:
    // Adds c * zeta^e in reduced form.  For m = p^a the single relation
    // zeta^{phi} = -(zeta^0 + zeta^{m/p} + ... )*zeta^{e-phi} resolves every
    // exponent >= phi in one step.
    void add_monomial(long long e, const Rat& coeff) {
        e %= m_;
        if (e < 0) e += m_;
        const long long ph = static_cast<long long>(c_.size());
        if (m_ == 1 || e < ph) {
            c_[static_cast<std::size_t>(e % ph)] += coeff;
            return;
        }
        const int p = detail::smallest_prime_factor(m_);
        const long long block = m_ / p;
        const long long r = e - ph;
        for (int t = 0; t <= p - 2; ++t) c_[static_cast<std::size_t>(r + t * block)] -= coeff;
    }

    int m_;
    std::vector<Rat> c_;
};

}  // namespace utq
