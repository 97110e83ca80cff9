#pragma once

// Exact arithmetic in GF(q) for the small prime powers the concrete engine
// supports.  Elements are encoded as 0..q-1; for extensions the code digits
// are the base-p coefficients of the residue polynomial, so 0..p-1 is always
// the prime subfield.

#include <array>
#include <vector>

#include "utq/common.hpp"

namespace utq {

class FieldSpec {
public:
    static const FieldSpec& get(int q) {
        switch (q) {
            case 2: { static FieldSpec f(2, 1, {}); return f; }
            case 3: { static FieldSpec f(3, 1, {}); return f; }
            case 4: { static FieldSpec f(2, 2, {1, 1, 1}); return f; }      // x^2+x+1
            case 5: { static FieldSpec f(5, 1, {}); return f; }
            case 7: { static FieldSpec f(7, 1, {}); return f; }
            case 8: { static FieldSpec f(2, 3, {1, 1, 0, 1}); return f; }   // x^3+x+1
            case 9: { static FieldSpec f(3, 2, {1, 0, 1}); return f; }      // x^2+1
            default:
                throw ValidationError("unsupported field size q=" + std::to_string(q) +
                                      " (supported: 2,3,4,5,7,8,9)");
        }
    }

    int q() const { return q_; }
    int p() const { return p_; }
    int ext_degree() const { return k_; }
    /// Modulus polynomial coefficients, constant term first (empty for prime fields).
    const std::vector<int>& modulus() const { return mod_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int inv(int a) const {
        if (a == 0) throw ValidationError("division by zero in GF(q)");
        return inv_[static_cast<std::size_t>(a)];
    }
    /// Trace into the prime subfield: a + a^p + ... + a^{p^{k-1}}.
    int trace(int a) const { return tr_[static_cast<std::size_t>(a)]; }

private:
    FieldSpec(int p, int k, std::vector<int> mod) : p_(p), k_(k), mod_(std::move(mod)) {
        q_ = 1;
        for (int t = 0; t < k_; ++t) q_ *= p_;
        const std::size_t n = static_cast<std::size_t>(q_);
        add_.resize(n * n);
        mul_.resize(n * n);
        neg_.resize(n);
        inv_.resize(n);
        tr_.resize(n);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_[idx(a, b)] = add_slow(a, b);
                mul_[idx(a, b)] = mul_slow(a, b);
            }
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
                if (a != 0 && mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
            }
            int acc = 0, pw = a;
            for (int t = 0; t < k_; ++t) {
                acc = add(acc, pw);
                int next = pw;
                for (int s = 1; s < p_; ++s) next = mul(next, pw);
                pw = next;  // pw^p
            }
            tr_[static_cast<std::size_t>(a)] = acc;
        }
    }

    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<std::size_t>(k_));
        for (int t = 0; t < k_; ++t) {
            d[static_cast<std::size_t>(t)] = a % p_;
            a /= p_;
        }
        return d;
    }

    int undigits(const std::vector<int>& d) const {
        int a = 0;
        for (int t = k_ - 1; t >= 0; --t) a = a * p_ + d[static_cast<std::size_t>(t)];
        return a;
    }

    int add_slow(int a, int b) const {
        auto da = digits(a), db = digits(b);
        for (int t = 0; t < k_; ++t)
            da[static_cast<std::size_t>(t)] = (da[static_cast<std::size_t>(t)] + db[static_cast<std::size_t>(t)]) % p_;
        return undigits(da);
    }

    int mul_slow(int a, int b) const {
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
        for (int s = 0; s < k_; ++s)
            for (int t = 0; t < k_; ++t)
                prod[static_cast<std::size_t>(s + t)] =
                    (prod[static_cast<std::size_t>(s + t)] +
                     da[static_cast<std::size_t>(s)] * db[static_cast<std::size_t>(t)]) % p_;
        // reduce modulo the (monic) modulus polynomial
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            int c = prod[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int t = 0; t < k_; ++t)
                prod[static_cast<std::size_t>(d - k_ + t)] =
                    ((prod[static_cast<std::size_t>(d - k_ + t)] - c * mod_[static_cast<std::size_t>(t)]) % p_ + p_) % p_;
        }
        prod.resize(static_cast<std::size_t>(k_));
        return undigits(prod);
    }

    int p_, k_, q_;
    std::vector<int> mod_;
    std::vector<int> add_, mul_, neg_, inv_, tr_;
};

}  // namespace utq
