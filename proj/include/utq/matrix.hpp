#pragma once

// Unitriangular matrices over GF(q).  The generic representation stores the
// strictly-upper entries as bytes; a bit-packed row representation doubles it
// for GF(2), where whole rows fit in machine words.  Both expose the same
// operation set so the group algorithms can run on either.

#include <array>
#include <cstdint>
#include <vector>

#include "utq/field.hpp"
#include "utq/roots.hpp"

namespace utq {

constexpr int kMaxRank = 12;

/// Strictly-upper-triangular entry array; diagonal entries are implicitly 1.
/// Matrix coordinates are 1-based and entry (i, j) requires i < j.
struct UTMat {
    int n = 0;
    std::vector<std::uint8_t> e;

    static UTMat identity(int n) {
        UTMat m;
        m.n = n;
        m.e.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
        return m;
    }

    std::size_t pos(int i, int j) const {
        // row i holds n-i entries, columns i+1..n
        return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
    }
    std::uint8_t at(int i, int j) const { return e[pos(i, j)]; }
    std::uint8_t& at(int i, int j) { return e[pos(i, j)]; }

    friend bool operator==(const UTMat&, const UTMat&) = default;
    friend auto operator<=>(const UTMat&, const UTMat&) = default;
};

/// GF(2) matrix with one row per machine word; bit t of row[i] is entry (i, t).
/// Diagonal bits are stored set.
struct Gf2Mat {
    int n = 0;
    std::array<std::uint16_t, kMaxRank + 1> row{};  // 1-based rows

    static Gf2Mat identity(int n) {
        Gf2Mat m;
        m.n = n;
        for (int i = 1; i <= n; ++i) m.row[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(1u << i);
        return m;
    }

    int at(int i, int j) const { return (row[static_cast<std::size_t>(i)] >> j) & 1; }

    friend bool operator==(const Gf2Mat&, const Gf2Mat&) = default;
};

/// Generic-path operations; valid for every supported q.
class GenericOps {
public:
    using Mat = UTMat;

    GenericOps(int n, const FieldSpec& F) : n_(n), F_(F) {}

    int n() const { return n_; }
    const FieldSpec& field() const { return F_; }

    Mat identity() const { return UTMat::identity(n_); }

    /// x_a(c) = I + c * e_{i, j+1}
    Mat root_elem(Root a, int c) const {
        Mat m = identity();
        m.at(a.i, a.j + 1) = static_cast<std::uint8_t>(c);
        return m;
    }

    int entry(const Mat& m, int i, int j) const { return m.at(i, j); }

    Mat mul(const Mat& a, const Mat& b) const {
        Mat c = identity();
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) {
                int acc = F_.add(a.at(i, j), b.at(i, j));
                for (int k = i + 1; k < j; ++k)
                    acc = F_.add(acc, F_.mul(a.at(i, k), b.at(k, j)));
                c.at(i, j) = static_cast<std::uint8_t>(acc);
            }
        return c;
    }

    Mat inv(const Mat& a) const {
        // (a * r)[i][j] = a[i][j] + r[i][j] + sum_k a[i][k] r[k][j] = 0, by height
        Mat r = identity();
        for (int h = 1; h < n_; ++h)
            for (int i = 1; i + h <= n_; ++i) {
                const int j = i + h;
                int acc = a.at(i, j);
                for (int k = i + 1; k < j; ++k) acc = F_.add(acc, F_.mul(a.at(i, k), r.at(k, j)));
                r.at(i, j) = static_cast<std::uint8_t>(F_.neg(acc));
            }
        return r;
    }

    /// m <- x_a(c) * m  (adds c times row j+1 to row i)
    void left_mult_root(Mat& m, Root a, int c) const {
        if (c == 0) return;
        const int i = a.i, r = a.j + 1;
        m.at(i, r) = static_cast<std::uint8_t>(F_.add(m.at(i, r), c));
        for (int t = r + 1; t <= n_; ++t)
            m.at(i, t) = static_cast<std::uint8_t>(F_.add(m.at(i, t), F_.mul(c, m.at(r, t))));
    }

    /// m <- m * x_a(c)  (adds c times column i to column j+1)
    void right_mult_root(Mat& m, Root a, int c) const {
        if (c == 0) return;
        const int i = a.i, r = a.j + 1;
        m.at(i, r) = static_cast<std::uint8_t>(F_.add(m.at(i, r), c));
        for (int s = 1; s < i; ++s)
            m.at(s, r) = static_cast<std::uint8_t>(F_.add(m.at(s, r), F_.mul(m.at(s, i), c)));
    }

private:
    int n_;
    const FieldSpec& F_;
};

/// Bit-packed operations for q = 2; must agree with GenericOps entry for entry.
class Gf2Ops {
public:
    using Mat = Gf2Mat;

    explicit Gf2Ops(int n) : n_(n) {}

    int n() const { return n_; }

    Mat identity() const { return Gf2Mat::identity(n_); }

    Mat root_elem(Root a, int c) const {
        Mat m = identity();
        if (c) m.row[static_cast<std::size_t>(a.i)] |= static_cast<std::uint16_t>(1u << (a.j + 1));
        return m;
    }

    int entry(const Mat& m, int i, int j) const { return m.at(i, j); }

    Mat mul(const Mat& a, const Mat& b) const {
        Mat c;
        c.n = n_;
        for (int i = 1; i <= n_; ++i) {
            std::uint32_t acc = 0;
            std::uint32_t bits = a.row[static_cast<std::size_t>(i)];
            while (bits) {
                const int k = __builtin_ctz(bits);
                bits &= bits - 1;
                acc ^= b.row[static_cast<std::size_t>(k)];
            }
            c.row[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(acc);
        }
        return c;
    }

    Mat inv(const Mat& a) const {
        // back substitution, bottom row up; rows below are already solved
        Mat r = identity();
        for (int i = n_ - 1; i >= 1; --i) {
            std::uint32_t acc = 1u << i;
            std::uint32_t bits = a.row[static_cast<std::size_t>(i)] & ~(1u << i);
            while (bits) {
                const int k = __builtin_ctz(bits);
                bits &= bits - 1;
                acc ^= r.row[static_cast<std::size_t>(k)];
            }
            r.row[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(acc);
        }
        return r;
    }

    void left_mult_root(Mat& m, Root a, int c) const {
        if (c) m.row[static_cast<std::size_t>(a.i)] ^= m.row[static_cast<std::size_t>(a.j + 1)];
    }

    void right_mult_root(Mat& m, Root a, int c) const {
        if (!c) return;
        const std::uint32_t col_i = 1u << a.i, col_r = 1u << (a.j + 1);
        for (int s = 1; s <= a.i; ++s)
            if (m.row[static_cast<std::size_t>(s)] & col_i) m.row[static_cast<std::size_t>(s)] ^= col_r;
    }

private:
    int n_;
};

template <class Ops>
typename Ops::Mat ops_commutator(const Ops& ops, const typename Ops::Mat& a, const typename Ops::Mat& b) {
    return ops.mul(ops.mul(ops.inv(a), ops.inv(b)), ops.mul(a, b));
}

/// y^x = x^{-1} y x
template <class Ops>
typename Ops::Mat ops_conj(const Ops& ops, const typename Ops::Mat& y, const typename Ops::Mat& x) {
    return ops.mul(ops.mul(ops.inv(x), y), x);
}

inline UTMat to_generic(const Gf2Mat& m) {
    UTMat out = UTMat::identity(m.n);
    for (int i = 1; i <= m.n; ++i)
        for (int j = i + 1; j <= m.n; ++j) out.at(i, j) = static_cast<std::uint8_t>(m.at(i, j));
    return out;
}

inline Gf2Mat to_packed(const UTMat& m) {
    Gf2Mat out = Gf2Mat::identity(m.n);
    for (int i = 1; i <= m.n; ++i)
        for (int j = i + 1; j <= m.n; ++j)
            if (m.at(i, j)) out.row[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
    return out;
}

}  // namespace utq
