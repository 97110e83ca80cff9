#pragma once

// Combinatorics of the positive roots of type A_{n-1}.  A root a_{i,j} with
// 1 <= i <= j <= n-1 stands for the interval of simple roots i..j and sits at
// matrix entry (i, j+1) of an n x n unitriangular matrix.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "utq/common.hpp"

namespace utq {

struct Root {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Root&, const Root&) = default;
};

inline int height(Root r) { return r.j - r.i; }
inline bool is_simple(Root r) { return r.i == r.j; }

inline std::string to_string(Root r) {
    return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

inline void check_root(int n, Root r) {
    if (r.i < 1 || r.i > r.j || r.j > n - 1)
        throw ValidationError("root " + to_string(r) + " out of bounds for rank " + std::to_string(n));
}

/// Whether b = a1 + a2 is again a root, i.e. the intervals concatenate.
inline bool roots_compose(Root a1, Root a2) { return a2.i == a1.j + 1; }
inline Root root_sum(Root a1, Root a2) { return Root{a1.i, a2.j}; }

/// A finite set of roots for a fixed ambient rank, kept sorted by (i, j).
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(int rank) : rank_(rank) {}
    RootSet(int rank, std::vector<Root> roots) : rank_(rank), roots_(std::move(roots)) {
        for (Root r : roots_) check_root(rank_, r);
        std::sort(roots_.begin(), roots_.end());
        roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    }

    int rank() const { return rank_; }
    std::size_t size() const { return roots_.size(); }
    bool empty() const { return roots_.empty(); }
    const std::vector<Root>& roots() const { return roots_; }
    Root operator[](std::size_t k) const { return roots_[k]; }
    auto begin() const { return roots_.begin(); }
    auto end() const { return roots_.end(); }

    bool contains(Root r) const {
        return std::binary_search(roots_.begin(), roots_.end(), r);
    }

    void insert(Root r) {
        check_root(rank_, r);
        auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
        if (it == roots_.end() || *it != r) roots_.insert(it, r);
    }

    void erase(Root r) {
        auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
        if (it != roots_.end() && *it == r) roots_.erase(it);
    }

    RootSet set_minus(const RootSet& other) const {
        RootSet out(rank_);
        for (Root r : roots_)
            if (!other.contains(r)) out.roots_.push_back(r);
        return out;
    }

    RootSet set_union(const RootSet& other) const {
        RootSet out = *this;
        for (Root r : other) out.insert(r);
        return out;
    }

    RootSet set_intersect(const RootSet& other) const {
        RootSet out(rank_);
        for (Root r : roots_)
            if (other.contains(r)) out.roots_.push_back(r);
        return out;
    }

    /// Closed under root addition: the sum of two members that is a root is a member.
    bool is_closed() const {
        for (Root a : roots_)
            for (Root b : roots_) {
                if (roots_compose(a, b) && !contains(root_sum(a, b))) return false;
                if (roots_compose(b, a) && !contains(root_sum(b, a))) return false;
            }
        return true;
    }

    /// A pair witnessing non-closure, if any.
    std::optional<std::pair<Root, Root>> closure_violation() const {
        for (Root a : roots_)
            for (Root b : roots_)
                if (roots_compose(a, b) && !contains(root_sum(a, b)))
                    return std::make_pair(a, b);
        return std::nullopt;
    }

    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    int rank_ = 0;
    std::vector<Root> roots_;
};

/// All positive roots a_{i,j}, 1 <= i <= j <= n-1, in (i, j) order.
inline RootSet positive_roots(int n) {
    if (n < 1) throw ValidationError("rank must be >= 1");
    RootSet out(n);
    std::vector<Root> rs;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) rs.push_back(Root{i, j});
    return RootSet(n, std::move(rs));
}

struct HookParts {
    RootSet arm;
    RootSet leg;
    RootSet hook;
};

/// arm = same row to the left, leg = same column below, hook = both plus the root.
inline HookParts hook_parts(int n, Root a) {
    check_root(n, a);
    HookParts out{RootSet(n), RootSet(n), RootSet(n)};
    for (int l = a.i; l <= a.j - 1; ++l) out.arm.insert(Root{a.i, l});
    for (int k = a.i + 1; k <= a.j; ++k) out.leg.insert(Root{k, a.j});
    out.hook = out.arm.set_union(out.leg);
    out.hook.insert(a);
    return out;
}

enum class RegionKind { base, subtri, radical };

/// base = everything but the arm; subtri = the interval triangle [i..j];
/// radical = the complement of the interval triangle.
inline RootSet region_roots(int n, Root a, RegionKind kind) {
    check_root(n, a);
    const RootSet all = positive_roots(n);
    switch (kind) {
        case RegionKind::base:
            return all.set_minus(hook_parts(n, a).arm);
        case RegionKind::subtri: {
            RootSet out(n);
            for (int k = a.i; k <= a.j; ++k)
                for (int l = k; l <= a.j; ++l) out.insert(Root{k, l});
            return out;
        }
        case RegionKind::radical:
            return all.set_minus(region_roots(n, a, RegionKind::subtri));
    }
    throw ValidationError("bad region kind");
}

enum class PairRelation { equal, arm, leg, separate_disjoint, separate_crossing };

struct PairClass {
    PairRelation relation;
    RootSet hook_overlap;
};

/// Classifies the mutual position of two roots and returns the hook intersection.
inline PairClass classify_pair(int n, Root a, Root b) {
    check_root(n, a);
    check_root(n, b);
    const HookParts ha = hook_parts(n, a);
    const HookParts hb = hook_parts(n, b);
    const RootSet overlap = ha.hook.set_intersect(hb.hook);
    if (a == b) return {PairRelation::equal, overlap};
    if (a.i == b.i) return {PairRelation::arm, overlap};
    if (a.j == b.j) return {PairRelation::leg, overlap};
    if (overlap.empty()) return {PairRelation::separate_disjoint, overlap};
    return {PairRelation::separate_crossing, overlap};
}

/// A nonempty set of pairwise separate roots: all rows distinct, all columns distinct.
class BasicSet {
public:
    BasicSet() = default;

    int rank() const { return set_.rank(); }
    const RootSet& roots() const { return set_; }
    std::size_t size() const { return set_.size(); }
    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }
    bool contains(Root r) const { return set_.contains(r); }

    friend bool operator==(const BasicSet&, const BasicSet&) = default;

    friend BasicSet validate_basic_set(int n, const RootSet& d);

private:
    RootSet set_;
};

struct SameRowError : ValidationError {
    Root a, b;
    SameRowError(Root x, Root y)
        : ValidationError("roots " + to_string(x) + " and " + to_string(y) + " share a row"), a(x), b(y) {}
};

struct SameColumnError : ValidationError {
    Root a, b;
    SameColumnError(Root x, Root y)
        : ValidationError("roots " + to_string(x) + " and " + to_string(y) + " share a column"), a(x), b(y) {}
};

struct EmptySetError : ValidationError {
    EmptySetError() : ValidationError("a basic set must be nonempty") {}
};

inline BasicSet validate_basic_set(int n, const RootSet& d) {
    if (d.empty()) throw EmptySetError();
    const auto& rs = d.roots();
    for (std::size_t x = 0; x < rs.size(); ++x) check_root(n, rs[x]);
    for (std::size_t x = 0; x < rs.size(); ++x)
        for (std::size_t y = x + 1; y < rs.size(); ++y) {
            if (rs[x].i == rs[y].i) throw SameRowError(rs[x], rs[y]);
            if (rs[x].j == rs[y].j) throw SameColumnError(rs[x], rs[y]);
        }
    BasicSet out;
    out.set_ = RootSet(n, rs);
    return out;
}

inline bool is_basic_set(int n, const RootSet& d) {
    try {
        validate_basic_set(n, d);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

/// Witness that a basic set splits as part_a (inside the pivot's interval
/// triangle) and part_b (hooks disjoint from that triangle).
struct DecompositionWitness {
    Root pivot;
    BasicSet part_a;
    BasicSet part_b;
};

/// Re-checks the three defining predicates of a witness against d.
inline bool witness_is_valid(int n, const BasicSet& d, const DecompositionWitness& w) {
    if (w.part_a.size() == 0 || w.part_b.size() == 0) return false;
    RootSet joined = w.part_a.roots().set_union(w.part_b.roots());
    if (joined != d.roots()) return false;
    if (w.part_a.roots().set_intersect(w.part_b.roots()).size() != 0) return false;
    const RootSet tri = region_roots(n, w.pivot, RegionKind::subtri);
    for (Root a : w.part_a)
        if (!tri.contains(a)) return false;
    for (Root b : w.part_b)
        if (!hook_parts(n, b).hook.set_intersect(tri).empty()) return false;
    return true;
}

/// Searches pivots in (i, j) order; for each pivot the split is forced.  The
/// first pivot whose split passes all predicates wins; nullopt if none does.
inline std::optional<DecompositionWitness> decompose_basic_set(int n, const BasicSet& d) {
    if (d.size() < 2) return std::nullopt;
    for (Root pivot : positive_roots(n)) {
        const RootSet tri = region_roots(n, pivot, RegionKind::subtri);
        RootSet a(n), b(n);
        for (Root r : d)
            (tri.contains(r) ? a : b).insert(r);
        if (a.empty() || b.empty()) continue;
        bool ok = true;
        for (Root r : b)
            if (!hook_parts(n, r).hook.set_intersect(tri).empty()) {
                ok = false;
                break;
            }
        if (!ok) continue;
        DecompositionWitness w{pivot, validate_basic_set(n, a), validate_basic_set(n, b)};
        return w;
    }
    return std::nullopt;
}

/// The involution a_{i,j} -> a_{n-j,n-i} (transpose-and-flip on matrix entries).
inline Root graph_auto(int n, Root a) {
    check_root(n, a);
    return Root{n - a.j, n - a.i};
}

/// Largest exponent e with irreducibles of degree q^e:
/// m(m-1) for n = 2m and m^2 for n = 2m+1.
inline int mu(int n) {
    if (n < 1) throw ValidationError("rank must be >= 1");
    int m = n / 2;
    return (n % 2 == 0) ? m * (m - 1) : m * m;
}

/// A closed root subset of rank n isomorphic to the rank n-1 system, together
/// with the root map realizing the isomorphism.
struct TkEmbedding {
    RootSet roots;                // subset of the rank-n positive roots
    std::map<Root, Root> phi;     // bijection onto the rank n-1 positive roots
};

inline TkEmbedding t_k_embedding(int n, int k) {
    if (k < 1 || k >= n - 1) throw ValidationError("cut index k must satisfy 1 <= k < n-1");
    TkEmbedding out;
    out.roots = RootSet(n);
    for (Root r : positive_roots(n)) {
        if (r.j == k || r.i == k + 1) continue;  // drop column k and row k+1
        out.roots.insert(r);
        Root image{};
        if (r.j < k)
            image = r;
        else if (r.i <= k)
            image = Root{r.i, r.j - 1};  // the span swallows the k,k+1 pair
        else
            image = Root{r.i - 1, r.j - 1};
        out.phi[r] = image;
    }
    if (!out.roots.is_closed())
        throw Error("t_k root set failed its closure check; this is a bug");
    return out;
}

}  // namespace utq
