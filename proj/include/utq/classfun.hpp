#pragma once

// Exact class functions on enumerable pattern groups.  Values are cyclotomic;
// induction uses the class-sum formula (sweep the subgroup once, bucket by
// ambient class), so it never materializes coset transversals.

#include <memory>

#include "utq/cyclo.hpp"
#include "utq/group.hpp"
#include "utq/superalg.hpp"

namespace utq {

using ClassDataPtr = std::shared_ptr<const ClassData>;

inline ClassDataPtr make_class_data(const GroupHandle& g, const Caps& caps = default_caps()) {
    return std::make_shared<ClassData>(conjugacy_classes(g, caps));
}

/// The fixed nontrivial additive character of GF(q): psi(a) = zeta_p^{Tr(a)}.
inline Cyclo psi(const FieldSpec& F, int a) {
    return Cyclo::root_of_unity(F.p(), F.trace(a));
}

class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(ClassDataPtr owner, std::vector<Cyclo> values)
        : owner_(std::move(owner)), v_(std::move(values)) {
        if (v_.size() != owner_->count())
            throw ValidationError("class function needs one value per class");
    }

    static ClassFunction trivial(const ClassDataPtr& cd) {
        return constant(cd, Cyclo::one());
    }

    static ClassFunction constant(const ClassDataPtr& cd, const Cyclo& c) {
        return ClassFunction(cd, std::vector<Cyclo>(cd->count(), c));
    }

    /// Regular character: |G| at the identity, 0 elsewhere.
    static ClassFunction regular(const ClassDataPtr& cd) {
        std::vector<Cyclo> v(cd->count(), Cyclo::zero());
        v[0] = Cyclo::from_rational(Rat(cd->group.order()));
        return ClassFunction(cd, std::move(v));
    }

    const ClassDataPtr& owner() const { return owner_; }
    const std::vector<Cyclo>& values() const { return v_; }
    const Cyclo& at_class(std::size_t c) const { return v_[c]; }
    const Cyclo& at_element(std::uint64_t idx) const { return v_[owner_->class_of[idx]]; }

    /// Degree = value at the identity class.
    const Cyclo& degree() const { return v_[0]; }
    Bigint degree_int() const {
        const Cyclo& d = degree();
        if (!d.is_rational() || denominator(d.rational_part()) != 1)
            throw ValidationError("degree is not a rational integer");
        return numerator(d.rational_part());
    }

    bool same_owner(const ClassFunction& o) const {
        return owner_ == o.owner_ ||
               (owner_->group == o.owner_->group && owner_->reps == o.owner_->reps);
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.same_owner(b) && a.v_ == b.v_;
    }

private:
    ClassDataPtr owner_;
    std::vector<Cyclo> v_;
};

// ---------------------------------------------------------------------------
// pointwise operations and inner products

inline ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b) {
    if (!a.same_owner(b)) throw ValidationError("class functions live on different groups");
    std::vector<Cyclo> v(a.values().size());
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = a.values()[t] * b.values()[t];
    return ClassFunction(a.owner(), std::move(v));
}

inline ClassFunction cf_conjugate(const ClassFunction& a) {
    std::vector<Cyclo> v(a.values().size());
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = a.values()[t].conj();
    return ClassFunction(a.owner(), std::move(v));
}

inline ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    if (!a.same_owner(b)) throw ValidationError("class functions live on different groups");
    std::vector<Cyclo> v(a.values().size());
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = a.values()[t] + b.values()[t];
    return ClassFunction(a.owner(), std::move(v));
}

inline ClassFunction cf_scale(const Rat& r, const ClassFunction& a) {
    std::vector<Cyclo> v(a.values().size());
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = r * a.values()[t];
    return ClassFunction(a.owner(), std::move(v));
}

/// (1/|G|) sum over classes of size * f * conj(h); the result must be rational
/// for characters (it is checked to be).
inline Rat cf_inner(const ClassFunction& f, const ClassFunction& h) {
    if (!f.same_owner(h)) throw ValidationError("class functions live on different groups");
    const ClassData& cd = *f.owner();
    Cyclo acc = Cyclo::zero();
    for (std::size_t t = 0; t < cd.count(); ++t)
        acc += Rat(cd.sizes[t]) * (f.values()[t] * h.values()[t].conj());
    if (!acc.is_rational())
        throw ValidationError("inner product of class functions is not rational");
    return acc.rational_part() / Rat(cd.group.order());
}

/// Restriction to a subgroup with its own class data.
inline ClassFunction cf_restrict(const ClassFunction& f, const ClassDataPtr& sub) {
    const GroupHandle& h = sub->group;
    const GroupHandle& g = f.owner()->group;
    if (!h.is_subgroup_of(g)) throw ValidationError("restriction target is not a subgroup");
    std::vector<Cyclo> v(sub->count());
    for (std::size_t t = 0; t < sub->count(); ++t) {
        const UTMat m = element_matrix(h, sub->reps[t]);
        const auto idx = element_index(g, m);
        v[t] = f.at_element(*idx);
    }
    return ClassFunction(sub, std::move(v));
}

// ---------------------------------------------------------------------------
// induction

/// chi^G on a class C with representative g:
///   chi^G(g) = |C_G(g)| / |H| * sum over u in C intersect H of f(u),
/// computed by one sweep over the subgroup's elements.
inline ClassFunction induce(const ClassFunction& f, const ClassDataPtr& big) {
    const GroupHandle& h = f.owner()->group;
    const GroupHandle& g = big->group;
    if (!h.is_subgroup_of(g)) throw ValidationError("induction source is not a subgroup");
    std::vector<Cyclo> acc(big->count(), Cyclo::zero());
    const std::uint64_t horder = h.order_u64();
    for (std::uint64_t t = 0; t < horder; ++t) {
        const UTMat m = element_matrix(h, t);
        const auto gidx = element_index(g, m);
        acc[big->class_of[*gidx]] += f.at_element(t);
    }
    const Rat horder_r(h.order());
    const Rat gorder_r(g.order());
    std::vector<Cyclo> v(big->count());
    for (std::size_t c = 0; c < big->count(); ++c) {
        const Rat centralizer = gorder_r / Rat(big->sizes[c]);
        v[c] = (centralizer / horder_r) * acc[c];
    }
    return ClassFunction(big, std::move(v));
}

// ---------------------------------------------------------------------------
// the linear characters behind elementary and basic characters

/// Base-group root set of a basic set: everything outside the arms.
inline RootSet base_group_roots(int n, const RootSet& d) {
    RootSet arms(n);
    for (Root a : d) arms = arms.set_union(hook_parts(n, a).arm);
    return positive_roots(n).set_minus(arms);
}

/// lambda_{D,phi}(v) = prod over factors psi(t_a * v[entry of a]); linear on
/// the base group because the excluded arm entries make those entries additive.
inline Cyclo lambda_value(const FieldSpec& F, const FactorList& factors, const UTMat& m) {
    Cyclo out = Cyclo::one();
    for (const auto& f : factors) out *= psi(F, F.mul(f.param, m.at(f.root.i, f.root.j + 1)));
    return out;
}

/// The linear character as a class function on the base group V_D (whose
/// handle must match base_group_roots exactly).
inline ClassFunction linear_lambda(const ClassDataPtr& base, const BasicSymbol& s) {
    const GroupHandle& v = base->group;
    if (s.trivial()) throw ValidationError("basic data must contain at least one factor");
    if (v.roots() != base_group_roots(s.n(), s.root_set()))
        throw ValidationError("handle is not the base group of this basic data");
    const FieldSpec& F = FieldSpec::get(s.q());
    std::vector<Cyclo> vals(base->count());
    for (std::size_t t = 0; t < base->count(); ++t)
        vals[t] = lambda_value(F, s.factors(), element_matrix(v, base->reps[t]));
    return ClassFunction(base, std::move(vals));
}

/// The basic character xi_{D,phi} as a class function on the ambient group:
/// the linear lambda of V_D induced up, evaluated in one subgroup sweep.
inline ClassFunction basic_character_cf(const ClassDataPtr& big, const BasicSymbol& s) {
    const GroupHandle& g = big->group;
    if (s.n() != g.n() || s.q() != g.q())
        throw ValidationError("symbol ambient does not match the group");
    if (s.trivial()) return ClassFunction::trivial(big);
    const FieldSpec& F = FieldSpec::get(s.q());
    const GroupHandle vd = subgroup_from_roots(g.n(), g.q(), base_group_roots(s.n(), s.root_set()));
    std::vector<Cyclo> acc(big->count(), Cyclo::zero());
    const std::uint64_t vorder = vd.order_u64();
    for (std::uint64_t t = 0; t < vorder; ++t) {
        const UTMat m = element_matrix(vd, t);
        const auto gidx = element_index(g, m);
        acc[big->class_of[*gidx]] += lambda_value(F, s.factors(), m);
    }
    const Rat vorder_r(vd.order());
    const Rat gorder_r(g.order());
    std::vector<Cyclo> vals(big->count());
    for (std::size_t c = 0; c < big->count(); ++c) {
        const Rat centralizer = gorder_r / Rat(big->sizes[c]);
        vals[c] = (centralizer / vorder_r) * acc[c];
    }
    return ClassFunction(big, std::move(vals));
}

/// A whole expression as a class function: sum of coefficient * symbol.
inline ClassFunction expr_cf(const ClassDataPtr& big, const SuperExpr& e) {
    ClassFunction out = ClassFunction::constant(big, Cyclo::zero());
    for (const auto& [s, c] : e.terms())
        out = cf_add(out, cf_scale(Rat(c), basic_character_cf(big, s)));
    return out;
}

}  // namespace utq
