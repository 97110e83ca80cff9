#pragma once

// Named verification suites.  Each check records a stable id, the claim tag
// it pins (the anchor), pass/fail/skipped, and a small witness object; a
// report is deterministic for a fixed configuration apart from timing.

#include <chrono>
#include <functional>
#include <random>

#include "utq/serialize.hpp"

namespace utq {

struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string status;  // "pass" | "fail" | "skipped"
    Json witness;
};

struct Report {
    std::string suite;
    Json config;
    std::vector<CheckRecord> checks;
    std::int64_t elapsed_ms = 0;

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }

    Json to_json() const {
        Json cs = Json::array();
        for (const auto& c : checks)
            cs.push_back(Json{{"id", c.id}, {"anchor", c.anchor}, {"status", c.status}, {"witness", c.witness}});
        return Json{{"schema", 1}, {"suite", suite}, {"config", config}, {"checks", cs},
                    {"elapsed_ms", elapsed_ms}};
    }
};

namespace detail {

class SuiteRunner {
public:
    SuiteRunner(std::string suite, Json config) {
        rep_.suite = std::move(suite);
        rep_.config = std::move(config);
        start_ = std::chrono::steady_clock::now();
    }

    void check(const std::string& id, const std::string& anchor, bool ok, Json witness = Json::object()) {
        rep_.checks.push_back({id, anchor, ok ? "pass" : "fail", std::move(witness)});
    }

    void skip(const std::string& id, const std::string& anchor, Json witness = Json::object()) {
        rep_.checks.push_back({id, anchor, "skipped", std::move(witness)});
    }

    Report finish() {
        rep_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
        return rep_;
    }

private:
    Report rep_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// shared enumeration helpers

/// Every nonempty set of pairwise separate roots at rank n.
inline std::vector<RootSet> all_basic_sets(int n) {
    const RootSet all = positive_roots(n);
    const auto& roots = all.roots();
    std::vector<RootSet> out;
    std::vector<Root> cur;
    const std::function<void(std::size_t)> walk = [&](std::size_t from) {
        if (!cur.empty()) out.emplace_back(n, cur);
        for (std::size_t t = from; t < roots.size(); ++t) {
            bool ok = true;
            for (const Root& c : cur)
                if (c.i == roots[t].i || c.j == roots[t].j) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(roots[t]);
            walk(t + 1);
            cur.pop_back();
        }
    };
    walk(0);
    return out;
}

/// Every assignment of a nonzero parameter to each root of d.
inline std::vector<FactorList> all_param_maps(const RootSet& d, int q) {
    std::vector<FactorList> out;
    FactorList cur;
    const std::function<void(std::size_t)> walk = [&](std::size_t t) {
        if (t == d.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v < q; ++v) {
            cur.push_back(ElemFactor{d[t], v});
            walk(t + 1);
            cur.pop_back();
        }
    };
    walk(0);
    return out;
}

// ---------------------------------------------------------------------------
// root combinatorics suite

inline Report suite_roots(int max_rank = 12) {
    detail::SuiteRunner run("roots", Json{{"max_rank", max_rank}});

    for (int n = 1; n <= 12; ++n)
        run.check("roots.count.n" + std::to_string(n), "sec-2.positive-roots",
                  positive_roots(n).size() == static_cast<std::size_t>(n) * (n - 1) / 2);

    for (int n = 2; n <= std::min(max_rank, 8); ++n) {
        const RootSet all = positive_roots(n);
        bool hooks_ok = true, regions_ok = true, pairs_ok = true, auto_ok = true;
        for (Root a : all) {
            const HookParts h = hook_parts(n, a);
            if (h.arm.set_intersect(h.leg).size() != 0 || h.arm.contains(a) || h.leg.contains(a))
                hooks_ok = false;
            if (h.hook.size() != static_cast<std::size_t>(2 * height(a) + 1)) hooks_ok = false;
            const RootSet base = region_roots(n, a, RegionKind::base);
            const RootSet sub = region_roots(n, a, RegionKind::subtri);
            const RootSet rad = region_roots(n, a, RegionKind::radical);
            if (base.set_union(h.arm) != all || base.set_intersect(h.arm).size() != 0) regions_ok = false;
            if (sub.set_union(rad) != all || sub.set_intersect(rad).size() != 0) regions_ok = false;
            if (graph_auto(n, graph_auto(n, a)) != a) auto_ok = false;
            for (Root b : all) {
                const PairClass pc = classify_pair(n, a, b);
                if (a == b && pc.relation != PairRelation::equal) pairs_ok = false;
                if (a != b && a.i == b.i && pc.relation != PairRelation::arm) pairs_ok = false;
                if (a != b && a.i != b.i && a.j == b.j && pc.relation != PairRelation::leg) pairs_ok = false;
                if (a.i != b.i && a.j != b.j && pc.hook_overlap.size() > 1) pairs_ok = false;
                const bool sep_a = a.i != b.i && a.j != b.j;
                const bool sep_im = graph_auto(n, a).i != graph_auto(n, b).i &&
                                    graph_auto(n, a).j != graph_auto(n, b).j;
                if (sep_a != sep_im) auto_ok = false;
            }
        }
        const std::string ns = std::to_string(n);
        run.check("roots.hooks.n" + ns, "sec-2.arm-leg-hook", hooks_ok);
        run.check("roots.regions.n" + ns, "sec-2.base-subtri-radical", regions_ok);
        run.check("roots.pairs.n" + ns, "sec-2.separate", pairs_ok);
        run.check("roots.graph-auto.n" + ns, "sec-4.3.graph-automorphism", auto_ok);
    }

    // decomposability: returned witnesses must satisfy the defining predicates
    for (int n = 4; n <= std::min(max_rank, 7); ++n) {
        bool ok = true;
        for (const RootSet& d : all_basic_sets(n)) {
            const BasicSet b = validate_basic_set(n, d);
            if (auto w = decompose_basic_set(n, b))
                if (!witness_is_valid(n, b, *w)) ok = false;
        }
        run.check("roots.witnesses.n" + std::to_string(n), "sec-3.decomposable", ok);
    }
    {
        const BasicSet dec = validate_basic_set(7, RootSet(7, {Root{3, 3}, Root{4, 4}, Root{2, 5}, Root{1, 6}}));
        const BasicSet ind =
            validate_basic_set(7, RootSet(7, {Root{1, 2}, Root{3, 4}, Root{2, 5}, Root{4, 6}}));
        run.check("roots.decomposable.sample", "sec-3.decomposable",
                  decompose_basic_set(7, dec).has_value());
        run.check("roots.indecomposable.sample", "sec-3.decomposable",
                  !decompose_basic_set(7, ind).has_value());
    }

    for (int n = 3; n <= std::min(max_rank, 8); ++n) {
        bool ok = true;
        for (int k = 1; k < n - 1; ++k) {
            const TkEmbedding emb = t_k_embedding(n, k);
            if (emb.roots.size() != static_cast<std::size_t>(n - 1) * (n - 2) / 2) ok = false;
            if (!emb.roots.is_closed()) ok = false;
            RootSet image(n - 1);
            for (const auto& [src, dst] : emb.phi) image.insert(dst);
            if (image != positive_roots(n - 1)) ok = false;
        }
        run.check("roots.tk.n" + std::to_string(n), "lemma-4.3.3", ok);
    }

    run.check("roots.mu", "sec-4.mu",
              mu(1) == 0 && mu(2) == 0 && mu(3) == 1 && mu(4) == 2 && mu(5) == 4 && mu(6) == 6 && mu(7) == 9);
    return run.finish();
}

// ---------------------------------------------------------------------------
// elementary characters: irreducibility, leg restriction, reciprocity

inline Report suite_lemma21(int n, int q, TableCache& cache) {
    detail::SuiteRunner run("lemma21", Json{{"n", n}, {"q", q}});
    (void)cache;
    const GroupHandle g = full_group(n, q);
    const ClassDataPtr big = make_class_data(g);

    for (Root a : positive_roots(n)) {
        for (int t = 1; t < q; ++t) {
            const BasicSymbol sym = elementary(n, q, a, t);
            const ClassFunction chi = basic_character_cf(big, sym);
            const std::string id = "lemma21.norm." + to_string(a) + ".t" + std::to_string(t);
            Bigint expected_degree = 1;
            for (int e = 0; e < height(a); ++e) expected_degree *= q;
            run.check(id, "lemma-2.1",
                      cf_inner(chi, chi) == 1 && chi.degree_int() == expected_degree,
                      Json{{"degree", bigint_to_json(chi.degree_int())}});
        }
        if (height(a) >= 1) {
            // restriction to the leg group is its regular character
            const ClassFunction chi = basic_character_cf(big, elementary(n, q, a, 1));
            const GroupHandle leg = subgroup_from_roots(n, q, hook_parts(n, a).leg);
            const ClassDataPtr legcd = make_class_data(leg);
            run.check("lemma21.leg-regular." + to_string(a), "corollary-2.2",
                      cf_restrict(chi, legcd) == ClassFunction::regular(legcd));
        }
    }

    // Frobenius reciprocity on a sweep of pairs
    bool fr_ok = true;
    for (Root a : positive_roots(n)) {
        const RootSet d(n, {a});
        const GroupHandle v = subgroup_from_roots(n, q, base_group_roots(n, d));
        const ClassDataPtr vcd = make_class_data(v);
        const ClassFunction lam = linear_lambda(vcd, elementary(n, q, a, 1));
        const ClassFunction ind = induce(lam, big);
        for (Root b : positive_roots(n)) {
            const ClassFunction other = basic_character_cf(big, elementary(n, q, b, 1));
            if (cf_inner(ind, other) != cf_inner(lam, cf_restrict(other, vcd))) fr_ok = false;
        }
    }
    run.check("lemma21.frobenius-reciprocity", "frobenius-reciprocity", fr_ok);
    return run.finish();
}

// ---------------------------------------------------------------------------
// one induced linear character equals the factorwise tensor

inline Report suite_lemma22(int n, int q) {
    detail::SuiteRunner run("lemma22", Json{{"n", n}, {"q", q}});
    const GroupHandle g = full_group(n, q);
    const ClassDataPtr big = make_class_data(g);

    for (const RootSet& d : all_basic_sets(n)) {
        for (const FactorList& phi : all_param_maps(d, q)) {
            const BasicSymbol sym(n, q, phi);
            const ClassFunction joint = basic_character_cf(big, sym);
            ClassFunction prod = ClassFunction::trivial(big);
            for (const ElemFactor& f : phi)
                prod = cf_tensor(prod, basic_character_cf(big, BasicSymbol(n, q, {f})));
            std::string id = "lemma22";
            for (const ElemFactor& f : phi)
                id += "." + std::to_string(f.root.i) + "-" + std::to_string(f.root.j) + "t" +
                      std::to_string(f.param);
            run.check(id, "lemma-2.2", joint == prod);
        }
    }

    // the class-function route through an explicit base-group table agrees
    bool lam_ok = true;
    for (Root a : positive_roots(n)) {
        const RootSet d(n, {a});
        const GroupHandle v = subgroup_from_roots(n, q, base_group_roots(n, d));
        const ClassDataPtr vcd = make_class_data(v);
        const ClassFunction lam = linear_lambda(vcd, elementary(n, q, a, 1));
        // multiplicativity of the linear character on every pair of classes
        if (induce(lam, big) != basic_character_cf(big, elementary(n, q, a, 1))) lam_ok = false;
    }
    run.check("lemma22.induced-route", "lemma-2.2", lam_ok);
    return run.finish();
}

// ---------------------------------------------------------------------------
// hook groups

inline Report suite_lemma32(int n, int q) {
    detail::SuiteRunner run("lemma32", Json{{"n", n}, {"q", q}});
    for (Root a : positive_roots(n)) {
        if (height(a) < 1) continue;
        const GroupHandle hook = subgroup_from_roots(n, q, hook_parts(n, a).hook);
        const CharTable t = irr_table(hook);
        const GroupHandle center = subgroup_from_roots(n, q, RootSet(n, {a}));
        const auto af = almost_faithful_subset(t, center);
        long long af_count = 0;
        bool degrees_ok = true;
        Bigint expected = 1;
        for (int e = 0; e < height(a); ++e) expected *= q;
        for (const auto& [sigma, idxs] : af) {
            af_count += static_cast<long long>(idxs.size());
            for (std::size_t i : idxs)
                if (t.irreducibles[i].degree_int() != expected) degrees_ok = false;
        }
        long long linear = 0;
        for (const auto& chi : t.irreducibles)
            if (chi.degree_int() == 1) ++linear;
        Bigint expected_linear = 1;
        for (int e = 0; e < 2 * height(a); ++e) expected_linear *= q;
        run.check("lemma32.hook." + to_string(a), "lemma-3.2",
                  af_count == q - 1 && degrees_ok && Bigint(linear) == expected_linear,
                  Json{{"almost_faithful", af_count}, {"linear", linear}});
    }
    return run.finish();
}

// ---------------------------------------------------------------------------
// products of two elementary characters against the oracle

inline std::string pair_case_label(int n, int q, Root a, int s, Root b, int t) {
    const FieldSpec& F = FieldSpec::get(q);
    if (a == b) return F.add(s, t) != 0 ? "iv" : "v";
    if (a.i == b.i || a.j == b.j) return "iii";
    return classify_pair(n, a, b).hook_overlap.empty() ? "i" : "ii";
}

inline Report suite_lemma34(int n, int q, TableCache& cache) {
    detail::SuiteRunner run("lemma34", Json{{"n", n}, {"q", q}});
    const GroupHandle g = full_group(n, q);
    const CharTable table = cache.get(g);
    const ClassDataPtr big = table.classes;

    std::vector<Root> nonlinear;
    for (Root r : positive_roots(n))
        if (height(r) >= 1) nonlinear.push_back(r);

    for (std::size_t x = 0; x < nonlinear.size(); ++x)
        for (std::size_t y = x; y < nonlinear.size(); ++y) {
            const Root a = nonlinear[x], b = nonlinear[y];
            for (int s = 1; s < q; ++s)
                for (int t = (x == y ? s : 1); t < q; ++t) {
                    const std::string label = pair_case_label(n, q, a, s, b, t);
                    const SuperExpr expr = tensor_normalize(
                        SuperExpr::of(elementary(n, q, a, s)), SuperExpr::of(elementary(n, q, b, t)));
                    const ClassFunction oracle = cf_tensor(basic_character_cf(big, elementary(n, q, a, s)),
                                                           basic_character_cf(big, elementary(n, q, b, t)));
                    // term-by-term: multiplicity vectors against the table agree
                    const auto lhs = decompose_into_irr(oracle, table);
                    std::map<std::size_t, Bigint> rhs;
                    for (const auto& [sym, coeff] : expr.terms())
                        for (const auto& [idx, mult] : decompose_into_irr(basic_character_cf(big, sym), table))
                            rhs[idx] += Bigint(coeff) * mult;
                    bool same = true;
                    std::map<std::size_t, Bigint> lhsm(lhs.begin(), lhs.end());
                    if (lhsm.size() != rhs.size()) same = false;
                    if (same)
                        for (const auto& [idx, mult] : lhsm)
                            if (!rhs.count(idx) || rhs.at(idx) != mult) same = false;
                    const std::string id = "lemma34.case-" + label + "." + to_string(a) + "s" +
                                           std::to_string(s) + "." + to_string(b) + "t" + std::to_string(t);
                    Json witness{{"case", label}, {"terms", expr_to_json(expr).size()}};
                    if (label == "iv" && height(a) >= 2) {
                        // multiplicity of the nested two-factor terms
                        const FieldSpec& F = FieldSpec::get(q);
                        const int u = F.add(s, t);
                        long long nested = -1;
                        bool uniform = true;
                        for (const auto& [sym, coeff] : expr.terms()) {
                            if (sym.factors().size() != 2) continue;
                            if (nested == -1) nested = coeff;
                            if (coeff != nested) uniform = false;
                        }
                        witness["bare_multiplicity"] =
                            expr.terms().count(BasicSymbol(n, q, {ElemFactor{a, u}}))
                                ? expr.terms().at(BasicSymbol(n, q, {ElemFactor{a, u}}))
                                : 0;
                        witness["nested_multiplicity_engine"] = nested;
                        witness["nested_multiplicity_printed"] = 1;
                        witness["nested_uniform"] = uniform;
                        witness["engine_agrees_with_printed"] = (nested == 1);
                    }
                    run.check(id, "lemma-3.4(" + label + ")", same, witness);
                }
        }
    return run.finish();
}

// ---------------------------------------------------------------------------
// the basic characters partition the irreducibles

inline Report suite_thm_partition(int n, int q, TableCache& cache) {
    detail::SuiteRunner run("thm-partition", Json{{"n", n}, {"q", q}});
    const GroupHandle g = full_group(n, q);
    const CharTable table = cache.get(g);
    const ClassDataPtr big = table.classes;

    std::vector<int> owners(table.count(), 0);
    bool all_chars_ok = true;
    long long basic_count = 0;
    for (const RootSet& d : all_basic_sets(n))
        for (const FactorList& phi : all_param_maps(d, q)) {
            ++basic_count;
            const ClassFunction xi = basic_character_cf(big, BasicSymbol(n, q, phi));
            try {
                for (const auto& [idx, mult] : decompose_into_irr(xi, table)) ++owners[idx];
            } catch (const ValidationError&) {
                all_chars_ok = false;
            }
        }
    bool partition_ok = all_chars_ok;
    long long covered = 0;
    for (std::size_t i = 0; i < table.count(); ++i) {
        const bool is_trivial = (table.irreducibles[i] == ClassFunction::trivial(big));
        if (is_trivial) {
            if (owners[i] != 0) partition_ok = false;
        } else {
            if (owners[i] != 1) partition_ok = false;
            ++covered;
        }
    }
    run.check("thm-partition.exhaustive", "thm-2.2",
              partition_ok && covered + 1 == static_cast<long long>(table.count()),
              Json{{"basic_characters", basic_count}, {"irreducibles", table.count()}});
    return run.finish();
}

// ---------------------------------------------------------------------------
// almost faithful factorization through the top hook group

inline Report suite_factorization(int n, int q, TableCache& cache) {
    detail::SuiteRunner run("factorization", Json{{"n", n}, {"q", q}});
    const GroupHandle g = full_group(n, q);
    const CharTable table = cache.get(g);
    const Root top{1, n - 1};
    const GroupHandle center = subgroup_from_roots(n, q, RootSet(n, {top}));
    const auto af = almost_faithful_subset(table, center);
    const GroupHandle hook = subgroup_from_roots(n, q, hook_parts(n, top).hook);
    const auto quotient_irr = irr_with_kernel_containing(table, hook);

    long long af_total = 0;
    for (const auto& [sigma, idxs] : af) af_total += static_cast<long long>(idxs.size());
    run.check("factorization.count", "thm-factorization",
              af_total == static_cast<long long>(q - 1) * static_cast<long long>(quotient_irr.size()),
              Json{{"almost_faithful", af_total}, {"quotient_irreducibles", quotient_irr.size()}});

    // per central character: degrees are q^{n-2} times the quotient degrees
    Bigint shift = 1;
    for (int e = 0; e < n - 2; ++e) shift *= q;
    std::vector<Bigint> quotient_degrees;
    for (std::size_t i : quotient_irr) quotient_degrees.push_back(table.irreducibles[i].degree_int() * shift);
    std::sort(quotient_degrees.begin(), quotient_degrees.end());
    bool shift_ok = true;
    for (const auto& [sigma, idxs] : af) {
        std::vector<Bigint> degrees;
        for (std::size_t i : idxs) degrees.push_back(table.irreducibles[i].degree_int());
        std::sort(degrees.begin(), degrees.end());
        if (degrees != quotient_degrees) shift_ok = false;
    }
    run.check("factorization.degree-shift", "thm-factorization", shift_ok && af.size() == static_cast<std::size_t>(q - 1));
    return run.finish();
}

// ---------------------------------------------------------------------------
// the rank-lowering embeddings

inline Report suite_lemma433(int n, int q) {
    detail::SuiteRunner run("lemma433", Json{{"n", n}, {"q", q}});
    for (int k = 1; k < n - 1; ++k) {
        const TkEmbedding emb = t_k_embedding(n, k);
        const GroupHandle dom = subgroup_from_roots(n, q, emb.roots);
        const GroupHandle cod = full_group(n - 1, q);
        const HomCheck hc = verify_homomorphism(emb.phi, dom, cod);
        run.check("lemma433.n" + std::to_string(n) + ".q" + std::to_string(q) + ".k" + std::to_string(k),
                  "lemma-4.3.3", hc.bijective && hc.multiplicative,
                  Json{{"bijective", hc.bijective}, {"multiplicative", hc.multiplicative}});
    }
    return run.finish();
}

// ---------------------------------------------------------------------------
// symbolic counting suite

inline Report suite_extremal(int max_rank = 12) {
    detail::SuiteRunner run("extremal", Json{{"max_rank", max_rank}});
    bool closed_rec = true;
    for (int n = 5; n <= 40; ++n)
        if (n_second(n, SecondMode::closed) != n_second(n, SecondMode::recursion)) closed_rec = false;
    run.check("extremal.second.closed-vs-recursion", "lemma-4.3.1", closed_rec);

    bool nonneg = true;
    for (int n = 1; n <= 40; ++n) {
        if (!nonnegative_in_qminus1(n_top(n))) nonneg = false;
        if (n >= 4 && !nonnegative_in_qminus1(n_second(n))) nonneg = false;
    }
    run.check("extremal.qminus1-nonnegative", "sec-1.qminus1-conjecture", nonneg);

    const BaseValueTable seeds = BaseValueTable::with_defaults();
    bool sums_ok = true;
    for (int n = 1; n <= max_rank; ++n)
        if (extremal_total(n, 1).as_polynomial() != n_top(n)) sums_ok = false;
    run.check("extremal.rank1-sum", "lemma-4.2.1", sums_ok);

    sums_ok = true;
    for (int n = 5; n <= max_rank; ++n)
        if (extremal_total(n, 2).as_polynomial() != n_second(n)) sums_ok = false;
    run.check("extremal.rank2-sum", "lemma-4.3.1", sums_ok);

    sums_ok = true;
    for (int n = 7; n <= max_rank; ++n)
        if (!(extremal_total(n, 3) == n_third(n, seeds, ThirdVariant::prose))) sums_ok = false;
    run.check("extremal.rank3-sum", "thm-4.4.1", sums_ok);

    // the two recursion variants coincide at q = 2
    const SeededPoly prose = n_third(7, seeds, ThirdVariant::prose);
    const SeededPoly theorem = n_third(7, seeds, ThirdVariant::theorem);
    bool variants_ok = prose.terms() == theorem.terms() &&
                       (prose.constant() - theorem.constant()).eval(2) == 0;
    run.check("extremal.third-variants-at-q2", "thm-4.4.1", variants_ok,
              Json{{"prose_constant", prose.constant().str()},
                   {"theorem_constant", theorem.constant().str()}});
    return run.finish();
}

// ---------------------------------------------------------------------------
// Mackey norms at rank 7 without any table

inline Report suite_mackey7(int samples = 50) {
    detail::SuiteRunner run("mackey7", Json{{"n", 7}, {"q", 2}, {"samples", samples}});
    const int n = 7, q = 2;
    const GroupHandle g = full_group(n, q);

    const auto data = [&](std::initializer_list<Root> roots) {
        FactorList fs;
        for (Root r : roots) fs.push_back(ElemFactor{r, 1});
        return BasicData(n, q, fs);
    };

    const BasicData case_iii = data({Root{2, 4}, Root{1, 5}, Root{3, 6}});
    const BasicData case_v = data({Root{1, 4}, Root{2, 5}, Root{3, 6}});
    const BasicData crossing = data({Root{1, 5}, Root{2, 6}});

    run.check("mackey7.case-iii", "sec-4.3.case-iii", mackey_inner(g, case_iii, case_iii) == 4);
    run.check("mackey7.case-v", "sec-4.3.case-v", mackey_inner(g, case_v, case_v) == 8);
    run.check("mackey7.crossing-pair", "lemma-3.4(ii)", mackey_inner(g, crossing, crossing) == 2);

    bool singles = true;
    for (Root r : positive_roots(n)) {
        const BasicData b = data({r});
        if (mackey_inner(g, b, b) != 1) singles = false;
    }
    run.check("mackey7.single-roots", "lemma-2.1", singles);

    // symbolic profiles predict the same norms
    const auto profile_norm = [&](const BasicData& b) {
        return stats_norm(constituent_stats(b.symbol), 2);
    };
    run.check("mackey7.stats-norms", "lemma-3.6",
              profile_norm(case_iii) == 4 && profile_norm(case_v) == 8 && profile_norm(crossing) == 2);

    // orthogonality of distinct basic characters on sampled pairs
    std::mt19937_64 rng(20240731);
    const RootSet all = positive_roots(n);
    const auto random_basic = [&]() {
        while (true) {
            std::vector<Root> pool(all.begin(), all.end());
            std::shuffle(pool.begin(), pool.end(), rng);
            FactorList fs;
            std::vector<bool> row(static_cast<std::size_t>(n) + 1, false), col(static_cast<std::size_t>(n) + 1, false);
            const std::size_t want = 1 + rng() % 3;
            std::size_t arm_total = 0;
            for (Root r : pool) {
                if (fs.size() == want) break;
                if (row[static_cast<std::size_t>(r.i)] || col[static_cast<std::size_t>(r.j)]) continue;
                row[static_cast<std::size_t>(r.i)] = col[static_cast<std::size_t>(r.j)] = true;
                fs.push_back(ElemFactor{r, 1});
                arm_total += static_cast<std::size_t>(height(r));
            }
            if (fs.empty() || arm_total > 13) continue;
            return BasicData(n, q, fs);
        }
    };
    int zeros = 0, tried = 0;
    while (tried < samples) {
        const BasicData b1 = random_basic();
        const BasicData b2 = random_basic();
        if (b1.symbol == b2.symbol) continue;
        ++tried;
        if (mackey_inner(g, b1, b2) == 0) ++zeros;
    }
    run.check("mackey7.distinct-orthogonal", "thm-2.2", zeros == samples,
              Json{{"sampled", tried}, {"zeros", zeros}});
    return run.finish();
}

}  // namespace utq
