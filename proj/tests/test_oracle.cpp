#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "utq/constituents.hpp"
#include "utq/oracle.hpp"

using namespace utq;

namespace {

Bigint qpow(int q, int e) {
    Bigint out = 1;
    for (int t = 0; t < e; ++t) out *= q;
    return out;
}

}  // namespace

TEST_CASE("tables of the rank-3 groups") {
    const CharTable t32 = irr_table(full_group(3, 2));
    REQUIRE(t32.count() == 5);
    std::vector<Bigint> degrees;
    for (const auto& chi : t32.irreducibles) degrees.push_back(chi.degree_int());
    CHECK(degrees == std::vector<Bigint>{1, 1, 1, 1, 2});
    CHECK(degree_histogram(t32, 2) == std::map<int, long long>{{0, 4}, {1, 1}});

    const CharTable t33 = irr_table(full_group(3, 3));
    REQUIRE(t33.count() == 11);
    CHECK(degree_histogram(t33, 3) == std::map<int, long long>{{0, 9}, {1, 2}});
}

TEST_CASE("orthogonality and completeness on U_4(3)") {
    const CharTable t = irr_table(full_group(4, 3));
    const ClassData& cd = *t.classes;
    Bigint d2 = 0;
    for (const auto& chi : t.irreducibles) d2 += chi.degree_int() * chi.degree_int();
    CHECK(d2 == cd.group.order());
    CHECK(t.count() == cd.count());

    // row orthogonality
    for (std::size_t a = 0; a < t.count(); ++a)
        for (std::size_t b = a; b < t.count(); ++b)
            CHECK(cf_inner(t.irreducibles[a], t.irreducibles[b]) == (a == b ? 1 : 0));

    // column orthogonality: sum over irreducibles of chi(g) conj(chi(h))
    for (std::size_t ca = 0; ca < cd.count(); ++ca)
        for (std::size_t cb = ca; cb < cd.count(); ++cb) {
            Cyclo acc = Cyclo::zero();
            for (const auto& chi : t.irreducibles) acc += chi.at_class(ca) * chi.at_class(cb).conj();
            if (ca == cb)
                CHECK(acc == Cyclo::from_rational(Rat(cd.group.order()) / Rat(cd.sizes[ca])));
            else
                CHECK(acc.is_zero());
        }

    CHECK(degree_histogram(t, 3) == std::map<int, long long>{{0, 27}, {1, 24}, {2, 6}});
}

TEST_CASE("linear characters of base groups and their inductions") {
    const GroupHandle g = full_group(4, 2);
    const ClassDataPtr big = make_class_data(g);
    const BasicSymbol sym = elementary(4, 2, Root{1, 3}, 1);

    const GroupHandle v = subgroup_from_roots(4, 2, base_group_roots(4, sym.root_set()));
    CHECK(v.order() == 16);
    const ClassDataPtr vcd = make_class_data(v);
    const ClassFunction lam = linear_lambda(vcd, sym);

    // value -1 on x_{a_{1,3}}(1), value 1 on x_{a_{2,3}}(1)
    const GenericOps ops(4, FieldSpec::get(2));
    CHECK(lam.at_element(*element_index(v, ops.root_elem(Root{1, 3}, 1))) ==
          Cyclo::from_rational(-1, 2));
    CHECK(lam.at_element(*element_index(v, ops.root_elem(Root{2, 3}, 1))) == Cyclo::one());

    // multiplicativity of the linear character over the whole base group
    for (std::uint64_t a = 0; a < v.order_u64(); ++a)
        for (std::uint64_t b = 0; b < v.order_u64(); ++b) {
            const UTMat prod = ops.mul(element_matrix(v, a), element_matrix(v, b));
            CHECK(lam.at_element(*element_index(v, prod)) ==
                  lam.at_element(a) * lam.at_element(b));
        }

    // induction multiplies the degree by the index and lands irreducible
    const ClassFunction ind = induce(lam, big);
    CHECK(ind.degree_int() == 4);
    CHECK(cf_inner(ind, ind) == 1);
    CHECK(ind == basic_character_cf(big, sym));

    // the same parameters on GF(3): exhaustive multiplicativity
    const GroupHandle g3 = full_group(4, 3);
    const BasicSymbol sym3 = elementary(4, 3, Root{1, 3}, 1);
    const GroupHandle v3 = subgroup_from_roots(4, 3, base_group_roots(4, sym3.root_set()));
    const ClassDataPtr v3cd = make_class_data(v3);
    const ClassFunction lam3 = linear_lambda(v3cd, sym3);
    const GenericOps ops3(4, FieldSpec::get(3));
    for (std::uint64_t a = 0; a < v3.order_u64(); ++a)
        for (std::uint64_t b = 0; b < v3.order_u64(); ++b) {
            const UTMat prod = ops3.mul(element_matrix(v3, a), element_matrix(v3, b));
            CHECK(lam3.at_element(*element_index(v3, prod)) ==
                  lam3.at_element(a) * lam3.at_element(b));
        }

    CHECK_THROWS_AS(linear_lambda(big, sym), ValidationError);
}

TEST_CASE("induction from the trivial subgroup gives the regular character") {
    const GroupHandle g = full_group(3, 3);
    const ClassDataPtr big = make_class_data(g);
    const GroupHandle one = subgroup_from_roots(3, 3, RootSet(3));
    const ClassDataPtr onecd = make_class_data(one);
    const ClassFunction reg = induce(ClassFunction::trivial(onecd), big);
    CHECK(reg == ClassFunction::regular(big));
    CHECK(cf_inner(reg, ClassFunction::trivial(big)) == 1);

    // the regular character decomposes with multiplicity = degree
    const CharTable t = irr_table(big);
    for (const auto& [idx, mult] : decompose_into_irr(reg, t))
        CHECK(mult == t.irreducibles[idx].degree_int());
}

TEST_CASE("restriction of an elementary character to its leg group is regular") {
    const GroupHandle g = full_group(4, 2);
    const ClassDataPtr big = make_class_data(g);
    const ClassFunction chi = basic_character_cf(big, elementary(4, 2, Root{1, 3}, 1));
    const GroupHandle leg = subgroup_from_roots(4, 2, hook_parts(4, Root{1, 3}).leg);
    const ClassDataPtr legcd = make_class_data(leg);
    CHECK(cf_restrict(chi, legcd) == ClassFunction::regular(legcd));
}

TEST_CASE("crossing basic characters split into two degree-2 constituents") {
    const GroupHandle g = full_group(4, 2);
    const CharTable t = irr_table(g);
    const ClassFunction xi = basic_character_cf(
        t.classes, BasicSymbol(4, 2, {ElemFactor{Root{1, 2}, 1}, ElemFactor{Root{2, 3}, 1}}));
    const auto parts = decompose_into_irr(xi, t);
    REQUIRE(parts.size() == 2);
    for (const auto& [idx, mult] : parts) {
        CHECK(mult == 1);
        CHECK(t.irreducibles[idx].degree_int() == 2);
    }
}

TEST_CASE("almost faithful irreducibles bucket by central character") {
    const CharTable t32 = irr_table(full_group(3, 2));
    const auto af32 = almost_faithful_subset(t32, subgroup_from_roots(3, 2, RootSet(3, {Root{1, 2}})));
    std::size_t total = 0;
    for (const auto& [sigma, idxs] : af32) total += idxs.size();
    CHECK(total == 1);
    CHECK(t32.irreducibles[af32.begin()->second[0]].degree_int() == 2);

    const CharTable t33 = irr_table(full_group(3, 3));
    const auto af33 = almost_faithful_subset(t33, subgroup_from_roots(3, 3, RootSet(3, {Root{1, 2}})));
    total = 0;
    for (const auto& [sigma, idxs] : af33) total += idxs.size();
    CHECK(total == 2);
    CHECK(af33.size() == 2);  // one per nontrivial central parameter

    const CharTable t42 = irr_table(full_group(4, 2));
    const auto af42 = almost_faithful_subset(t42, subgroup_from_roots(4, 2, RootSet(4, {Root{1, 3}})));
    total = 0;
    for (const auto& [sigma, idxs] : af42) {
        total += idxs.size();
        for (std::size_t i : idxs) CHECK(t42.irreducibles[i].degree_int() == 4);
    }
    CHECK(total == 2);

    // a wrong center handle is rejected
    CHECK_THROWS_AS(almost_faithful_subset(t42, subgroup_from_roots(4, 2, RootSet(4, {Root{2, 3}}))),
                    ValidationError);
}

TEST_CASE("every irreducible degree is a power of q bounded by the top exponent") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
        const CharTable t = irr_table(full_group(n, q));
        const auto hist = degree_histogram(t, q);
        for (const auto& [e, count] : hist) {
            CHECK(e <= mu(n));
            CHECK(count > 0);
        }
        CHECK(hist.count(mu(n)) == 1);
        CHECK(Bigint(hist.at(0)) == qpow(q, n - 1));
    }
}

TEST_CASE("Mackey norms agree with explicit decompositions on small groups") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}}) {
        const GroupHandle g = full_group(n, q);
        const CharTable t = irr_table(g);
        const std::vector<FactorList> data = {
            {ElemFactor{Root{1, 3}, 1}},
            {ElemFactor{Root{1, 2}, 1}, ElemFactor{Root{2, 3}, 1}},
            {ElemFactor{Root{2, 2}, 1}, ElemFactor{Root{1, 3}, 1}},
        };
        for (const FactorList& fs : data) {
            const BasicData b(n, q, fs);
            const ClassFunction xi = basic_character_cf(t.classes, b.symbol);
            Bigint norm = 0;
            for (const auto& [idx, mult] : decompose_into_irr(xi, t)) norm += mult * mult;
            CHECK(mackey_inner(g, b, b) == norm);
            CHECK(cf_inner(xi, xi) == Rat(norm));
            // the symbolic constituent profile predicts the same norm
            CHECK(stats_norm(constituent_stats(b.symbol), q) == norm);
        }
        // distinct basic data are orthogonal
        const BasicData b1(n, q, {ElemFactor{Root{1, 3}, 1}});
        const BasicData b2(n, q, {ElemFactor{Root{1, 2}, 1}});
        CHECK(mackey_inner(g, b1, b2) == 0);
        const ClassFunction x1 = basic_character_cf(t.classes, b1.symbol);
        const ClassFunction x2 = basic_character_cf(t.classes, b2.symbol);
        CHECK(cf_inner(x1, x2) == 0);
    }
}

TEST_CASE("distinct basic characters are Mackey-orthogonal at ranks 5 and 6") {
    std::mt19937_64 rng(515);
    for (int n : {5, 6}) {
        const GroupHandle g = full_group(n, 2);
        const RootSet all = positive_roots(n);
        const auto random_basic = [&]() {
            while (true) {
                std::vector<Root> pool(all.begin(), all.end());
                std::shuffle(pool.begin(), pool.end(), rng);
                FactorList fs;
                std::vector<bool> row(static_cast<std::size_t>(n) + 1), col(static_cast<std::size_t>(n) + 1);
                const std::size_t want = 1 + rng() % 2;
                for (Root r : pool) {
                    if (fs.size() == want) break;
                    if (row[static_cast<std::size_t>(r.i)] || col[static_cast<std::size_t>(r.j)]) continue;
                    row[static_cast<std::size_t>(r.i)] = col[static_cast<std::size_t>(r.j)] = true;
                    fs.push_back(ElemFactor{r, 1});
                }
                if (!fs.empty()) return BasicData(n, 2, fs);
            }
        };
        int done = 0;
        while (done < 15) {
            const BasicData b1 = random_basic();
            const BasicData b2 = random_basic();
            if (b1.symbol == b2.symbol) continue;
            ++done;
            CHECK(mackey_inner(g, b1, b2) == 0);
        }
    }
}

TEST_CASE("Mackey caps are enforced") {
    Caps tight;
    tight.cosets = 4;
    const GroupHandle g = full_group(5, 2);
    const BasicData b(5, 2, {ElemFactor{Root{1, 4}, 1}});
    CHECK_THROWS_AS(mackey_inner(g, b, b, tight), CapExceeded);
}
