#include <catch2/catch_amalgamated.hpp>

#include "utq/roots.hpp"

using namespace utq;

namespace {

RootSet rs(int n, std::initializer_list<Root> roots) { return RootSet(n, roots); }

// brute-force hook membership straight from the row/column description
bool in_hook(Root a, Root x) {
    return (x.i == a.i && x.j >= a.i && x.j <= a.j) || (x.j == a.j && x.i >= a.i && x.i <= a.j);
}

}  // namespace

TEST_CASE("positive root sets have triangular-number sizes") {
    CHECK(positive_roots(3).roots() == std::vector<Root>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(positive_roots(5).size() == 10);
    CHECK(positive_roots(1).empty());
    for (int n = 1; n <= 12; ++n)
        CHECK(positive_roots(n).size() == static_cast<std::size_t>(n) * (n - 1) / 2);
}

TEST_CASE("hook parts split into arm, root and leg") {
    const HookParts h = hook_parts(7, Root{2, 5});
    CHECK(h.arm == rs(7, {{2, 2}, {2, 3}, {2, 4}}));
    CHECK(h.leg == rs(7, {{3, 5}, {4, 5}, {5, 5}}));

    const HookParts simple = hook_parts(6, Root{3, 3});
    CHECK(simple.arm.empty());
    CHECK(simple.leg.empty());

    const HookParts h13 = hook_parts(4, Root{1, 3});
    CHECK(h13.hook == rs(4, {{1, 3}, {1, 1}, {1, 2}, {2, 3}, {3, 3}}));
    CHECK(h13.hook.size() == 5);

    for (Root a : positive_roots(7)) {
        const HookParts parts = hook_parts(7, a);
        CHECK(parts.hook.size() == static_cast<std::size_t>(2 * height(a) + 1));
        for (Root x : positive_roots(7))
            CHECK(parts.hook.contains(x) == in_hook(a, x));
    }

    CHECK_THROWS_AS(hook_parts(4, Root{1, 4}), ValidationError);
}

TEST_CASE("regions: base, interval triangle, radical") {
    CHECK(region_roots(4, Root{1, 3}, RegionKind::base) == rs(4, {{2, 2}, {3, 3}, {2, 3}, {1, 3}}));
    CHECK(region_roots(4, Root{1, 3}, RegionKind::radical).empty());
    CHECK(region_roots(4, Root{2, 3}, RegionKind::radical) == rs(4, {{1, 1}, {1, 2}, {1, 3}}));

    for (Root a : positive_roots(6)) {
        const RootSet all = positive_roots(6);
        const RootSet base = region_roots(6, a, RegionKind::base);
        const RootSet arm = hook_parts(6, a).arm;
        CHECK(base.set_union(arm) == all);
        CHECK(base.set_intersect(arm).empty());
        const RootSet sub = region_roots(6, a, RegionKind::subtri);
        const RootSet rad = region_roots(6, a, RegionKind::radical);
        CHECK(sub.set_union(rad) == all);
        CHECK(sub.set_intersect(rad).empty());
        CHECK(sub.contains(a));
        CHECK(sub.is_closed());
    }
}

TEST_CASE("pair classification matches the hook intersections") {
    const PairClass crossing = classify_pair(4, Root{1, 2}, Root{2, 3});
    CHECK(crossing.relation == PairRelation::separate_crossing);
    CHECK(crossing.hook_overlap == rs(4, {{2, 2}}));

    const PairClass disjoint = classify_pair(5, Root{1, 2}, Root{3, 4});
    CHECK(disjoint.relation == PairRelation::separate_disjoint);
    CHECK(disjoint.hook_overlap.empty());

    CHECK(classify_pair(4, Root{2, 3}, Root{1, 3}).relation == PairRelation::leg);
    CHECK(classify_pair(4, Root{1, 1}, Root{1, 3}).relation == PairRelation::arm);
    CHECK(classify_pair(4, Root{1, 3}, Root{1, 3}).relation == PairRelation::equal);

    for (Root a : positive_roots(6))
        for (Root b : positive_roots(6)) {
            const PairClass pc = classify_pair(6, a, b);
            if (a.i != b.i && a.j != b.j) {
                CHECK((pc.relation == PairRelation::separate_disjoint ||
                       pc.relation == PairRelation::separate_crossing));
                CHECK(pc.hook_overlap.size() <= 1);
            }
        }
}

TEST_CASE("basic set validation rejects shared rows and columns") {
    CHECK_NOTHROW(validate_basic_set(7, rs(7, {{1, 2}, {3, 4}, {2, 5}, {4, 6}})));
    CHECK_THROWS_AS(validate_basic_set(4, rs(4, {{1, 2}, {1, 3}})), SameRowError);
    CHECK_THROWS_AS(validate_basic_set(4, rs(4, {{1, 3}, {2, 3}})), SameColumnError);
    CHECK_THROWS_AS(validate_basic_set(4, RootSet(4)), EmptySetError);
    CHECK_NOTHROW(validate_basic_set(5, rs(5, {{2, 3}})));
}

TEST_CASE("decomposability search returns a predicate-checked witness") {
    // the sample decomposable set: the canonical-order search settles on the
    // pivot (2,5), whose interval triangle swallows {a_3, a_4, a_{2,5}}
    const BasicSet dec = validate_basic_set(7, rs(7, {{3, 3}, {4, 4}, {2, 5}, {1, 6}}));
    const auto w = decompose_basic_set(7, dec);
    REQUIRE(w.has_value());
    CHECK(w->pivot == Root{2, 5});
    CHECK(w->part_a.roots() == rs(7, {{3, 3}, {4, 4}, {2, 5}}));
    CHECK(w->part_b.roots() == rs(7, {{1, 6}}));
    CHECK(witness_is_valid(7, dec, *w));

    // the split used to motivate the definition is also a valid witness
    const DecompositionWitness alt{Root{3, 4}, validate_basic_set(7, rs(7, {{3, 3}, {4, 4}})),
                                   validate_basic_set(7, rs(7, {{2, 5}, {1, 6}}))};
    CHECK(witness_is_valid(7, dec, alt));

    const BasicSet ind = validate_basic_set(7, rs(7, {{1, 2}, {3, 4}, {2, 5}, {4, 6}}));
    CHECK_FALSE(decompose_basic_set(7, ind).has_value());

    CHECK_FALSE(decompose_basic_set(5, validate_basic_set(5, rs(5, {{1, 4}}))).has_value());
}

TEST_CASE("graph automorphism is the transpose-and-flip involution") {
    CHECK(graph_auto(7, Root{1, 2}) == Root{5, 6});
    CHECK(graph_auto(7, Root{1, 6}) == Root{1, 6});
    CHECK(graph_auto(5, Root{2, 2}) == Root{3, 3});
    for (Root a : positive_roots(9)) {
        CHECK(graph_auto(9, graph_auto(9, a)) == a);
        CHECK(height(graph_auto(9, a)) == height(a));
    }
    // separateness is preserved, so basic sets map to basic sets
    for (Root a : positive_roots(6))
        for (Root b : positive_roots(6)) {
            const bool sep = a.i != b.i && a.j != b.j;
            const Root ia = graph_auto(6, a), ib = graph_auto(6, b);
            CHECK(sep == (ia.i != ib.i && ia.j != ib.j));
        }
}

TEST_CASE("mu gives the top degree exponent") {
    CHECK(mu(7) == 9);
    CHECK(mu(6) == 6);
    CHECK(mu(2) == 0);
    CHECK(mu(1) == 0);
    for (int n = 2; n <= 12; ++n) CHECK(mu(n) == mu(n - 2 < 1 ? n : n - 2) + (n < 3 ? 0 : n - 2));
}

TEST_CASE("rank-lowering root subsets are closed and map bijectively") {
    const TkEmbedding emb = t_k_embedding(4, 1);
    CHECK(emb.roots == rs(4, {{3, 3}, {1, 2}, {1, 3}}));
    CHECK(emb.phi.at(Root{1, 2}) == Root{1, 1});
    CHECK(emb.phi.at(Root{3, 3}) == Root{2, 2});
    CHECK(emb.phi.at(Root{1, 3}) == Root{1, 2});
    CHECK(emb.roots.contains(root_sum(Root{1, 2}, Root{3, 3})));

    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k < n - 1; ++k) {
            const TkEmbedding e = t_k_embedding(n, k);
            CHECK(e.roots.size() == static_cast<std::size_t>(n - 1) * (n - 2) / 2);
            CHECK(e.roots.is_closed());
            RootSet image(n - 1);
            for (const auto& [src, dst] : e.phi) {
                CHECK(e.roots.contains(src));
                image.insert(dst);
            }
            CHECK(image == positive_roots(n - 1));
            // additivity of the root map
            for (Root a : e.roots)
                for (Root b : e.roots)
                    if (roots_compose(a, b) && e.roots.contains(root_sum(a, b)))
                        CHECK(root_sum(e.phi.at(a), e.phi.at(b)) == e.phi.at(root_sum(a, b)));
        }

    CHECK_THROWS_AS(t_k_embedding(4, 3), ValidationError);
    CHECK_THROWS_AS(t_k_embedding(4, 0), ValidationError);
}
