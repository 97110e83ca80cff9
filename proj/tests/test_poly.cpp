#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "utq/counting.hpp"

using namespace utq;

TEST_CASE("exact polynomial ring arithmetic") {
    const PolyQ p = PolyQ::q() * PolyQ::qm1() * (PolyQ{{-1, 2}});  // q(q-1)(2q-1)
    CHECK(p.eval(2) == 6);
    CHECK(PolyQ::qm1() * (PolyQ{{1, 1}}) == PolyQ{{-1, 0, 1}});  // (q-1)(q+1) = q^2-1
    CHECK((PolyQ::qm1_pow(3) * PolyQ::q()).eval(1) == 0);
    CHECK(PolyQ().degree() == -1);
    CHECK((PolyQ{{1, 2}} - PolyQ{{1, 2}}).is_zero());
}

TEST_CASE("change of basis to powers of (q-1) and back") {
    // q(q-1)^2 = (q-1)^3 + (q-1)^2
    const PolyQ p = PolyQ::q() * PolyQ::qm1_pow(2);
    CHECK(to_qminus1(p) == std::vector<Bigint>{0, 0, 1, 1});
    CHECK(to_qminus1(PolyQ::qm1_pow(4)) == std::vector<Bigint>{0, 0, 0, 0, 1});
    CHECK(to_qminus1(PolyQ::q() * PolyQ::q()) == std::vector<Bigint>{1, 2, 1});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Bigint> coeffs;
        const int deg = static_cast<int>(rng() % 12);
        for (int t = 0; t <= deg; ++t) coeffs.push_back(Bigint(static_cast<std::int64_t>(rng() % 41) - 20));
        const PolyQ p2{coeffs};
        CHECK(from_qminus1(to_qminus1(p2)) == p2);
    }
}

TEST_CASE("top-degree counts") {
    CHECK(n_top(7) == PolyQ::qm1_pow(3));
    CHECK(n_top(6) == PolyQ::q() * PolyQ::qm1_pow(2));
    CHECK(n_top(2) == PolyQ::q());
    CHECK(n_top(1) == PolyQ::constant(1));
    CHECK(n_top(3) == PolyQ::qm1());
}

TEST_CASE("second-highest counts: closed forms and the recursion agree") {
    CHECK(n_second(5) == PolyQ::q() * PolyQ::qm1() * PolyQ{{-1, 2}});
    CHECK(n_second(6) == PolyQ::q() * PolyQ::qm1_pow(2) * PolyQ{{1, 2}});
    CHECK(n_second(4) == PolyQ::q() * PolyQ::qm1() * PolyQ{{1, 1}});
    CHECK(n_second(5, SecondMode::recursion) == n_second(5, SecondMode::closed));
    for (int n = 5; n <= 40; ++n)
        CHECK(n_second(n, SecondMode::recursion) == n_second(n, SecondMode::closed));
    CHECK_THROWS_AS(n_second(3), ValidationError);
    CHECK_THROWS_AS(n_second(4, SecondMode::recursion), ValidationError);
}

TEST_CASE("nonnegativity in the (q-1) basis for counted families") {
    for (int n = 1; n <= 40; ++n) {
        CHECK(nonnegative_in_qminus1(n_top(n)));
        if (n >= 4) CHECK(nonnegative_in_qminus1(n_second(n)));
    }
}

TEST_CASE("third-highest counts are seed-linear forms") {
    const BaseValueTable seeds = BaseValueTable::with_defaults();
    const SeededPoly third7 = n_third(7, seeds, ThirdVariant::prose);

    // (q-1)*N_{5,2} + q^3(q-1)^2 + 2 q^2 (q-1)^3 + (q-1)^4
    REQUIRE(third7.terms().size() == 1);
    CHECK(third7.terms().begin()->first == SeedKey{5, 2});
    CHECK(third7.terms().begin()->second == PolyQ::qm1());
    const PolyQ expected_const = PolyQ::q() * PolyQ::q() * PolyQ::q() * PolyQ::qm1_pow(2) +
                                 PolyQ::constant(2) * PolyQ::q() * PolyQ::q() * PolyQ::qm1_pow(3) +
                                 PolyQ::qm1_pow(4);
    CHECK(third7.constant() == expected_const);
    CHECK(expected_const.eval(2) == 17);

    // both variants coincide at q = 2
    const SeededPoly theorem7 = n_third(7, seeds, ThirdVariant::theorem);
    CHECK(theorem7.terms() == third7.terms());
    CHECK((third7.constant() - theorem7.constant()).eval(2) == 0);

    // an injected per-q value makes the evaluation exact: (q-1)*B + 17 at q=2
    BaseValueTable with_value = seeds;
    with_value.set_value({5, 2}, 2, 1000);
    CHECK(third7.eval(2, with_value) == 1000 + 17);
    CHECK_THROWS_AS(third7.eval(3, with_value), SeededPoly::MissingSeed);
    CHECK_THROWS_AS(third7.as_polynomial(), Unsupported);

    // n = 9 still only depends on the rank-5 seed
    const SeededPoly third9 = n_third(9, seeds, ThirdVariant::prose);
    REQUIRE(third9.terms().size() == 1);
    CHECK(third9.terms().begin()->first == SeedKey{5, 2});
    // even ranks depend on the rank-6 seed instead
    const SeededPoly third8 = n_third(8, seeds, ThirdVariant::prose);
    REQUIRE(third8.terms().size() == 1);
    CHECK(third8.terms().begin()->first == SeedKey{6, 4});

    CHECK_THROWS_AS(n_third(6, seeds), ValidationError);
}
