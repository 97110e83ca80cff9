#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "utq/serialize.hpp"

using namespace utq;

TEST_CASE("polynomial JSON round-trips in both bases") {
    const PolyQ p = PolyQ::q() * PolyQ::qm1_pow(2);
    CHECK(poly_from_json(poly_to_json(p, "q")) == p);
    CHECK(poly_from_json(poly_to_json(p, "q-1")) == p);
    const Json j = poly_to_json(p, "q-1");
    CHECK(j.at("basis") == "q-1");
    CHECK(j.at("coeffs") == Json::array({0, 0, 1, 1}));
}

TEST_CASE("seed files merge and survive a round-trip") {
    BaseValueTable t;
    t.set_value({5, 2}, 2, 23);
    t.set_value({6, 4}, 2, 123);
    const Json j = seeds_to_json(t);
    BaseValueTable back;
    seeds_merge_from_json(back, j);
    REQUIRE(back.value({5, 2}, 2) != nullptr);
    CHECK(*back.value({5, 2}, 2) == 23);
    REQUIRE(back.value({6, 4}, 2) != nullptr);
    CHECK(*back.value({6, 4}, 2) == 123);
    CHECK(back.value({5, 2}, 3) == nullptr);
}

TEST_CASE("expressions serialize with factors and coefficients") {
    const SuperExpr e = tensor_normalize(SuperExpr::of(elementary(3, 2, Root{1, 2}, 1)),
                                         SuperExpr::of(elementary(3, 2, Root{1, 2}, 1)));
    const Json j = expr_to_json(e);
    REQUIRE(j.size() == 4);
    for (const auto& term : j) CHECK(term.at("coeff") == 1);
}

TEST_CASE("character tables round-trip through JSON") {
    const CharTable t = irr_table(full_group(3, 3));
    const Json j = table_to_json(t);
    const CharTable back = table_from_json(j);
    CHECK(table_plausible(back));
    REQUIRE(back.count() == t.count());
    for (std::size_t i = 0; i < t.count(); ++i) {
        CHECK(back.irreducibles[i].degree_int() == t.irreducibles[i].degree_int());
        for (std::size_t c = 0; c < t.classes->count(); ++c)
            CHECK(back.irreducibles[i].at_class(c) == t.irreducibles[i].at_class(c));
    }
}

TEST_CASE("the cache loads plausible entries and recomputes corrupt ones") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "utq-test-cache";
    std::filesystem::remove_all(dir);
    TableCache cache(dir);
    const GroupHandle g = full_group(3, 2);

    const CharTable first = cache.get(g);
    REQUIRE(std::filesystem::exists(cache.path_for(g)));
    const auto stamp = std::filesystem::last_write_time(cache.path_for(g));

    // warm load: table comes back identical
    const CharTable second = cache.get(g);
    CHECK(second.count() == first.count());
    CHECK(std::filesystem::last_write_time(cache.path_for(g)) == stamp);

    // corrupt entry: silently recomputed and rewritten
    {
        std::ofstream out(cache.path_for(g));
        out << "{\"schema\": 1, \"garbage\": true}";
    }
    const CharTable third = cache.get(g);
    CHECK(third.count() == first.count());
    {
        std::ifstream in(cache.path_for(g));
        const Json j = Json::parse(in);
        CHECK(table_plausible(table_from_json(j)));
    }
    std::filesystem::remove_all(dir);
}
