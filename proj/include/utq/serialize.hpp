#pragma once

// JSON (de)serialization for the persisted artifacts: character tables (the
// cache format), counting polynomials, expressions, seeds and suite reports.
// Everything carries "schema": 1 and is written with stable key order.

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "utq/constituents.hpp"
#include "utq/oracle.hpp"

namespace utq {

using Json = nlohmann::ordered_json;

inline Json root_to_json(Root r) { return Json{{"i", r.i}, {"j", r.j}}; }
inline Root root_from_json(const Json& j) { return Root{j.at("i").get<int>(), j.at("j").get<int>()}; }

inline Json rootset_to_json(const RootSet& s) {
    Json out = Json::array();
    for (Root r : s) out.push_back(root_to_json(r));
    return out;
}

/// Elements serialize as the above-diagonal entries in canonical root order.
inline Json utmat_to_json(const UTMat& m) {
    Json out = Json::array();
    for (int i = 1; i <= m.n; ++i)
        for (int j = i; j <= m.n - 1; ++j) out.push_back(static_cast<int>(m.at(i, j + 1)));
    return out;
}

// ---------------------------------------------------------------------------
// polynomials and counts

inline Json bigint_to_json(const Bigint& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Bigint bigint_from_json(const Json& j) {
    if (j.is_string()) return Bigint(j.get<std::string>());
    return Bigint(j.get<std::int64_t>());
}

inline Json poly_to_json(const PolyQ& p, const std::string& basis = "q") {
    Json coeffs = Json::array();
    if (basis == "q") {
        for (const Bigint& c : p.coeffs()) coeffs.push_back(bigint_to_json(c));
    } else if (basis == "q-1") {
        for (const Bigint& c : to_qminus1(p)) coeffs.push_back(bigint_to_json(c));
    } else {
        throw ValidationError("unknown polynomial basis '" + basis + "'");
    }
    return Json{{"basis", basis}, {"coeffs", coeffs}};
}

inline PolyQ poly_from_json(const Json& j) {
    std::vector<Bigint> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
    const std::string basis = j.value("basis", "q");
    if (basis == "q") return PolyQ(std::move(coeffs));
    if (basis == "q-1") return from_qminus1(coeffs);
    throw ValidationError("unknown polynomial basis '" + basis + "'");
}

inline Json seeded_poly_to_json(const SeededPoly& p, const std::string& basis = "q") {
    Json out = poly_to_json(p.constant(), basis);
    if (!p.is_polynomial()) {
        Json seeds = Json::array();
        for (const auto& [k, c] : p.terms())
            seeds.push_back(Json{{"n", k.first}, {"e", k.second}, {"coeff", poly_to_json(c, basis)}});
        out["seeds"] = seeds;
    }
    return out;
}

inline Json seeds_to_json(const BaseValueTable& t) {
    Json seeds = Json::array();
    for (const auto& [k, byq] : t.values())
        for (const auto& [q0, v] : byq)
            seeds.push_back(Json{{"n", k.first},
                                 {"e", k.second},
                                 {"q", bigint_to_json(q0)},
                                 {"value", bigint_to_json(v)}});
    return Json{{"schema", 1}, {"seeds", seeds}};
}

inline void seeds_merge_from_json(BaseValueTable& t, const Json& j) {
    for (const auto& s : j.at("seeds"))
        t.set_value({s.at("n").get<int>(), s.at("e").get<int>()}, bigint_from_json(s.at("q")),
                    bigint_from_json(s.at("value")));
}

// ---------------------------------------------------------------------------
// expressions

inline Json expr_to_json(const SuperExpr& e) {
    Json terms = Json::array();
    for (const auto& [s, c] : e.terms()) {
        Json factors = Json::array();
        for (const auto& f : s.factors())
            factors.push_back(Json{{"root", root_to_json(f.root)}, {"param", f.param}});
        terms.push_back(Json{{"factors", factors}, {"coeff", c}});
    }
    return terms;
}

// ---------------------------------------------------------------------------
// cyclotomic values and character tables

inline Json rat_to_json(const Rat& r) { return Json(r.str()); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    return Rat(j.get<std::string>());
}

inline Json cyclo_to_json(const Cyclo& c) {
    Json out = Json::array();
    for (const Rat& r : c.coords()) out.push_back(rat_to_json(r));
    return out;
}

inline Cyclo cyclo_from_json(const Json& j, int conductor) {
    Cyclo out = Cyclo::zero(conductor);
    std::size_t e = 0;
    for (const auto& coord : j) {
        out += rat_from_json(coord) * Cyclo::root_of_unity(conductor, static_cast<long long>(e));
        ++e;
    }
    return out;
}

inline Json table_to_json(const CharTable& t) {
    const ClassData& cd = *t.classes;
    Json reps = Json::array(), sizes = Json::array(), class_of = Json::array();
    for (std::uint64_t r : cd.reps) reps.push_back(r);
    for (std::uint64_t s : cd.sizes) sizes.push_back(s);
    for (std::uint32_t c : cd.class_of) class_of.push_back(c);
    Json irr = Json::array();
    for (const auto& chi : t.irreducibles) {
        Json values = Json::array();
        for (const Cyclo& v : chi.values()) values.push_back(cyclo_to_json(v.promoted(t.conductor)));
        irr.push_back(Json{{"degree", bigint_to_json(chi.degree_int())}, {"values", values}});
    }
    return Json{{"schema", 1},
                {"n", cd.group.n()},
                {"q", cd.group.q()},
                {"roots", rootset_to_json(cd.group.roots())},
                {"classes", Json{{"reps", reps}, {"sizes", sizes}}},
                {"class_of", class_of},
                {"conductor", t.conductor},
                {"irreducibles", irr}};
}

inline CharTable table_from_json(const Json& j) {
    if (j.value("schema", 0) != 1) throw ValidationError("unknown table schema");
    const int n = j.at("n").get<int>();
    const int q = j.at("q").get<int>();
    std::vector<Root> roots;
    for (const auto& r : j.at("roots")) roots.push_back(root_from_json(r));
    ClassData cd;
    cd.group = GroupHandle(n, q, RootSet(n, roots));
    for (const auto& r : j.at("classes").at("reps")) cd.reps.push_back(r.get<std::uint64_t>());
    for (const auto& s : j.at("classes").at("sizes")) cd.sizes.push_back(s.get<std::uint64_t>());
    for (const auto& c : j.at("class_of")) cd.class_of.push_back(c.get<std::uint32_t>());
    CharTable t;
    t.conductor = j.at("conductor").get<int>();
    t.classes = std::make_shared<ClassData>(std::move(cd));
    for (const auto& chi : j.at("irreducibles")) {
        std::vector<Cyclo> values;
        for (const auto& v : chi.at("values")) values.push_back(cyclo_from_json(v, t.conductor));
        t.irreducibles.emplace_back(t.classes, std::move(values));
    }
    return t;
}

/// Structural validation of a loaded table; a cache entry failing this is
/// recomputed, never trusted.
inline bool table_plausible(const CharTable& t) {
    try {
        const ClassData& cd = *t.classes;
        if (cd.reps.size() != cd.sizes.size() || cd.reps.empty()) return false;
        if (t.irreducibles.size() != cd.count()) return false;
        Bigint total = 0;
        for (std::uint64_t s : cd.sizes) total += s;
        if (total != cd.group.order()) return false;
        if (Bigint(cd.class_of.size()) != cd.group.order()) return false;
        for (std::size_t c = 0; c < cd.count(); ++c)
            if (cd.class_of[cd.reps[c]] != c) return false;
        Bigint d2 = 0;
        for (const auto& chi : t.irreducibles) d2 += chi.degree_int() * chi.degree_int();
        return d2 == cd.group.order();
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// cache

inline std::uint64_t rootset_hash(int n, int q, const RootSet& s) {
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n));
    mix(static_cast<std::uint64_t>(q));
    for (Root r : s) {
        mix(static_cast<std::uint64_t>(r.i));
        mix(static_cast<std::uint64_t>(r.j));
    }
    return h;
}

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    /// Loads a cached table if present and plausible, else computes and stores it.
    CharTable get(const GroupHandle& g, const Caps& caps = default_caps()) {
        const std::filesystem::path file = path_for(g);
        if (!dir_.empty() && std::filesystem::exists(file)) {
            try {
                std::ifstream in(file);
                Json j = Json::parse(in);
                CharTable t = table_from_json(j);
                if (t.classes->group == g && table_plausible(t)) return t;
            } catch (...) {
                // fall through to recompute
            }
        }
        CharTable t = irr_table(g, caps);
        if (!dir_.empty()) {
            std::ofstream out(file);
            out << table_to_json(t).dump(1) << "\n";
        }
        return t;
    }

    std::filesystem::path path_for(const GroupHandle& g) const {
        return dir_ / ("table_n" + std::to_string(g.n()) + "_q" + std::to_string(g.q()) + "_" +
                       std::to_string(rootset_hash(g.n(), g.q(), g.roots())) + ".json");
    }

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace utq
