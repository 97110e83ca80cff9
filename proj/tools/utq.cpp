// Batch front door: root combinatorics, symbolic decompositions, counting
// polynomials, cached oracle tables, and the named verification suites.

#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "utq/utq.hpp"

namespace {

using namespace utq;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("UTQ_CACHE_DIR")) return env;
    return "utq-cache";
}

/// Advisory ownership of the cache directory for the duration of a run.
class CacheLock {
public:
    explicit CacheLock(const std::filesystem::path& dir) {
        std::filesystem::create_directories(dir);
        fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ >= 0) ::flock(fd_, LOCK_EX);
    }
    ~CacheLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }

private:
    int fd_ = -1;
};

struct ParsedFactor {
    Root root;
    int param;
};

/// Factor lists look like "(1,2):1,(3,4):2"; errors carry the position.
std::vector<ParsedFactor> parse_factor_list(const std::string& text) {
    std::vector<ParsedFactor> out;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& what) -> void {
        throw ValidationError("factor list: " + what + " at position " + std::to_string(pos));
    };
    const auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    };
    const auto number = [&]() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(text.substr(start, pos - start));
    };
    while (pos < text.size()) {
        expect('(');
        const int i = number();
        expect(',');
        const int j = number();
        expect(')');
        expect(':');
        const int t = number();
        out.push_back({Root{i, j}, t});
        if (pos < text.size()) expect(',');
    }
    if (out.empty()) {
        pos = 0;
        fail("empty factor list");
    }
    return out;
}

void write_or_print(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(1) << "\n";
    }
}

int cmd_decompose(int n, int q, const std::string& factors, bool stats, const std::string& out_path) {
    const auto parsed = parse_factor_list(factors);
    SuperExpr expr = SuperExpr::trivial(n, q);
    for (const auto& f : parsed)
        expr = tensor_normalize(expr, SuperExpr::of(elementary(n, q, f.root, f.param)));

    PolyQ expected = PolyQ::constant(1);
    for (const auto& f : parsed) expected *= PolyQ::monomial(height(f.root));
    const Bigint total = expr_total_degree(expr).eval(q);
    const bool conserved = total == expected.eval(q);

    Json out{{"schema", 1},
             {"n", n},
             {"q", q},
             {"terms", expr_to_json(expr)},
             {"total_degree", bigint_to_json(total)},
             {"degree_conserved", conserved}};
    if (stats) {
        Json st = Json::array();
        for (const auto& [sym, coeff] : expr.terms()) {
            Json entry{{"coeff", coeff}};
            Json factors_json = Json::array();
            for (const auto& f : sym.factors())
                factors_json.push_back(Json{{"root", root_to_json(f.root)}, {"param", f.param}});
            entry["factors"] = factors_json;
            try {
                Json lines = Json::array();
                for (const auto& line : constituent_stats(sym))
                    lines.push_back(Json{{"degree_exponent", line.degree_exponent},
                                         {"count", poly_to_json(line.count)},
                                         {"multiplicity", line.multiplicity}});
                entry["constituents"] = lines;
            } catch (const Unsupported& e) {
                entry["constituents"] = e.what();
            }
            st.push_back(entry);
        }
        out["stats"] = st;
    }
    write_or_print(out, out_path);
    return conserved ? kExitOk : kExitCheckFailed;
}

int cmd_count(int n, const std::string& which, const std::string& basis, const std::string& variant,
              const std::string& mode, const std::string& seeds_path, std::int64_t eval_at,
              const std::string& out_path) {
    BaseValueTable seeds = BaseValueTable::with_defaults();
    if (!seeds_path.empty()) {
        std::ifstream in(seeds_path);
        if (!in) throw ValidationError("cannot read seeds file " + seeds_path);
        seeds_merge_from_json(seeds, Json::parse(in));
    }

    Json out{{"schema", 1}, {"n", n}, {"which", which}};
    SeededPoly value;
    if (which == "top") {
        value = SeededPoly(n_top(n));
    } else if (which == "second") {
        value = SeededPoly(n_second(n, mode == "recursion" ? SecondMode::recursion : SecondMode::closed));
    } else if (which == "third") {
        value = n_third(n, seeds, variant == "theorem" ? ThirdVariant::theorem : ThirdVariant::prose);
        out["variant"] = variant;
    } else {
        throw ValidationError("unknown count selector '" + which + "'");
    }
    out["count"] = seeded_poly_to_json(value, basis == "qm1" ? "q-1" : "q");
    if (!value.is_polynomial())
        out["note"] = "seed values are certified per q only; no polynomial interpolation is performed";
    if (eval_at >= 2) {
        if (which == "third" && seeds_path.empty())
            throw ValidationError("evaluating the third-highest count needs --seeds");
        out["eval"] = Json{{"q", eval_at}, {"value", bigint_to_json(value.eval(eval_at, seeds))}};
    }
    write_or_print(out, out_path);
    return kExitOk;
}

int cmd_table(int n, int q, const std::string& cache_flag, const std::string& out_path, bool hist,
              bool csv, const std::string& seed_out) {
    const auto dir = resolve_cache_dir(cache_flag);
    CacheLock lock(dir);
    TableCache cache(dir);
    const CharTable table = cache.get(full_group(n, q));
    const auto histogram = degree_histogram(table, q);

    if (hist && csv) {
        std::cout << "e,count\n";
        for (const auto& [e, c] : histogram) std::cout << e << "," << c << "\n";
    } else {
        Json hj = Json::object();
        for (const auto& [e, c] : histogram) hj[std::to_string(e)] = c;
        Json out{{"schema", 1},
                 {"n", n},
                 {"q", q},
                 {"order", bigint_to_json(table.classes->group.order())},
                 {"classes", table.classes->count()},
                 {"conductor", table.conductor},
                 {"histogram", hj},
                 {"cache_file", cache.path_for(table.classes->group).string()}};
        write_or_print(out, out_path);
    }

    if (!seed_out.empty()) {
        // record N_{n, mu(n)-2}(q), the seed the third-highest recursion needs
        BaseValueTable seeds;
        if (std::filesystem::exists(seed_out)) {
            std::ifstream in(seed_out);
            seeds_merge_from_json(seeds, Json::parse(in));
        }
        const int e = mu(n) - 2;
        const auto it = histogram.find(e);
        seeds.set_value({n, e}, q, it == histogram.end() ? 0 : it->second);
        std::ofstream out(seed_out);
        out << seeds_to_json(seeds).dump(1) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, int n, int q, const std::string& cache_flag,
               const std::string& out_path, bool strict, int samples) {
    const auto dir = resolve_cache_dir(cache_flag);
    CacheLock lock(dir);
    TableCache cache(dir);

    Report rep;
    bool cap_exceeded = false;
    try {
        if (suite == "roots")
            rep = suite_roots(n);
        else if (suite == "lemma21")
            rep = suite_lemma21(n, q, cache);
        else if (suite == "lemma22")
            rep = suite_lemma22(n, q);
        else if (suite == "lemma32")
            rep = suite_lemma32(n, q);
        else if (suite == "lemma34")
            rep = suite_lemma34(n, q, cache);
        else if (suite == "thm-partition")
            rep = suite_thm_partition(n, q, cache);
        else if (suite == "factorization")
            rep = suite_factorization(n, q, cache);
        else if (suite == "lemma433")
            rep = suite_lemma433(n, q);
        else if (suite == "extremal")
            rep = suite_extremal(n);
        else if (suite == "mackey7")
            rep = suite_mackey7(samples);
        else
            throw ValidationError("unknown suite '" + suite + "'");
    } catch (const CapExceeded& e) {
        cap_exceeded = true;
        rep.suite = suite;
        rep.config = Json{{"n", n}, {"q", q}};
        rep.checks.push_back({suite + ".capped", "resource-cap", "skipped", Json{{"reason", e.what()}}});
    }

    write_or_print(rep.to_json(), out_path);
    for (const auto& c : rep.checks)
        std::cerr << "[" << c.status << "] " << c.id << " (" << c.anchor << ")\n";
    if (cap_exceeded && strict) return kExitCapExceeded;
    return rep.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact supercharacter toolkit for the unitriangular groups U_n(q)"};
    app.require_subcommand(1);

    // decompose
    int d_n = 4, d_q = 2;
    std::string d_factors, d_out;
    bool d_stats = false;
    auto* dec = app.add_subcommand("decompose", "normalize a tensor product of elementary characters");
    dec->add_option("--n", d_n, "ambient rank")->required();
    dec->add_option("--q", d_q, "field size")->required();
    dec->add_option("--factors", d_factors, "factor list \"(i,j):t,...\"")->required();
    dec->add_flag("--stats", d_stats, "attach constituent statistics where supported");
    dec->add_option("--out", d_out, "output path (default stdout)");

    // count
    int c_n = 7;
    std::string c_which = "top", c_basis = "q", c_variant = "prose", c_mode = "closed", c_seeds, c_out;
    std::int64_t c_eval = 0;
    auto* cnt = app.add_subcommand("count", "counting polynomials for the top three degrees");
    cnt->add_option("--n", c_n, "rank")->required();
    cnt->add_option("--which", c_which, "top | second | third")->required();
    cnt->add_option("--basis", c_basis, "q | qm1");
    cnt->add_option("--variant", c_variant, "prose | theorem (third only)");
    cnt->add_option("--mode", c_mode, "closed | recursion (second only)");
    cnt->add_option("--seeds", c_seeds, "seeds JSON file");
    cnt->add_option("--eval", c_eval, "evaluate exactly at this q");
    cnt->add_option("--out", c_out, "output path (default stdout)");

    // table
    int t_n = 4, t_q = 2;
    std::string t_cache, t_out, t_seed_out;
    bool t_hist = false, t_csv = false;
    auto* tab = app.add_subcommand("table", "build or load a cached character table");
    tab->add_option("--n", t_n, "rank")->required();
    tab->add_option("--q", t_q, "field size")->required();
    tab->add_option("--cache", t_cache, "cache directory (or UTQ_CACHE_DIR)");
    tab->add_option("--out", t_out, "summary output path");
    tab->add_flag("--hist", t_hist, "print the degree histogram");
    tab->add_flag("--csv", t_csv, "histogram as CSV");
    tab->add_option("--seed-out", t_seed_out, "merge N_{n,mu-2}(q) into this seeds file");

    // verify
    std::string v_suite, v_cache, v_out;
    int v_n = 0, v_q = 0, v_samples = 50;
    bool v_strict = false;
    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("--suite", v_suite,
                    "roots | lemma21 | lemma22 | lemma32 | lemma34 | thm-partition | factorization | "
                    "lemma433 | extremal | mackey7")
        ->required();
    ver->add_option("--n", v_n, "rank (suite-specific default)");
    ver->add_option("--q", v_q, "field size (suite-specific default)");
    ver->add_option("--cache", v_cache, "cache directory (or UTQ_CACHE_DIR)");
    ver->add_option("--out", v_out, "report path (default stdout)");
    ver->add_option("--samples", v_samples, "sample count for randomized checks");
    ver->add_flag("--strict", v_strict, "exit 3 when a cap forces skips");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dec->parsed()) return cmd_decompose(d_n, d_q, d_factors, d_stats, d_out);
        if (cnt->parsed()) return cmd_count(c_n, c_which, c_basis, c_variant, c_mode, c_seeds, c_eval, c_out);
        if (tab->parsed()) return cmd_table(t_n, t_q, t_cache, t_out, t_hist, t_csv, t_seed_out);
        if (ver->parsed()) {
            static const std::map<std::string, std::pair<int, int>> defaults = {
                {"roots", {12, 2}},      {"lemma21", {4, 2}},  {"lemma22", {4, 2}},
                {"lemma32", {4, 2}},     {"lemma34", {4, 3}},  {"thm-partition", {4, 2}},
                {"factorization", {4, 2}}, {"lemma433", {5, 2}}, {"extremal", {12, 2}},
                {"mackey7", {7, 2}}};
            const auto it = defaults.find(v_suite);
            if (it != defaults.end()) {
                if (v_n == 0) v_n = it->second.first;
                if (v_q == 0) v_q = it->second.second;
            }
            return cmd_verify(v_suite, v_n, v_q, v_cache, v_out, v_strict, v_samples);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
