// lcpqc: check, measure and search linear complementary pairs of index-2
// quasi-cyclic and quasi-twisted codes.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lcpqc/distance.hpp"
#include "lcpqc/error.hpp"
#include "lcpqc/lcp.hpp"
#include "lcpqc/oracle.hpp"
#include "lcpqc/repro.hpp"
#include "lcpqc/report.hpp"
#include "lcpqc/search.hpp"

using namespace lcpqc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;

struct CodeArgs {
    std::uint64_t q = 0;
    std::string ext_modulus;
    int m = 0;
    std::string lambda = "1";
};

void add_code_args(CLI::App* cmd, CodeArgs& a, bool need_m) {
    cmd->add_option("--q", a.q, "field order p^k")->required();
    cmd->add_option("--ext-modulus", a.ext_modulus, "modulus of F_q over F_p, e.g. 2,2,1 or w^2+2w+2");
    auto* m = cmd->add_option("--m", a.m, "co-index m (code length 2m)");
    if (need_m) m->required();
    cmd->add_option("--lambda", a.lambda, "twist constant, default 1");
}

bool is_dc(const QtCodeSpec& s) { return s.is_one_generator() && s.one_gen().g11.is_one(); }

int cmd_check(const CodeArgs& a, const std::string& c_text, const std::string& d_text, const std::string& engine,
              bool want_dlcp) {
    const Field field = parse_field(a.q, a.ext_modulus);
    const Elem lambda = elem_parse(a.lambda, field).value();
    std::vector<std::string> notes;
    const QtCodeSpec c = prepare_standard_form(parse_spec(field, a.m, lambda, c_text), "C", notes);
    const QtCodeSpec d = prepare_standard_form(parse_spec(field, a.m, lambda, d_text), "D", notes);
    const bool one_gen = c.is_one_generator() && d.is_one_generator();

    auto run = [&](const std::string& e) -> Json {
        if (e == "two-gen") return report_json(lcp_two_generator(c, d));
        if (e == "one-gen") return report_json(lcp_one_generator(c, d));
        if (e == "dc") {
            if (!is_dc(c) || !is_dc(d)) fail(ErrorKind::InvalidStandardForm, "dc engine needs generators '1;a' and '1;b'");
            return report_json(lcp_dc(c.one_gen().g12, d.one_gen().g12, a.m, lambda));
        }
        if (e == "constituents") return report_json(lcp_via_constituents(c, d));
        if (e == "oracle") return oracle_json(lcp_oracle(generator_matrix(c), generator_matrix(d)));
        fail(ErrorKind::SyntaxError, "unknown engine " + e);
    };

    Json out;
    int code = kExitOk;
    if (engine == "all") {
        std::vector<std::string> engines = {"two-gen", "constituents", "oracle"};
        if (one_gen) engines.insert(engines.begin() + 1, "one-gen");
        if (is_dc(c) && is_dc(d)) engines.insert(engines.begin() + 2, "dc");
        Json all = Json::array();
        bool first = true;
        bool verdict = false;
        bool disagreement = false;
        for (const auto& e : engines) {
            Json r = run(e);
            if (first) verdict = r["verdict"].get<bool>();
            disagreement = disagreement || r["verdict"].get<bool>() != verdict;
            first = false;
            all.push_back(std::move(r));
        }
        out["verdict"] = verdict;
        out["engine"] = "all";
        out["engines"] = all;
        out["disagreement"] = disagreement;
        if (disagreement) code = kExitDisagree;
    } else {
        const std::string e = engine == "auto" ? (one_gen ? "one-gen" : "two-gen") : engine;
        out = run(e);
    }
    if (!notes.empty()) out["notes"] = notes;
    if (want_dlcp) out["dlcp"] = dlcp_json(d_lcp(c, d));
    std::cout << out.dump(2) << '\n';
    return code;
}

DistanceMethod parse_method(const std::string& s) {
    if (s == "auto") return DistanceMethod::Auto;
    if (s == "enumeration") return DistanceMethod::Enumeration;
    if (s == "column-search") return DistanceMethod::ColumnSearch;
    fail(ErrorKind::SyntaxError, "unknown method " + s);
}

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

GenMatrix code_matrix(const CodeArgs& a, const std::string& gens, const std::string& matrix_path) {
    const Field field = parse_field(a.q, a.ext_modulus);
    if (!matrix_path.empty()) return matrix_parse(read_all(matrix_path), field);
    if (gens.empty() || a.m == 0) fail(ErrorKind::SyntaxError, "give --matrix or --m with --c");
    const Elem lambda = elem_parse(a.lambda, field).value();
    std::vector<std::string> notes;
    return generator_matrix(prepare_standard_form(parse_spec(field, a.m, lambda, gens), "C", notes));
}

int cmd_distance(const CodeArgs& a, const std::string& gens, const std::string& matrix_path, bool dual,
                 const std::string& method, std::uint64_t budget) {
    GenMatrix g = code_matrix(a, gens, matrix_path);
    if (dual) g = dual_matrix(row_basis(g));
    DistanceOptions opts;
    opts.method = parse_method(method);
    opts.budget = budget;
    Json out;
    out["n"] = g.cols();
    out["k"] = rank(g);
    try {
        const DistanceResult r = min_distance(g, opts);
        out["distance"] = r.distance;
        out["method"] = std::string(to_string(r.method));
        out["work_count"] = r.work_count;
    } catch (const BudgetExceededError& e) {
        out["error"] = "BudgetExceeded";
        out["lower"] = e.lower();
        out["upper"] = e.upper();
        std::cout << out.dump(2) << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_export(const CodeArgs& a, const std::string& gens, bool dual) {
    GenMatrix g = code_matrix(a, gens, "");
    if (dual) g = dual_matrix(row_basis(g));
    std::cout << matrix_format(g);
    return kExitOk;
}

int cmd_reproduce(const std::string& id, bool all, bool json) {
    std::vector<const ReproCase*> cases;
    if (all) {
        for (const auto& c : repro_cases()) cases.push_back(&c);
    } else {
        const ReproCase* c = find_repro_case(id);
        if (!c) fail(ErrorKind::SyntaxError, "unknown case " + id);
        cases.push_back(c);
    }
    bool ok = true;
    Json arr = Json::array();
    for (const ReproCase* rc : cases) {
        const ReproOutcome o = run_repro_case(*rc);
        ok = ok && o.pass;
        if (json) {
            arr.push_back(repro_json(o));
            continue;
        }
        std::ostringstream line;
        line << (o.pass ? "PASS " : "FAIL ") << o.id << "  n=" << o.n << " k=" << o.k << " d_LCP=" << o.dlcp
             << "  expected (" << rc->n << ", " << rc->k << ", " << rc->dlcp << ")  d_BKLC=" << rc->dbklc;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "  " << o.seconds << "s";
        for (const auto& m : o.mismatches) line << "\n    diverged: " << m;
        for (const auto& n : o.notes) line << "\n    note: " << n;
        std::cout << line.str() << '\n';
    }
    if (json) std::cout << arr.dump(2) << '\n';
    else std::cout << (ok ? "all cases PASS" : "some cases FAIL") << '\n';
    return ok ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear complementary pairs of index-2 quasi-cyclic and quasi-twisted codes"};
    app.require_subcommand(1);

    CodeArgs check_args;
    std::string c_text, d_text, engine = "auto";
    bool want_dlcp = false;
    auto* check = app.add_subcommand("check", "decide whether (C, D) is an LCP");
    add_code_args(check, check_args, true);
    check->add_option("--c", c_text, "generators of C: g11;g12[;g22]")->required();
    check->add_option("--d", d_text, "generators of D: f11;f12[;f22]")->required();
    check->add_option("--engine", engine, "auto, two-gen, one-gen, dc, constituents, oracle or all")
        ->check(CLI::IsMember({"auto", "two-gen", "one-gen", "dc", "constituents", "oracle", "all"}));
    check->add_flag("--dlcp", want_dlcp, "also compute d_LCP = min(d(C), d(D^perp))");

    CodeArgs dist_args;
    std::string dist_gens, matrix_path, method = "auto";
    bool dist_dual = false;
    std::uint64_t budget = DistanceOptions{}.budget;
    auto* dist = app.add_subcommand("distance", "minimum distance of a code");
    add_code_args(dist, dist_args, false);
    dist->add_option("--c", dist_gens, "generators g11;g12[;g22]");
    dist->add_option("--matrix", matrix_path, "generator matrix file, '-' for stdin");
    dist->add_flag("--dual", dist_dual, "measure the dual code instead");
    dist->add_option("--method", method, "auto, enumeration or column-search")
        ->check(CLI::IsMember({"auto", "enumeration", "column-search"}));
    dist->add_option("--budget", budget, "work limit");

    CodeArgs exp_args;
    std::string exp_gens;
    bool exp_dual = false;
    auto* exp = app.add_subcommand("export", "print the generator matrix, one row per line");
    add_code_args(exp, exp_args, true);
    exp->add_option("--c", exp_gens, "generators g11;g12[;g22]")->required();
    exp->add_flag("--dual", exp_dual, "print a parity-check matrix instead");

    std::string case_id;
    bool all = false;
    bool json = false;
    auto* repro = app.add_subcommand("reproduce", "rerun the published examples");
    repro->add_option("--case", case_id, "case id, e.g. ex2 or table1-row3");
    repro->add_flag("--all", all, "run every case");
    repro->add_flag("--json", json, "JSON output");

    CodeArgs search_args;
    std::optional<int> target_k;
    int min_dlcp = 1;
    std::uint64_t search_budget = 10'000;
    std::uint64_t seed = 1;
    std::string mode = "random";
    std::string bklc_path;
    int threads = 0;
    auto* search = app.add_subcommand("search", "look for LCP pairs with large d_LCP; CSV on stdout");
    add_code_args(search, search_args, true);
    search->add_option("--k", target_k, "required dim C");
    search->add_option("--min-dlcp", min_dlcp, "report pairs with d_LCP at least this");
    search->add_option("--budget", search_budget, "candidate pairs to evaluate");
    search->add_option("--seed", seed, "seed for random mode");
    search->add_option("--mode", mode, "random or exhaustive")->check(CLI::IsMember({"random", "exhaustive"}));
    search->add_option("--bklc", bklc_path, "CSV table q,n,k,d of best known distances");
    search->add_option("--threads", threads, "worker count, 0 = LCPQC_THREADS or all cores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*check) return cmd_check(check_args, c_text, d_text, engine, want_dlcp);
        if (*dist) return cmd_distance(dist_args, dist_gens, matrix_path, dist_dual, method, budget);
        if (*exp) return cmd_export(exp_args, exp_gens, exp_dual);
        if (*repro) {
            if (!all && case_id.empty()) fail(ErrorKind::SyntaxError, "give --case or --all");
            return cmd_reproduce(case_id, all, json);
        }
        if (*search) {
            const Field field = parse_field(search_args.q, search_args.ext_modulus);
            std::optional<BklcTable> table;
            if (!bklc_path.empty()) table = BklcTable::load(bklc_path);
            SearchConfig cfg{field};
            cfg.m = search_args.m;
            cfg.lambda = elem_parse(search_args.lambda, field).value();
            cfg.target_k = target_k;
            cfg.min_dlcp = min_dlcp;
            cfg.budget = search_budget;
            cfg.seed = seed;
            cfg.mode = mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Random;
            cfg.threads = threads;
            cfg.bklc = table ? &*table : nullptr;
            // Validates gcd(m, q) = 1 before any work starts.
            (void)QtCodeSpec(field, cfg.m, cfg.lambda, OneGen{Poly::constant(field, 1), Poly(field)});
            const SearchSummary s = run_search(cfg);
            write_search_csv(std::cout, cfg, s);
            std::cerr << search_summary_line(s) << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::EngineDisagreement ? kExitDisagree : kExitInput;
    }
    return kExitInput;
}
