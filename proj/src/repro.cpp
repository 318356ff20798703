#include "lcpqc/repro.hpp"

#include <chrono>

#include "lcpqc/error.hpp"

namespace lcpqc {

const std::vector<ReproCase>& repro_cases() {
    static const std::vector<ReproCase> cases = {
        {"ex1", 5, "", 8, "1",
         "2,3,1;4,4,1,4,4,1;3,1,1,0,3,1,1",
         "3,1;2,1,2,1;2,4,3,1,2,4,3,1",
         16, 8, 6, 7},
        {"ex2", 3, "", 4, "1",
         "1,1;1,1,1;2,1,2,1",
         "2,1;2,1,1;1,1,1,1",
         8, 4, 4, 4},
        {"ex3", 3, "", 5, "1",
         "2,1;2,2,1;1,1,1,1,1",
         "1;1,2,2,1;-1,0,0,0,0,1",
         10, 5, 5, 5},
        {"qt1", 5, "", 11, "2",
         "2,1;3,1,3,2,0,4,1;4,3,1,2,4,3,1,2,4,3,1",
         "1;1,2,1,0,2,4,2,1,2,1;-2,0,0,0,0,0,0,0,0,0,0,1",
         22, 11, 8, 8},
        {"qt2", 9, "2,2,1", 10, "w",
         "w,2,1;w^3,w^2,w^6,w^5,w^2,1;2,w^3,w^5,w^3,w^7,w^2,w^3,1,1",
         "w,w^7,1;0,w^3,w^7,1,w^6,w,w^7,1;2,w^6,w,1,w,w^7,w^7,w^3,1",
         20, 10, 8, 10},
        {"qt3", 9, "2,2,1", 10, "w",
         "1;w^2,0,w^5,w,1,1;w^3,w^5,w^5,w,2,w^3,1",
         "w^2,1,w^5,w^7,1;0,w^5,1,w^3,w^7,w^6,w^7,w^3,w^6;w^5,0,0,0,0,0,0,0,0,0,1",
         20, 14, 5, 6},
        {"table1-row1", 4, "1,1,1", 3, "1",
         "w,1;1+w^2,1;w^2,w,1",
         "1;1,w^2,w,w;-1,0,0,1",
         6, 3, 3, 4},
        {"table1-row2", 4, "1,1,1", 5, "1",
         "1,1;0,w,w,1;1,1,1,1,1",
         "1;w,1,0,w,1;-1,0,0,0,0,1",
         10, 5, 5, 5},
        {"table1-row3", 4, "1,1,1", 7, "1",
         "1,1;w,w^2,0,1;1,0,1,1,1",
         "1,0,1,1;1,0,1,1;1,1,1,1,1,1,1",
         14, 9, 4, 4},
    };
    return cases;
}

const ReproCase* find_repro_case(const std::string& id) {
    for (const auto& c : repro_cases()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

QtCodeSpec prepare_standard_form(const QtCodeSpec& spec, const std::string& which, std::vector<std::string>& notes) {
    if (spec.is_one_generator()) return spec;
    const auto rep = validate_standard_form(spec);
    if (rep.ok() || rep.degree_ok) return spec;
    QtCodeSpec reduced = reduce_standard_form(spec);
    notes.push_back(which + ": g12 of degree " + std::to_string(spec.standard_form().g12.degree()) +
                    " reduced modulo g22 to " + poly_format_expr(reduced.standard_form().g12));
    return reduced;
}

namespace {
void evaluate(const ReproCase& rc, const DistanceOptions& opts, ReproOutcome& o);
}  // namespace

ReproOutcome run_repro_case(const ReproCase& rc, const DistanceOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    ReproOutcome o;
    o.id = rc.id;
    o.dbklc = rc.dbklc;
    try {
        evaluate(rc, opts, o);
    } catch (const Error& e) {
        o.mismatches.push_back(e.what());
    }
    o.pass = o.mismatches.empty();
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

namespace {

void evaluate(const ReproCase& rc, const DistanceOptions& opts, ReproOutcome& o) {
    const Field field = parse_field(rc.q, rc.modulus);
    const Elem lambda = elem_parse(rc.lambda, field).value();
    const QtCodeSpec c = prepare_standard_form(parse_spec(field, rc.m, lambda, rc.c), "C", o.notes);
    const QtCodeSpec d = prepare_standard_form(parse_spec(field, rc.m, lambda, rc.d), "D", o.notes);

    const LcpReport two = lcp_two_generator(c, d);
    const LcpReport cons = lcp_via_constituents(c, d);
    const GenMatrix gc = generator_matrix(c);
    const GenMatrix gd = generator_matrix(d);
    const OracleVerdict orc = lcp_oracle(gc, gd);
    o.engines_agree = two.verdict == cons.verdict && cons.verdict == orc.verdict;
    o.verdict = o.engines_agree && two.verdict;

    o.n = c.length();
    o.k = static_cast<int>(rank(gc));
    o.dlcp = d_lcp(c, d, opts).dlcp;

    if (!o.engines_agree) o.mismatches.push_back("engines disagree");
    if (!o.verdict) o.mismatches.push_back("not an LCP");
    if (o.n != rc.n) o.mismatches.push_back("n = " + std::to_string(o.n) + ", expected " + std::to_string(rc.n));
    if (o.k != rc.k) o.mismatches.push_back("k = " + std::to_string(o.k) + ", expected " + std::to_string(rc.k));
    if (o.dlcp != rc.dlcp) {
        o.mismatches.push_back("d_LCP = " + std::to_string(o.dlcp) + ", expected " + std::to_string(rc.dlcp));
    }
}

}  // namespace

Json repro_json(const ReproOutcome& o) {
    Json j;
    j["id"] = o.id;
    j["status"] = o.pass ? "PASS" : "FAIL";
    j["verdict"] = o.verdict;
    j["engines_agree"] = o.engines_agree;
    j["n"] = o.n;
    j["k"] = o.k;
    j["dlcp"] = o.dlcp;
    j["dbklc"] = o.dbklc;
    j["mismatches"] = o.mismatches;
    j["notes"] = o.notes;
    j["seconds"] = o.seconds;
    return j;
}

}  // namespace lcpqc
