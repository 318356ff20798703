#include "lcpqc/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lcpqc/error.hpp"

namespace lcpqc {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Field parse_field(std::uint64_t q, std::string_view modulus) {
    if (q < 2) fail(ErrorKind::NonPrimeCharacteristic, "field order must be at least 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    for (std::uint64_t t = q; t > 1; t /= p) {
        if (t % p != 0) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
        ++k;
    }
    const std::string text = trim(modulus);
    if (text.empty()) return Field::make(static_cast<std::uint32_t>(p), k);
    const Field fp = Field::make(static_cast<std::uint32_t>(p));
    Poly mod(fp);
    if (text.find(',') != std::string::npos) {
        mod = poly_parse(text, fp);
    } else {
        std::string expr = text;
        std::replace(expr.begin(), expr.end(), 'w', 'x');
        mod = poly_parse(expr, fp);
    }
    if (mod.degree() != k) {
        fail(ErrorKind::DegreeMismatch, "modulus degree " + std::to_string(mod.degree()) + " but q = " +
                                            std::to_string(p) + "^" + std::to_string(k));
    }
    std::vector<std::uint32_t> coeffs;
    for (Elem c : mod.coeffs()) coeffs.push_back(static_cast<std::uint32_t>(c));
    if (coeffs.back() != 1) fail(ErrorKind::ReducibleModulus, "modulus must be monic");
    return Field::make(static_cast<std::uint32_t>(p), k, coeffs);
}

QtCodeSpec parse_spec(const Field& field, int m, Elem lambda, std::string_view gens) {
    const auto parts = split(gens, ';');
    if (parts.size() == 2) {
        return QtCodeSpec(field, m, lambda, OneGen{poly_parse(parts[0], field), poly_parse(parts[1], field)});
    }
    if (parts.size() == 3) {
        return QtCodeSpec(field, m, lambda,
                          StandardForm{poly_parse(parts[0], field), poly_parse(parts[1], field),
                                       poly_parse(parts[2], field)});
    }
    fail(ErrorKind::SyntaxError, "generators must be 'g11;g12' or 'g11;g12;g22'");
}

std::string format_gens(const QtCodeSpec& spec) {
    if (spec.is_one_generator()) {
        const auto& g = spec.one_gen();
        return poly_format(g.g11) + ";" + poly_format(g.g12);
    }
    const auto& g = spec.standard_form();
    return poly_format(g.g11) + ";" + poly_format(g.g12) + ";" + poly_format(g.g22);
}

Json report_json(const LcpReport& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["engine"] = std::string(to_string(r.engine));
    Json conds = Json::object();
    for (const auto& c : r.conditions) conds[c.name] = c.holds;
    j["conditions"] = conds;
    j["witness"] = r.witness ? Json(poly_format_expr(*r.witness)) : Json(nullptr);
    j["dims"] = {{"dim_c", r.dim_c}, {"dim_d", r.dim_d}, {"ambient", r.ambient}};
    if (!r.details.empty()) {
        Json det = Json::object();
        for (const auto& [name, p] : r.details) det[name] = poly_format_expr(p);
        j["details"] = det;
    }
    return j;
}

Json oracle_json(const OracleVerdict& v) {
    Json j;
    j["verdict"] = v.verdict;
    j["engine"] = std::string(to_string(Engine::Oracle));
    j["conditions"] = {{"dim_c+dim_d=n", v.dim_c + v.dim_d == v.ambient},
                       {"rank[GC;GD]=n", v.dim_sum_space == v.ambient}};
    j["witness"] = nullptr;
    j["dims"] = {{"dim_c", v.dim_c}, {"dim_d", v.dim_d}, {"ambient", v.ambient}, {"dim_sum_space", v.dim_sum_space}};
    return j;
}

Json dlcp_json(const DlcpResult& d) {
    return {{"d_c", d.c.distance},
            {"d_c_method", std::string(to_string(d.c.method))},
            {"d_dual_d", d.d_dual.distance},
            {"d_dual_d_method", std::string(to_string(d.d_dual.method))},
            {"dlcp", d.dlcp}};
}

BklcTable BklcTable::parse(std::istream& in) {
    BklcTable t;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        const auto f = split(s, ',');
        if (!header) {
            if (f != std::vector<std::string>{"q", "n", "k", "d"}) {
                fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected header q,n,k,d");
            }
            header = true;
            continue;
        }
        if (f.size() != 4) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 4 fields");
        std::int64_t v[4];
        for (int i = 0; i < 4; ++i) {
            std::size_t used = 0;
            try {
                v[i] = std::stoll(f[i], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != f[i].size() || v[i] < 0) {
                fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + f[i] + "'");
            }
        }
        t.entries_[{static_cast<std::uint64_t>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])}] =
            static_cast<int>(v[3]);
    }
    if (!header) fail(ErrorKind::ParseError, "line " + std::to_string(line_no + 1) + ": missing header q,n,k,d");
    return t;
}

BklcTable BklcTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "line 0: cannot open " + path);
    return parse(in);
}

std::optional<int> BklcTable::lookup(std::uint64_t q, int n, int k) const {
    if (auto it = entries_.find({q, n, k}); it != entries_.end()) return it->second;
    return std::nullopt;
}

std::string format_bklc(std::optional<int> d) { return d ? std::to_string(*d) : "-"; }

}  // namespace lcpqc
