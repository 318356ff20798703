#include "lcpqc/lcp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "lcpqc/error.hpp"

namespace lcpqc {

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::TwoGen: return "two-gen-characterization";
        case Engine::OneGen: return "one-gen-characterization";
        case Engine::Dc: return "dc-corollary";
        case Engine::Constituents: return "constituents";
        case Engine::Oracle: return "oracle";
    }
    return "unknown";
}

bool LcpReport::condition(std::string_view name) const {
    for (const auto& c : conditions) {
        if (c.name == name) return c.holds;
    }
    throw std::out_of_range("no condition named " + std::string(name));
}

const ConstituentFields& constituent_fields(const Field& field, int m, Elem lambda) {
    using Key = std::tuple<std::string, int, Elem>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<ConstituentFields>> cache;
    Key key{field.describe(), m, lambda};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto fz = factorize_xm_minus_lambda(field, m, lambda);
    std::vector<QuotientField> fields;
    for (const auto& f : fz.factors) fields.push_back(QuotientField::make(f));
    auto entry = std::make_unique<ConstituentFields>(ConstituentFields{std::move(fz), std::move(fields)});
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(entry));
    return *it->second;
}

namespace {

void require_ambient(const QtCodeSpec& c, const QtCodeSpec& d) {
    if (!c.same_ambient(d)) fail(ErrorKind::MismatchedAmbient, "codes differ in q, m or lambda");
}

QtCodeSpec valid_standard(const QtCodeSpec& spec, const char* which) {
    QtCodeSpec s = normalize_one_generator(spec);
    const auto rep = validate_standard_form(s);
    if (!rep.ok()) {
        std::string msg = std::string(which) + ":";
        for (const auto& f : rep.failures()) msg += " " + f + ";";
        fail(ErrorKind::InvalidStandardForm, msg);
    }
    return s;
}

// First canonical factor of x^m - lambda dividing v, if any.
std::optional<Poly> first_factor_dividing(const Poly& v, const Field& field, int m, Elem lambda) {
    if (v.degree() <= 0) return std::nullopt;
    for (const auto& f : constituent_fields(field, m, lambda).factorization.factors) {
        if (poly_divides(f, v)) return f;
    }
    return std::nullopt;
}

// lcm(a, b) / gcd(a, b): supported exactly where two monic divisors differ.
Poly difference_locus(const Poly& a, const Poly& b) {
    return poly_exact_div(poly_lcm(a, b), poly_gcd(a, b));
}

}  // namespace

LcpReport lcp_two_generator(const QtCodeSpec& c_in, const QtCodeSpec& d_in) {
    require_ambient(c_in, d_in);
    const QtCodeSpec c = valid_standard(c_in, "C");
    const QtCodeSpec d = valid_standard(d_in, "D");
    const auto& [g11, g12, g22] = c.standard_form();
    const auto& [f11, f12, f22] = d.standard_form();
    const Poly M = c.modulus();

    const Poly g = poly_gcd(g11, g22);
    const Poly f = poly_gcd(f11, f22);
    const Poly h = poly_exact_div(M, poly_lcm(f11, f22));
    const Poly l = poly_exact_div(M, poly_lcm(g11, g22));
    const Poly g22p = poly_exact_div(g22, g);
    const Poly f22p = poly_exact_div(f22, f);
    const Poly det = g11 * f12 - g12 * f11;

    const Poly c1 = poly_gcd(f11, g11);
    const Poly c4 = poly_gcd(g22p, f22p, det);

    LcpReport r;
    r.engine = Engine::TwoGen;
    r.conditions = {{"I", c1.is_one()}, {"II", g == h}, {"III", f == l}, {"IV", c4.is_one()}};
    r.verdict = true;
    for (const auto& x : r.conditions) r.verdict = r.verdict && x.holds;
    r.dim_c = dimension(c);
    r.dim_d = dimension(d);
    r.ambient = 2 * c.m();
    r.lambda = c.lambda();
    r.details = {{"g", g}, {"f", f}, {"g22'", g22p}, {"f22'", f22p}};
    if (!r.verdict) {
        const Poly v = poly_lcm(poly_lcm(c1, c4), poly_lcm(difference_locus(g, h), difference_locus(f, l)));
        r.witness = first_factor_dividing(v, c.field(), c.m(), c.lambda());
    }
    return r;
}

LcpReport lcp_one_generator(const QtCodeSpec& c, const QtCodeSpec& d) {
    require_ambient(c, d);
    const auto& [g11, g12] = c.one_gen();
    const auto& [f11, f12] = d.one_gen();
    const Poly M = c.modulus();
    if (g11.is_zero() || !poly_divides(g11, M)) fail(ErrorKind::NotDivisor, "g11 must divide x^m-lambda");
    if (f11.is_zero() || !poly_divides(f11, M)) fail(ErrorKind::NotDivisor, "f11 must divide x^m-lambda");

    const Poly a = poly_gcd(g11, g12);
    const Poly b = poly_gcd(f11, f12);
    const Poly cc = poly_gcd(M, g11 * f12 - g12 * f11);

    LcpReport r;
    r.engine = Engine::OneGen;
    r.conditions = {{"A", a.is_one()}, {"B", b.is_one()}, {"C", cc.is_one()}};
    r.verdict = a.is_one() && b.is_one() && cc.is_one();
    r.dim_c = dimension(c);
    r.dim_d = dimension(d);
    r.ambient = 2 * c.m();
    r.lambda = c.lambda();
    if (!r.verdict) {
        r.witness = first_factor_dividing(poly_lcm(poly_lcm(a, b), cc), c.field(), c.m(), c.lambda());
    }
    return r;
}

LcpReport lcp_dc(const Poly& a, const Poly& b, int m, Elem lambda) {
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "a and b over different fields");
    if (a.degree() >= m || b.degree() >= m) fail(ErrorKind::DegreeTooLarge, "deg a and deg b must be below m");
    const Field& field = a.field();
    const QtCodeSpec probe(field, m, lambda, StandardForm{Poly::constant(field, 1), a, Poly::x_m_minus(field, m, lambda)});
    const Poly gd = poly_gcd(a - b, probe.modulus());

    LcpReport r;
    r.engine = Engine::Dc;
    r.conditions = {{"gcd(a-b,x^m-lambda)=1", gd.is_one()}};
    r.verdict = gd.is_one();
    r.dim_c = m;
    r.dim_d = m;
    r.ambient = 2 * m;
    r.lambda = lambda;
    if (!r.verdict) r.witness = first_factor_dividing(gd, field, m, lambda);
    return r;
}

std::optional<bool> lcp_maximal_corollary(const QtCodeSpec& c, const QtCodeSpec& d) {
    require_ambient(c, d);
    if (!c.is_one_generator() || !d.is_one_generator()) return std::nullopt;
    const auto& [g11, g12] = c.one_gen();
    const auto& [f11, f12] = d.one_gen();
    if (!poly_gcd(g11, g12).is_one() || !poly_gcd(f11, f12).is_one()) return std::nullopt;
    return poly_gcd(c.modulus(), g11 * f12 - g12 * f11).is_one();
}

std::vector<Constituent> constituents(const QtCodeSpec& spec) {
    const QtCodeSpec s = normalize_one_generator(spec);
    const auto& sf = s.standard_form();
    const auto& cf = constituent_fields(s.field(), s.m(), s.lambda());
    std::vector<Constituent> out;
    for (std::size_t i = 0; i < cf.fields.size(); ++i) {
        const QuotientField& qf = cf.fields[i];
        GenMatrix g(qf.field(), 2, 2);
        g.at(0, 0) = qf.reduce(sf.g11);
        g.at(0, 1) = qf.reduce(sf.g12);
        g.at(1, 1) = qf.reduce(sf.g22);
        out.push_back(Constituent{i + 1, qf.modulus(), qf.field(), std::move(g)});
    }
    return out;
}

std::vector<ConstituentPair> constituent_pairs(const QtCodeSpec& c, const QtCodeSpec& d) {
    require_ambient(c, d);
    auto cs = constituents(c);
    auto ds = constituents(d);
    std::vector<ConstituentPair> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::size_t rg = rank(cs[i].g);
        const std::size_t rh = rank(ds[i].g);
        const bool ok = rg + rh == 2 && rank(stack(cs[i].g, ds[i].g)) == 2;
        out.push_back(ConstituentPair{cs[i].index, cs[i].factor, cs[i].field, cs[i].g, ds[i].g, ok});
    }
    return out;
}

LcpReport lcp_via_constituents(const QtCodeSpec& c, const QtCodeSpec& d) {
    const auto pairs = constituent_pairs(c, d);
    LcpReport r;
    r.engine = Engine::Constituents;
    r.verdict = true;
    for (const auto& p : pairs) {
        r.conditions.push_back({"f_" + std::to_string(p.index), p.lcp});
        if (!p.lcp && r.verdict) r.witness = p.factor;
        r.verdict = r.verdict && p.lcp;
    }
    r.dim_c = dimension(c);
    r.dim_d = dimension(d);
    r.ambient = 2 * c.m();
    r.lambda = c.lambda();
    return r;
}

}  // namespace lcpqc
