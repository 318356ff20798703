#include "lcpqc/qtcode.hpp"

#include <numeric>

#include "lcpqc/error.hpp"

namespace lcpqc {

namespace {

void require_field(const Poly& p, const Field& f) {
    if (!(p.field() == f)) fail(ErrorKind::FieldMismatch, "generator over a different field");
}

std::vector<Elem> padded(const Poly& p, int m) {
    std::vector<Elem> v(static_cast<std::size_t>(m), 0);
    for (int i = 0; i <= p.degree() && i < m; ++i) v[i] = p.coeff(i);
    return v;
}

}  // namespace

QtCodeSpec::QtCodeSpec(Field field, int m, Elem lambda, std::variant<OneGen, StandardForm> gens)
    : field_(std::move(field)), m_(m), lambda_(lambda), gens_(std::move(gens)) {
    if (m_ < 1) fail(ErrorKind::NonCoprimeParameters, "m must be positive");
    if (lambda_ == 0) fail(ErrorKind::ZeroLambda, "lambda must be nonzero");
    if (!field_.contains(lambda_)) fail(ErrorKind::ValueOutOfField, "lambda outside field");
    if (std::gcd(static_cast<std::uint32_t>(m_), field_.characteristic()) != 1) {
        fail(ErrorKind::NonCoprimeParameters, "gcd(m, q) != 1 for m = " + std::to_string(m_));
    }
    if (const auto* one = std::get_if<OneGen>(&gens_)) {
        require_field(one->g11, field_);
        require_field(one->g12, field_);
    } else {
        const auto& sf = std::get<StandardForm>(gens_);
        require_field(sf.g11, field_);
        require_field(sf.g12, field_);
        require_field(sf.g22, field_);
    }
}

const OneGen& QtCodeSpec::one_gen() const {
    if (const auto* g = std::get_if<OneGen>(&gens_)) return *g;
    fail(ErrorKind::InvalidStandardForm, "spec is not in one-generator form");
}

const StandardForm& QtCodeSpec::standard_form() const {
    if (const auto* g = std::get_if<StandardForm>(&gens_)) return *g;
    fail(ErrorKind::InvalidStandardForm, "spec is not in standard form");
}

bool QtCodeSpec::same_ambient(const QtCodeSpec& other) const noexcept {
    return field_ == other.field_ && m_ == other.m_ && lambda_ == other.lambda_;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    if (!g11_divides) out.emplace_back("g11 does not divide x^m-lambda");
    if (!g22_divides) out.emplace_back("g22 does not divide x^m-lambda");
    if (!degree_ok) out.emplace_back("deg g12 >= deg g22");
    if (!product_divides) out.emplace_back("g11*g22 does not divide (x^m-lambda)*g12");
    if (!gcd_form) out.emplace_back("gcd(g11,g22) does not divide g12");
    return out;
}

ValidationReport validate_standard_form(const QtCodeSpec& spec) {
    const auto& sf = spec.standard_form();
    const Poly M = spec.modulus();
    ValidationReport r;
    r.g11_divides = !sf.g11.is_zero() && poly_divides(sf.g11, M);
    r.g22_divides = !sf.g22.is_zero() && poly_divides(sf.g22, M);
    r.degree_ok = !sf.g22.is_zero() && sf.g12.degree() < sf.g22.degree();
    r.product_divides = poly_divides(sf.g11 * sf.g22, M * sf.g12);
    r.gcd_form = poly_divides(poly_gcd(sf.g11, sf.g22), sf.g12);
    return r;
}

QtCodeSpec reduce_standard_form(const QtCodeSpec& spec) {
    const auto& sf = spec.standard_form();
    if (sf.g22.is_zero()) return spec;
    return QtCodeSpec(spec.field(), spec.m(), spec.lambda(), StandardForm{sf.g11, poly_rem(sf.g12, sf.g22), sf.g22});
}

QtCodeSpec normalize_one_generator(const QtCodeSpec& spec) {
    if (!spec.is_one_generator()) return spec;
    const auto& og = spec.one_gen();
    const Poly M = spec.modulus();
    if (og.g11.is_zero() || !poly_divides(og.g11, M)) fail(ErrorKind::NotDivisor, "g11 must divide x^m-lambda");
    const Poly g = poly_gcd(og.g11, og.g12);
    const Poly g11p = poly_exact_div(og.g11, g);
    const Poly g22 = poly_exact_div(M, g11p).monic();
    return QtCodeSpec(spec.field(), spec.m(), spec.lambda(), StandardForm{og.g11, poly_rem(og.g12, g22), g22});
}

int dimension(const QtCodeSpec& spec) {
    const QtCodeSpec sf = normalize_one_generator(spec);
    const auto& g = sf.standard_form();
    return 2 * sf.m() - g.g11.degree() - g.g22.degree();
}

std::vector<Elem> interleave(const Poly& a, const Poly& b, int m) {
    std::vector<Elem> v(static_cast<std::size_t>(2 * m), 0);
    for (int t = 0; t < m; ++t) {
        v[2 * t] = a.coeff(t);
        v[2 * t + 1] = b.coeff(t);
    }
    return v;
}

std::vector<Elem> twist_shift(const Field& f, std::span<const Elem> c, Elem lambda) {
    std::vector<Elem> out(c.size());
    if (c.empty()) return out;
    out[0] = f.mul(lambda, c.back());
    for (std::size_t i = 1; i < c.size(); ++i) out[i] = c[i - 1];
    return out;
}

std::vector<Elem> lambda_shift(const Field& f, std::span<const Elem> v, Elem lambda) {
    return twist_shift(f, v, lambda);
}

namespace {

void append_shifts(GenMatrix& g, const Field& f, std::vector<Elem> a, std::vector<Elem> b, int count, Elem lambda) {
    const int m = static_cast<int>(a.size());
    std::vector<Elem> row(static_cast<std::size_t>(2 * m));
    for (int j = 0; j < count; ++j) {
        for (int t = 0; t < m; ++t) {
            row[2 * t] = a[t];
            row[2 * t + 1] = b[t];
        }
        g.append_row(row);
        a = twist_shift(f, a, lambda);
        b = twist_shift(f, b, lambda);
    }
}

}  // namespace

GenMatrix generator_matrix(const QtCodeSpec& input) {
    const QtCodeSpec spec = normalize_one_generator(input);
    const auto report = validate_standard_form(spec);
    if (!report.ok()) {
        std::string msg;
        for (const auto& s : report.failures()) msg += (msg.empty() ? "" : "; ") + s;
        fail(ErrorKind::InvalidStandardForm, msg);
    }
    const auto& sf = spec.standard_form();
    const Field& f = spec.field();
    const int m = spec.m();
    const Poly M = spec.modulus();
    GenMatrix g(f, 0, static_cast<std::size_t>(2 * m));
    append_shifts(g, f, padded(sf.g11, m), padded(poly_rem(sf.g12, M), m), m - sf.g11.degree(), spec.lambda());
    append_shifts(g, f, std::vector<Elem>(static_cast<std::size_t>(m), 0), padded(sf.g22, m), m - sf.g22.degree(),
                  spec.lambda());
    return g;
}

GenMatrix one_generator_matrix(const QtCodeSpec& spec) {
    const auto& og = spec.one_gen();
    const Poly M = spec.modulus();
    GenMatrix g(spec.field(), 0, static_cast<std::size_t>(2 * spec.m()));
    append_shifts(g, spec.field(), padded(poly_rem(og.g11, M), spec.m()), padded(poly_rem(og.g12, M), spec.m()),
                  spec.m(), spec.lambda());
    return g;
}

}  // namespace lcpqc
