#include "lcpqc/poly.hpp"

#include <algorithm>

#include "lcpqc/error.hpp"

namespace lcpqc {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (!field_.contains(c)) fail(ErrorKind::ValueOutOfField, "coefficient outside field");
    }
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Field field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(Field field, Elem c, int degree) {
    std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x_m_minus(Field field, int m, Elem lambda) {
    std::vector<Elem> v(static_cast<std::size_t>(m) + 1, 0);
    v[m] = 1;
    v[0] = field.add(v[0], field.neg(lambda));
    return Poly(std::move(field), std::move(v));
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(coeffs_.size() + static_cast<std::size_t>(k), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
    return Poly(field_, std::move(v));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Elem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] = f.add(v[i + j], f.mul(ai, b.coeffs()[j]));
    }
    return Poly(f, std::move(v));
}

DivRem poly_divrem(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) fail(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Elem inv_lead = f.inv(b.lead());
    std::vector<Elem> q(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        const Elem c = f.mul(r[i], inv_lead);
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly poly_rem(const Poly& a, const Poly& b) { return poly_divrem(a, b).remainder; }

Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) fail(ErrorKind::NotDivisor, "divisor does not divide dividend");
    return q;
}

bool poly_divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_rem(a, d).is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly poly_gcd(const Poly& a, const Poly& b, const Poly& c) { return poly_gcd(poly_gcd(a, b), c); }

Poly poly_lcm(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return poly_exact_div(a.monic() * b.monic(), poly_gcd(a, b));
}

Xgcd poly_xgcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem inv = f.inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) { return poly_rem(a * b, mod); }

Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& mod) {
    Poly result = poly_rem(Poly::constant(a.field(), 1), mod);
    Poly base = poly_rem(a, mod);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, mod);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, mod);
    }
    return result;
}

bool poly_lex_less(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        const Elem x = a.coeff(static_cast<int>(i));
        const Elem y = b.coeff(static_cast<int>(i));
        if (x != y) return f.less(x, y);
    }
    return false;
}

bool poly_canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return poly_lex_less(a, b);
}

}  // namespace lcpqc
