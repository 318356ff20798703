#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcpqc/field.hpp"

namespace lcpqc {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kNegInfDegree = INT_MIN;

/// Dense univariate polynomial over a finite field, low degree first, with
/// no trailing zero coefficients. The zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(Field field, Elem c);
    static Poly monomial(Field field, Elem c, int degree);
    /// x^m - lambda.
    static Poly x_m_minus(Field field, int m, Elem lambda);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return coeffs_.empty() ? kNegInfDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Elem coeff(int i) const noexcept {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
    }

    Poly monic() const;
    Poly scaled(Elem c) const;
    Poly shifted(int k) const;
    Elem eval(Elem x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
    }

private:
    void trim();
    Field field_;
    std::vector<Elem> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZeroPoly for b = 0.
DivRem poly_divrem(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);
/// Exact quotient; throws NotDivisor when b does not divide a.
Poly poly_exact_div(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b, const Poly& c);
/// Monic lcm; lcm(a, 0) = 0.
Poly poly_lcm(const Poly& a, const Poly& b);

struct Xgcd {
    Poly gcd;
    Poly u;
    Poly v;
};
/// u*a + v*b = gcd with gcd monic.
Xgcd poly_xgcd(const Poly& a, const Poly& b);

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& mod);

/// Lexicographic comparison low degree first, used for canonical ordering.
bool poly_lex_less(const Poly& a, const Poly& b);
/// Degree first, then poly_lex_less.
bool poly_canonical_less(const Poly& a, const Poly& b);

/// Parses a polynomial. Accepted forms: a comma-separated list of element
/// tokens, low degree first ("2,3,1" is x^2+3x+2), or an expression in x
/// such as "x^5 + w^2x^4 - 1".
Poly poly_parse(std::string_view text, const Field& field);
/// Comma-separated canonical element tokens, low degree first; "0" for zero.
std::string poly_format(const Poly& p);
/// Human-readable expression in x.
std::string poly_format_expr(const Poly& p);

}  // namespace lcpqc
