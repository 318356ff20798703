#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lcpqc/field.hpp"
#include "lcpqc/matrix.hpp"
#include "lcpqc/poly.hpp"

namespace lcpqc {

/// Single generator (g11, g12) with g11 | x^m - lambda.
struct OneGen {
    Poly g11;
    Poly g12;
};

/// Generating pair (g11, g12), (0, g22).
struct StandardForm {
    Poly g11;
    Poly g12;
    Poly g22;
};

/// An index-2 lambda-quasi-twisted code of length 2m over F_q, given by
/// polynomial generators in R_lambda = F_q[x]/(x^m - lambda). lambda = 1 is the
/// quasi-cyclic case.
class QtCodeSpec {
public:
    /// Checks lambda != 0, gcd(m, q) = 1 and that every generator lives over
    /// `field`. Divisibility conditions are left to the validators.
    QtCodeSpec(Field field, int m, Elem lambda, std::variant<OneGen, StandardForm> gens);

    const Field& field() const noexcept { return field_; }
    int m() const noexcept { return m_; }
    Elem lambda() const noexcept { return lambda_; }
    int length() const noexcept { return 2 * m_; }
    bool quasi_cyclic() const noexcept { return lambda_ == 1; }
    bool is_one_generator() const noexcept { return std::holds_alternative<OneGen>(gens_); }
    const OneGen& one_gen() const;
    const StandardForm& standard_form() const;
    const std::variant<OneGen, StandardForm>& gens() const noexcept { return gens_; }

    /// x^m - lambda.
    Poly modulus() const { return Poly::x_m_minus(field_, m_, lambda_); }
    bool same_ambient(const QtCodeSpec& other) const noexcept;

private:
    Field field_;
    int m_;
    Elem lambda_;
    std::variant<OneGen, StandardForm> gens_;
};

struct ValidationReport {
    bool g11_divides = false;      // g11 | x^m - lambda
    bool g22_divides = false;      // g22 | x^m - lambda
    bool degree_ok = false;        // deg g12 < deg g22
    bool product_divides = false;  // g11 g22 | (x^m - lambda) g12
    bool gcd_form = false;         // gcd(g11, g22) | g12
    bool ok() const noexcept { return g11_divides && g22_divides && degree_ok && product_divides && gcd_form; }
    std::vector<std::string> failures() const;
};

ValidationReport validate_standard_form(const QtCodeSpec& spec);

/// Replaces g12 by g12 mod g22. The generated code is unchanged because
/// (0, g22) is itself a generator.
QtCodeSpec reduce_standard_form(const QtCodeSpec& spec);

/// One-generator normalization: with g = gcd(g11, g12) and g11 = g g11', use
/// g22 = (x^m - lambda)/g11' and g12 mod g22. Throws NotDivisor when
/// g11 does not divide x^m - lambda. StandardForm input is returned unchanged.
QtCodeSpec normalize_one_generator(const QtCodeSpec& spec);

/// 2m - deg g11 - deg g22 for a StandardForm spec (normalized first if needed).
int dimension(const QtCodeSpec& spec);

/// Rows x^j (g11, g12) for j < m - deg g11 and x^j (0, g22) for j < m - deg g22,
/// coordinates interleaved as (c_{0,0}, c_{0,1}, c_{1,0}, c_{1,1}, ...).
/// One-generator specs are normalized first; throws InvalidStandardForm.
GenMatrix generator_matrix(const QtCodeSpec& spec);

/// The m rows x^j (g11, g12), 0 <= j < m, of a one-generator code.
GenMatrix one_generator_matrix(const QtCodeSpec& spec);

/// Interleaved vector of (a(x), b(x)) mod x^m - lambda.
std::vector<Elem> interleave(const Poly& a, const Poly& b, int m);
/// x * c(x) mod (x^m - lambda) applied to a coefficient vector of length m.
std::vector<Elem> twist_shift(const Field& f, std::span<const Elem> c, Elem lambda);
/// The lambda-shift T_lambda on a vector of length n.
std::vector<Elem> lambda_shift(const Field& f, std::span<const Elem> v, Elem lambda);

}  // namespace lcpqc
