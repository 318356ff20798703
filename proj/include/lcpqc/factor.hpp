#pragma once

#include <cstdint>
#include <vector>

#include "lcpqc/field.hpp"
#include "lcpqc/poly.hpp"

namespace lcpqc {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'1c9c'0001ULL;

/// Rabin-style test: f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f);

/// Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting of a
/// square-free polynomial. Factors are monic and canonically ordered.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

struct Factorization {
    Poly modulus_poly;          // x^m - lambda
    std::vector<Poly> factors;  // distinct monic irreducibles, canonical order
    int m = 0;
    Elem lambda = 1;
};

/// Requires gcd(m, p) = 1 (NonCoprimeParameters) and lambda != 0 (ZeroLambda).
Factorization factorize_xm_minus_lambda(const Field& field, int m, Elem lambda,
                                        std::uint64_t seed = kDefaultFactorSeed);

/// The field F_q[x]/(f) for an irreducible f over F_q, flattened to a single
/// extension of the prime field. reduce() is the residue map a -> a mod f.
class QuotientField {
public:
    /// Throws ReducibleModulus if f is not irreducible.
    static QuotientField make(const Poly& f);

    const Field& field() const noexcept { return field_; }
    const Field& base() const noexcept { return modulus_.field(); }
    const Poly& modulus() const noexcept { return modulus_; }

    Elem reduce(const Poly& a) const;

private:
    QuotientField(Poly modulus, Field field, std::vector<std::vector<std::uint32_t>> to_flat)
        : modulus_(std::move(modulus)), field_(std::move(field)), to_flat_(std::move(to_flat)) {}

    Poly modulus_;
    Field field_;
    // Change of basis from coordinates in {w^a x^b} to the power basis of the
    // flattened field; empty when the base field is prime.
    std::vector<std::vector<std::uint32_t>> to_flat_;
};

inline QuotientField quotient_field_make(const Poly& f) { return QuotientField::make(f); }
inline Elem reduce_mod(const Poly& a, const QuotientField& fi) { return fi.reduce(a); }

}  // namespace lcpqc
