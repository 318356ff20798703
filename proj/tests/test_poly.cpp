#include <doctest.h>

#include "lcpqc/error.hpp"
#include "lcpqc/poly.hpp"
#include "support.hpp"

using namespace lcpqc;

namespace {

Poly P(const Field& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

}  // namespace

TEST_CASE("division examples") {
    const Field f3 = Field::make(3);
    const auto qr = poly_divrem(Poly::x_m_minus(f3, 4, 1), P(f3, {1, 1}));
    // Oracle: multiply back.
    CHECK(qr.quotient == P(f3, {2, 1, 2, 1}));
    CHECK(qr.remainder.is_zero());
    CHECK(qr.quotient * P(f3, {1, 1}) == Poly::x_m_minus(f3, 4, 1));

    const Field f5 = Field::make(5);
    const auto self = poly_divrem(P(f5, {2, 0, 1}), P(f5, {2, 0, 1}));
    CHECK(self.quotient == Poly::constant(f5, 1));
    CHECK(self.remainder.is_zero());

    const auto small = poly_divrem(P(f3, {1, 1}), P(f3, {1, 0, 1}));
    CHECK(small.quotient.is_zero());
    CHECK(small.remainder == P(f3, {1, 1}));

    CHECK_THROWS_AS(poly_divrem(P(f3, {1}), Poly(f3)), Error);
    try {
        poly_divrem(P(f3, {1}), Poly(f3));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZeroPoly);
    }
    try {
        (void)(P(f3, {1}) + P(f5, {1}));
        FAIL("mixed fields accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("gcd and lcm examples") {
    const Field f3 = Field::make(3);
    // x^2+x+1 at x = 2 is 7 = 1 mod 3, so x+1 does not divide it.
    CHECK(P(f3, {1, 1, 1}).eval(2) == 1);
    CHECK(poly_gcd(P(f3, {1, 1}), P(f3, {1, 1, 1})).is_one());
    const Poly a = P(f3, {2, 0, 2});
    CHECK(poly_gcd(a, a) == a.monic());
    CHECK(poly_lcm(P(f3, {1, 1}), P(f3, {2, 1})) == P(f3, {2, 0, 1}));
    CHECK(poly_gcd(Poly(f3), Poly(f3)).is_zero());
    CHECK(poly_lcm(a, Poly(f3)).is_zero());
}

TEST_CASE("degree of zero is below every degree") {
    const Field f5 = Field::make(5);
    CHECK(Poly(f5).degree() == kNegInfDegree);
    CHECK(Poly(f5).degree() < Poly::constant(f5, 1).degree());
    const Poly a = P(f5, {1, 2, 3});
    const Poly b = P(f5, {4, 1});
    CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK((a * Poly(f5)).is_zero());
}

TEST_CASE("random gcd and Bezout identities") {
    std::mt19937_64 rng(20261014);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const Field f = testsupport::small_field(q);
        for (int i = 0; i < 250; ++i) {
            Poly a = testsupport::random_poly(f, 1 + static_cast<int>(rng() % 9), rng);
            Poly b = testsupport::random_poly(f, 1 + static_cast<int>(rng() % 9), rng);
            if (rng() % 4 == 0) {
                // Force a common factor.
                const Poly c = testsupport::random_poly(f, 3, rng);
                a = a * c;
                b = b * c;
            }
            const Poly g = poly_gcd(a, b);
            if (a.is_zero() && b.is_zero()) {
                CHECK(g.is_zero());
                continue;
            }
            CHECK(g.lead() == 1);
            CHECK(poly_divides(g, a));
            CHECK(poly_divides(g, b));
            const auto x = poly_xgcd(a, b);
            CHECK(x.gcd == g);
            CHECK(x.u * a + x.v * b == g);
            if (!a.is_zero() && !b.is_zero()) {
                const Poly l = poly_lcm(a, b);
                CHECK(l * g == (a * b).monic());
            }
            const auto qr = poly_divrem(a, b.is_zero() ? Poly::constant(f, 1) : b);
            CHECK(qr.quotient * (b.is_zero() ? Poly::constant(f, 1) : b) + qr.remainder == a);
        }
    }
}

TEST_CASE("polynomial text forms") {
    const Field f5 = Field::make(5);
    CHECK(poly_parse("2,3,1", f5) == P(f5, {2, 3, 1}));
    CHECK(poly_parse("x^2+3x+2", f5) == P(f5, {2, 3, 1}));
    CHECK(poly_parse("0", f5).is_zero());
    CHECK(poly_format(P(f5, {2, 3, 1})) == "2,3,1");
    CHECK(poly_format(Poly(f5)) == "0");
    const Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{2, 2, 1});
    const Poly p = poly_parse("w^7x^6 + wx^5 + 2", f9);
    CHECK(p.degree() == 6);
    CHECK(p.coeff(6) == f9.pow(f9.generator(), 7));
    CHECK(p.coeff(5) == f9.generator());
    CHECK(poly_parse(poly_format(p), f9) == p);
    CHECK(poly_parse(poly_format_expr(p), f9) == p);
    CHECK_THROWS_AS(poly_parse("1,,2", f5), Error);
    CHECK_THROWS_AS(poly_parse("x^", f5), Error);
}
