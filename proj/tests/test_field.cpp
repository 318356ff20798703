#include <doctest.h>

#include "lcpqc/error.hpp"
#include "lcpqc/field.hpp"

using namespace lcpqc;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an lcpqc::Error");
    return ErrorKind::SyntaxError;
}

Elem el(const Field& f, std::initializer_list<std::uint32_t> c) {
    std::vector<std::uint32_t> v(c);
    v.resize(static_cast<std::size_t>(f.degree()), 0);
    return f.pack(v);
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
    const Field f5 = Field::make(5);
    CHECK(f5.order() == 5);
    CHECK(f5.degree() == 1);
    CHECK(f5.modulus().empty());
    CHECK(f5.mul(2, 4) == 3);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.inv(2) == 3);
    CHECK(Field::make(5) == f5);
}

TEST_CASE("F_9 with w^2 + 2w + 2") {
    const Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{2, 2, 1});
    const Elem w = f9.generator();
    CHECK(f9.mul(w, w) == el(f9, {1, 1}));
    CHECK(f9.generator_is_primitive());
    CHECK(f9.describe() == "F_9 = F_3[w]/(w^2+2w+2)");
}

TEST_CASE("F_4 default modulus is the only irreducible quadratic over F_2") {
    // Oracle: of x^2, x^2+1, x^2+x, x^2+x+1 only the last has no root in F_2.
    int irreducible = 0;
    std::uint32_t found_c0 = 0, found_c1 = 0;
    for (std::uint32_t c0 = 0; c0 < 2; ++c0) {
        for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
            bool root = false;
            for (std::uint32_t x = 0; x < 2; ++x) root |= (x * x + c1 * x + c0) % 2 == 0;
            if (!root) {
                ++irreducible;
                found_c0 = c0;
                found_c1 = c1;
            }
        }
    }
    REQUIRE(irreducible == 1);
    const Field f4 = Field::make(2, 2);
    REQUIRE(f4.modulus().size() == 3);
    CHECK(f4.modulus()[0] == found_c0);
    CHECK(f4.modulus()[1] == found_c1);
    CHECK(f4 == Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1}));

    // Brute-force F_4 table: (a1 w + a0)(b1 w + b0) with w^2 = w + 1.
    for (Elem a = 0; a < 4; ++a) {
        for (Elem b = 0; b < 4; ++b) {
            const unsigned a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
            const unsigned ww = a1 & b1;
            const unsigned c0 = ((a0 & b0) ^ ww) & 1;
            const unsigned c1 = ((a0 & b1) ^ (a1 & b0) ^ ww) & 1;
            CHECK(f4.mul(a, b) == (c1 << 1 | c0));
        }
    }
    const Elem w = f4.generator();
    CHECK(f4.mul(w, f4.add(w, 1)) == 1);
}

TEST_CASE("field construction errors") {
    CHECK(kind_of([] { Field::make(4); }) == ErrorKind::NonPrimeCharacteristic);
    CHECK(kind_of([] { Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind_of([] { Field::make(3, 2, std::vector<std::uint32_t>{1, 1}); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { Field::make(2, 17); }) == ErrorKind::FieldTooLarge);
}

TEST_CASE("element arithmetic across fields and division by zero") {
    const Field f5 = Field::make(5);
    const Field f7 = Field::make(7);
    CHECK(kind_of([&] { (void)(FieldElement(f5, 1) + FieldElement(f7, 1)); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([&] { (void)(FieldElement(f5, 1) / FieldElement(f5, 0)); }) == ErrorKind::DivisionByZero);
    CHECK(elem_arith(FieldElement(f5, 2), FieldElement(f5, 4), ArithOp::Mul).value() == 3);
    CHECK(elem_arith(FieldElement(f5, 2), FieldElement(f5, 4), ArithOp::Div).value() == 3);
}

TEST_CASE("element parsing") {
    const Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{2, 2, 1});
    const FieldElement w(f9, f9.generator());
    CHECK(elem_parse("w^3", f9) == w * w * w);
    CHECK(elem_parse("0", f9).is_zero());
    CHECK(elem_parse("2*w+1", f9).value() == el(f9, {1, 2}));
    CHECK(elem_parse("2w + 1", f9).value() == el(f9, {1, 2}));
    CHECK(elem_parse("2", Field::make(5)).value() == 2);
    CHECK(elem_parse("-1", Field::make(5)).value() == 4);

    const Field f4 = Field::make(2, 2);
    CHECK(elem_parse("1+w^2", f4).value() == f4.generator());

    CHECK(kind_of([] { elem_parse("2*", Field::make(5)); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { elem_parse("x", Field::make(5)); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { elem_parse("5", Field::make(5)); }) == ErrorKind::ValueOutOfField);
    CHECK(kind_of([] { elem_parse("w", Field::make(5)); }) == ErrorKind::ValueOutOfField);
    // In F_3[w]/(w^2+1) the generator has order 4, so power forms are refused.
    const Field bad = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK_FALSE(bad.generator_is_primitive());
    CHECK(kind_of([&] { elem_parse("w^2", bad); }) == ErrorKind::NonPrimitiveGeneratorForPowerForm);
    CHECK(elem_parse("w", bad).value() == bad.generator());
}

TEST_CASE("exhaustive group and Frobenius checks for q <= 81") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 32u, 37u,
                            41u, 43u, 47u, 49u, 53u, 59u, 61u, 64u, 67u, 71u, 73u, 79u, 81u}) {
        std::uint32_t p = 2;
        while (q % p) ++p;
        int k = 0;
        for (std::uint32_t t = q; t > 1; t /= p) ++k;
        const Field f = Field::make(p, k);
        CAPTURE(q);
        REQUIRE(f.order() == q);
        bool cyclic = false;
        for (Elem a = 1; a < q; ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            Elem x = a;
            std::uint32_t ord = 1;
            while (x != 1) {
                x = f.mul(x, a);
                ++ord;
            }
            cyclic |= ord == q - 1;
        }
        CHECK(cyclic);
        bool frobenius = true;
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) frobenius &= f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p));
        }
        CHECK(frobenius);
    }
}

TEST_CASE("format and parse round trip") {
    for (const Field& f : {Field::make(3), Field::make(5), Field::make(2, 2),
                           Field::make(3, 2, std::vector<std::uint32_t>{2, 2, 1})}) {
        for (Elem a = 0; a < f.order(); ++a) {
            CAPTURE(elem_format(f, a));
            CHECK(elem_parse(elem_format(f, a), f).value() == a);
        }
    }
}
