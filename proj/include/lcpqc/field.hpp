#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcpqc {

/// Element of F_{p^k} packed as the integer sum c_i p^i of its coefficient
/// vector (c_0, ..., c_{k-1}) in the basis 1, w, ..., w^{k-1}.
using Elem = std::uint64_t;

/// Largest order accepted by Field::make. Quotient fields built internally for
/// constituent codes may be larger.
inline constexpr Elem kMaxUserFieldOrder = Elem{1} << 16;

/// Immutable description of a finite field F_{p^k} = F_p[w]/(modulus).
///
/// Copies share one underlying descriptor. Equality is structural: two
/// fields compare equal iff characteristic, degree and modulus agree.
class Field {
public:
    /// Builds F_{p^k}. When `modulus` is absent and k > 1 the lexicographically
    /// smallest monic irreducible of degree k is used, with coefficients
    /// compared from the constant term upwards. The modulus is given low
    /// degree first and must have k + 1 entries with a trailing 1.
    static Field make(std::uint32_t p, int k = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                      std::string symbol = "w");

    /// Builds a field from a modulus already known to be irreducible. No
    /// irreducibility check and no size cap beyond 64-bit packing.
    static Field from_trusted_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                      std::string symbol = "w");

    std::uint32_t characteristic() const noexcept;
    int degree() const noexcept;
    Elem order() const noexcept;
    /// Monic modulus, low degree first; empty for prime fields.
    std::span<const std::uint32_t> modulus() const noexcept;
    const std::string& symbol() const noexcept;

    static constexpr Elem zero() noexcept { return 0; }
    static constexpr Elem one() noexcept { return 1; }
    /// The adjoined root w. Only meaningful for k > 1.
    Elem generator() const noexcept;
    Elem from_int(std::int64_t v) const noexcept;
    bool contains(Elem a) const noexcept { return a < order(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem pack(std::span<const std::uint32_t> coeffs) const;
    /// Lexicographic order on coefficient vectors, constant term first.
    bool less(Elem a, Elem b) const noexcept;

    /// True iff w generates the multiplicative group. Computed once per
    /// descriptor on first use.
    bool generator_is_primitive() const;

    bool operator==(const Field& other) const noexcept;
    bool same_descriptor(const Field& other) const noexcept { return impl_ == other.impl_; }

    std::string describe() const;

    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Element bound to its field. Arithmetic across different fields throws
/// FieldMismatch instead of coercing.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Elem value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Parses an element: an integer below p, an additive form such as "2*w+1",
/// or a power form "w^j". Exponents j >= k need w to be primitive.
FieldElement elem_parse(std::string_view text, const Field& field);
std::string elem_format(const Field& field, Elem a);
inline std::string elem_format(const FieldElement& a) { return elem_format(a.field(), a.value()); }

bool is_prime(std::uint64_t n) noexcept;

}  // namespace lcpqc
