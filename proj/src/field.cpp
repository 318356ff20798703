#include "lcpqc/field.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "lcpqc/error.hpp"

namespace lcpqc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NonPrimitiveGeneratorForPowerForm: return "NonPrimitiveGeneratorForPowerForm";
        case ErrorKind::ValueOutOfField: return "ValueOutOfField";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::NonCoprimeParameters: return "NonCoprimeParameters";
        case ErrorKind::ZeroLambda: return "ZeroLambda";
        case ErrorKind::InvalidStandardForm: return "InvalidStandardForm";
        case ErrorKind::NotDivisor: return "NotDivisor";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::MismatchedAmbient: return "MismatchedAmbient";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::EngineDisagreement: return "EngineDisagreement";
    }
    return "Unknown";
}

namespace {

constexpr int kMaxDigits = 64;
constexpr Elem kTableLimitUser = 256;
constexpr Elem kTableLimitTrusted = 64;

using Digits = std::vector<std::uint32_t>;

// Remainder of a by monic b over F_p, both low degree first.
Digits rem_monic(Digits a, const Digits& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < db; ++j) {
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - b[j]) * c) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero_digits(const Digits& a) {
    for (auto c : a) {
        if (c != 0) return false;
    }
    return true;
}

// Exhaustive trial division by all monic polynomials of degree 1..deg/2.
bool irreducible_by_trial_division(const Digits& f, std::uint32_t p) {
    const int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        Digits g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (is_zero_digits(rem_monic(f, g, p))) return false;
            int i = 0;
            while (i < d && ++g[i] == p) {
                g[i] = 0;
                ++i;
            }
            if (i == d) break;
        }
    }
    return true;
}

Digits smallest_irreducible(std::uint32_t p, int k) {
    // c_0 is the most significant key, so it is the slowest-moving digit.
    Digits f(k + 1, 0);
    f[k] = 1;
    while (true) {
        if (irreducible_by_trial_division(f, p)) return f;
        int i = k - 1;
        while (i >= 0 && ++f[i] == p) {
            f[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 2;
    int k = 1;
    Elem q = 2;
    Digits modulus;
    std::string symbol;
    std::vector<Elem> ppow;
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    mutable std::once_flag primitive_once;
    mutable bool primitive = false;

    Elem generic_add(Elem a, Elem b, bool subtract) const noexcept {
        if (p == 2) return a ^ b;
        Elem out = 0;
        for (int i = 0; i < k; ++i) {
            const std::uint64_t da = a % p;
            const std::uint64_t db = b % p;
            a /= p;
            b /= p;
            const std::uint64_t s = subtract ? (da + p - db) % p : (da + db) % p;
            out += s * ppow[i];
        }
        return out;
    }

    Elem generic_mul(Elem a, Elem b) const noexcept {
        std::array<std::uint64_t, kMaxDigits> da{};
        std::array<std::uint64_t, kMaxDigits> db{};
        std::array<std::uint64_t, 2 * kMaxDigits> prod{};
        int na = 0;
        int nb = 0;
        for (int i = 0; i < k; ++i) {
            da[i] = a % p;
            a /= p;
            if (da[i]) na = i + 1;
            db[i] = b % p;
            b /= p;
            if (db[i]) nb = i + 1;
        }
        if (na == 0 || nb == 0) return 0;
        for (int i = 0; i < na; ++i) {
            if (!da[i]) continue;
            for (int j = 0; j < nb; ++j) prod[i + j] += da[i] * db[j];
        }
        for (int i = 0; i < na + nb - 1; ++i) prod[i] %= p;
        for (int i = na + nb - 2; i >= k; --i) {
            const std::uint64_t c = prod[i] % p;
            if (c == 0) continue;
            for (int j = 0; j < k; ++j) {
                prod[i - k + j] = (prod[i - k + j] + (p - modulus[j]) * c) % p;
            }
        }
        Elem out = 0;
        for (int i = k - 1; i >= 0; --i) out = out * p + prod[i] % p;
        return out;
    }
};

namespace {

std::shared_ptr<Field::Impl> build_impl(std::uint32_t p, Digits modulus, std::string symbol,
                                        Elem table_limit) {
    auto impl = std::make_shared<Field::Impl>();
    impl->p = p;
    impl->k = modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1;
    impl->modulus = std::move(modulus);
    impl->symbol = std::move(symbol);
    impl->ppow.assign(impl->k + 1, 1);
    for (int i = 1; i <= impl->k; ++i) {
        if (impl->ppow[i - 1] > (~Elem{0}) / p) fail(ErrorKind::FieldTooLarge, "order exceeds 64-bit packing");
        impl->ppow[i] = impl->ppow[i - 1] * p;
    }
    impl->q = impl->ppow[impl->k];
    if (impl->k > 1 && impl->q <= table_limit) {
        const Elem q = impl->q;
        impl->add_table.resize(q * q);
        impl->mul_table.resize(q * q);
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                impl->add_table[a * q + b] = static_cast<std::uint16_t>(impl->generic_add(a, b, false));
                impl->mul_table[a * q + b] = static_cast<std::uint16_t>(impl->generic_mul(a, b));
            }
        }
    }
    return impl;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::make(std::uint32_t p, int k, std::optional<std::vector<std::uint32_t>> modulus,
                  std::string symbol) {
    if (!is_prime(p)) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (k < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
    Elem q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxUserFieldOrder) fail(ErrorKind::FieldTooLarge, "field order exceeds 2^16");
    }
    Digits mod;
    if (k == 1) {
        if (modulus && !modulus->empty()) fail(ErrorKind::DegreeMismatch, "prime fields take no modulus");
    } else if (modulus) {
        mod = *modulus;
        if (static_cast<int>(mod.size()) != k + 1 || mod.back() != 1) {
            fail(ErrorKind::DegreeMismatch, "modulus must be monic of degree " + std::to_string(k));
        }
        for (auto c : mod) {
            if (c >= p) fail(ErrorKind::ValueOutOfField, "modulus coefficient out of range");
        }
        if (!irreducible_by_trial_division(mod, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible");
    } else {
        mod = smallest_irreducible(p, k);
    }
    return Field(build_impl(p, std::move(mod), std::move(symbol), kTableLimitUser));
}

Field Field::from_trusted_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string symbol) {
    if (modulus.size() == 2) modulus.clear();
    if (!modulus.empty() && modulus.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
    return Field(build_impl(p, std::move(modulus), std::move(symbol), kTableLimitTrusted));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
int Field::degree() const noexcept { return impl_->k; }
Elem Field::order() const noexcept { return impl_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return impl_->modulus; }
const std::string& Field::symbol() const noexcept { return impl_->symbol; }
Elem Field::generator() const noexcept { return impl_->k > 1 ? impl_->p : 0; }

Elem Field::from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(impl_->p);
    return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const Impl& f = *impl_;
    if (f.k == 1) return (a + b) % f.p;
    if (!f.add_table.empty()) return f.add_table[a * f.q + b];
    return f.generic_add(a, b, false);
}

Elem Field::sub(Elem a, Elem b) const noexcept {
    const Impl& f = *impl_;
    if (f.k == 1) return (a + f.p - b) % f.p;
    return f.generic_add(a, b, true);
}

Elem Field::neg(Elem a) const noexcept { return sub(0, a); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    const Impl& f = *impl_;
    if (f.k == 1) return (a * b) % f.p;
    if (!f.mul_table.empty()) return f.mul_table[a * f.q + b];
    return f.generic_mul(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return pow(a, impl_->q - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> out(impl_->k);
    for (int i = 0; i < impl_->k; ++i) {
        out[i] = static_cast<std::uint32_t>(a % impl_->p);
        a /= impl_->p;
    }
    return out;
}

Elem Field::pack(std::span<const std::uint32_t> c) const {
    if (static_cast<int>(c.size()) > impl_->k) fail(ErrorKind::ValueOutOfField, "too many coefficients");
    Elem out = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= impl_->p) fail(ErrorKind::ValueOutOfField, "coefficient out of range");
        out = out * impl_->p + c[i];
    }
    return out;
}

bool Field::less(Elem a, Elem b) const noexcept {
    for (int i = 0; i < impl_->k; ++i) {
        const Elem da = a % impl_->p;
        const Elem db = b % impl_->p;
        if (da != db) return da < db;
        a /= impl_->p;
        b /= impl_->p;
    }
    return false;
}

bool Field::generator_is_primitive() const {
    const Impl& f = *impl_;
    std::call_once(f.primitive_once, [this, &f] {
        if (f.k == 1) {
            f.primitive = false;
            return;
        }
        const Elem w = generator();
        bool ok = true;
        for (auto r : prime_factors(f.q - 1)) {
            if (pow(w, (f.q - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        f.primitive = ok;
    });
    return f.primitive;
}

bool Field::operator==(const Field& other) const noexcept {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k && impl_->modulus == other.impl_->modulus;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << impl_->q;
    if (impl_->k > 1) {
        os << " = F_" << impl_->p << "[" << impl_->symbol << "]/(";
        bool first = true;
        for (int i = impl_->k; i >= 0; --i) {
            const auto c = impl_->modulus[i];
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i > 0) os << impl_->symbol;
            if (i > 1) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) fail(ErrorKind::ValueOutOfField, "element outside field");
}

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "elements of different fields");
    const Field& f = a.field();
    switch (op) {
        case ArithOp::Add: return {f, f.add(a.value(), b.value())};
        case ArithOp::Sub: return {f, f.sub(a.value(), b.value())};
        case ArithOp::Mul: return {f, f.mul(a.value(), b.value())};
        case ArithOp::Div: return {f, f.div(a.value(), b.value())};
    }
    return {f, 0};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Add); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Sub); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Mul); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Div); }

std::string elem_format(const Field& field, Elem a) {
    if (field.degree() == 1) return std::to_string(a);
    if (a == 0) return "0";
    const auto c = field.coeffs(a);
    std::string out;
    for (int i = field.degree() - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += field.symbol();
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace lcpqc
