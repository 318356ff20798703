#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcpqc/factor.hpp"
#include "lcpqc/matrix.hpp"
#include "lcpqc/poly.hpp"
#include "lcpqc/qtcode.hpp"

namespace lcpqc {

enum class Engine { TwoGen, OneGen, Dc, Constituents, Oracle };

/// Stable names: two-gen-characterization, one-gen-characterization,
/// dc-corollary, constituents, oracle.
std::string_view to_string(Engine e) noexcept;

struct Condition {
    std::string name;
    bool holds = false;
};

struct LcpReport {
    bool verdict = false;
    Engine engine = Engine::TwoGen;
    std::vector<Condition> conditions;
    /// First irreducible factor of x^m - lambda, in canonical order, at which
    /// the pair fails to be complementary.
    std::optional<Poly> witness;
    int dim_c = 0;
    int dim_d = 0;
    int ambient = 0;
    Elem lambda = 1;
    /// Intermediate polynomials (g, f, g22', f22' for the two-generator test).
    std::vector<std::pair<std::string, Poly>> details;

    /// Throws std::out_of_range for an unknown name.
    bool condition(std::string_view name) const;
};

/// Conditions I-IV on two StandardForm specs over the same (q, m, lambda):
///   I   gcd(f11, g11) = 1
///   II  g = (x^m - lambda) / lcm(f11, f22),  g = gcd(g11, g22)
///   III f = (x^m - lambda) / lcm(g11, g22),  f = gcd(f11, f22)
///   IV  gcd(g22/g, f22/f, g11 f12 - g12 f11) = 1
/// OneGen inputs are normalized first. Throws MismatchedAmbient or
/// InvalidStandardForm.
LcpReport lcp_two_generator(const QtCodeSpec& c, const QtCodeSpec& d);

/// Conditions A-C on two OneGen specs:
///   A gcd(g11, g12) = 1,  B gcd(f11, f12) = 1,
///   C gcd(x^m - lambda, g11 f12 - g12 f11) = 1.
/// Throws NotDivisor when g11 or f11 does not divide x^m - lambda.
LcpReport lcp_one_generator(const QtCodeSpec& c, const QtCodeSpec& d);

/// Double circulant pair <(1, a)>, <(1, b)>: LCP iff gcd(a - b, x^m - lambda) = 1.
/// Throws DegreeTooLarge when deg a or deg b is at least m.
LcpReport lcp_dc(const Poly& a, const Poly& b, int m, Elem lambda);

/// For two maximal one-generator codes (gcd(g11, g12) = gcd(f11, f12) = 1)
/// the verdict is gcd(x^m - lambda, g11 f12 - g12 f11) = 1. Returns nullopt
/// when the hypotheses fail.
std::optional<bool> lcp_maximal_corollary(const QtCodeSpec& c, const QtCodeSpec& d);

/// Cached factorization of x^m - lambda with the quotient field of every factor.
struct ConstituentFields {
    Factorization factorization;
    std::vector<QuotientField> fields;
};
const ConstituentFields& constituent_fields(const Field& field, int m, Elem lambda);

struct Constituent {
    std::size_t index = 0;  // 1-based position in the canonical factor order
    Poly factor;
    Field field;   // F_q[x]/(factor), flattened
    GenMatrix g;   // [[g11, g12], [0, g22]] reduced modulo the factor
};

/// Constituent codes of a spec (OneGen input is normalized first).
std::vector<Constituent> constituents(const QtCodeSpec& spec);

struct ConstituentPair {
    std::size_t index = 0;
    Poly factor;
    Field field;
    GenMatrix g;
    GenMatrix h;
    bool lcp = false;
};

std::vector<ConstituentPair> constituent_pairs(const QtCodeSpec& c, const QtCodeSpec& d);

/// LCP iff every constituent pair satisfies rank G_i + rank H_i = 2 and
/// rank [G_i; H_i] = 2.
LcpReport lcp_via_constituents(const QtCodeSpec& c, const QtCodeSpec& d);

}  // namespace lcpqc
