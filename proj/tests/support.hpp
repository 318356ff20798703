// Shared helpers for the test suites: seeded generators of random codes and
// small oracles that do not go through the library code they check.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lcpqc/factor.hpp"
#include "lcpqc/field.hpp"
#include "lcpqc/lcp.hpp"
#include "lcpqc/poly.hpp"
#include "lcpqc/qtcode.hpp"

namespace testsupport {

using namespace lcpqc;

inline Field small_field(std::uint32_t q) {
    switch (q) {
        case 4: return Field::make(2, 2);
        case 8: return Field::make(2, 3);
        case 9: return Field::make(3, 2, std::vector<std::uint32_t>{2, 2, 1});
        default: return Field::make(q);
    }
}

inline Elem random_elem(const Field& f, std::mt19937_64& rng) {
    return std::uniform_int_distribution<Elem>(0, f.order() - 1)(rng);
}

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
    return std::uniform_int_distribution<Elem>(1, f.order() - 1)(rng);
}

/// Uniform polynomial of degree below `bound` (zero when bound <= 0).
inline Poly random_poly(const Field& f, int bound, std::mt19937_64& rng) {
    std::vector<Elem> c(static_cast<std::size_t>(std::max(bound, 0)));
    for (auto& x : c) x = random_elem(f, rng);
    return Poly(f, std::move(c));
}

/// m in [lo, hi] with gcd(m, p) = 1.
inline int random_m(const Field& f, int lo, int hi, std::mt19937_64& rng) {
    while (true) {
        const int m = std::uniform_int_distribution<int>(lo, hi)(rng);
        if (std::gcd(static_cast<std::uint32_t>(m), f.characteristic()) == 1) return m;
    }
}

inline Elem random_lambda(const Field& f, std::mt19937_64& rng) {
    return rng() % 2 ? Elem{1} : random_nonzero(f, rng);
}

inline Poly product_of(const std::vector<Poly>& factors, std::uint64_t mask, const Field& f) {
    Poly p = Poly::constant(f, 1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (mask >> i & 1) p = p * factors[i];
    }
    return p;
}

inline const std::vector<Poly>& factors_of(const Field& f, int m, Elem lambda) {
    return constituent_fields(f, m, lambda).factorization.factors;
}

/// Standard form from divisor masks; g12 is a random multiple of gcd(g11, g22)
/// of degree below deg g22.
inline QtCodeSpec spec_from_masks(const Field& f, int m, Elem lambda, std::uint64_t m11, std::uint64_t m22,
                                  std::mt19937_64& rng) {
    const auto& fs = factors_of(f, m, lambda);
    const Poly g11 = product_of(fs, m11, f);
    const Poly g22 = product_of(fs, m22, f);
    const Poly g = product_of(fs, m11 & m22, f);
    const Poly g12 = g * random_poly(f, g22.degree() - g.degree(), rng);
    return QtCodeSpec(f, m, lambda, StandardForm{g11, g12, g22});
}

inline QtCodeSpec random_standard(const Field& f, int m, Elem lambda, std::mt19937_64& rng) {
    const std::size_t t = factors_of(f, m, lambda).size();
    const std::uint64_t full = (std::uint64_t{1} << t) - 1;
    return spec_from_masks(f, m, lambda, rng() & full, rng() & full, rng);
}

/// A partner whose constituent ranks complement those of `c`, so that the
/// pair has a fair chance of being an LCP. With probability 1/5 the partner
/// is unrelated instead.
inline QtCodeSpec random_partner(const QtCodeSpec& c, std::mt19937_64& rng) {
    const Field& f = c.field();
    const auto& fs = factors_of(f, c.m(), c.lambda());
    if (rng() % 5 == 0) return random_standard(f, c.m(), c.lambda(), rng);
    const auto& sf = c.standard_form();
    std::uint64_t m11 = 0;
    std::uint64_t m22 = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const bool in11 = poly_divides(fs[i], sf.g11);
        const bool in22 = poly_divides(fs[i], sf.g22);
        const int local_rank = !in11 + !in22;
        if (local_rank == 2) {
            m11 |= std::uint64_t{1} << i;
            m22 |= std::uint64_t{1} << i;
        } else if (local_rank == 1) {
            (rng() % 2 ? m11 : m22) |= std::uint64_t{1} << i;
        }
    }
    return spec_from_masks(f, c.m(), c.lambda(), m11, m22, rng);
}

inline QtCodeSpec random_one_gen(const Field& f, int m, Elem lambda, std::mt19937_64& rng) {
    const auto& fs = factors_of(f, m, lambda);
    const std::uint64_t full = (std::uint64_t{1} << fs.size()) - 1;
    const Poly g11 = product_of(fs, rng() & full, f);
    Poly g12 = random_poly(f, m, rng);
    // Bias towards shared factors so that conditions A and B fail sometimes.
    if (rng() % 3 == 0) g12 = poly_rem(g12 * product_of(fs, rng() & full, f), Poly::x_m_minus(f, m, lambda));
    return QtCodeSpec(f, m, lambda, OneGen{g11, g12});
}

// ---------------------------------------------------------------------------
// Oracles on raw coefficient vectors, built only on Field arithmetic.

using Coeffs = std::vector<Elem>;

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b.
inline Coeffs rem_monic(const Field& f, Coeffs a, const Coeffs& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Elem c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
        trim(a);
    }
    return a;
}

/// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(const Poly& p) {
    const Field& f = p.field();
    const int n = p.degree();
    if (n < 1) return false;
    const Coeffs a = p.monic().coeffs();
    for (int d = 1; 2 * d <= n; ++d) {
        Coeffs g(static_cast<std::size_t>(d) + 1, 0);
        g[d] = 1;
        while (true) {
            if (rem_monic(f, a, g).empty()) return false;
            int i = 0;
            while (i < d && ++g[i] == f.order()) {
                g[i] = 0;
                ++i;
            }
            if (i == d) break;
        }
    }
    return true;
}

/// Horner evaluation of raw coefficients.
inline Elem horner(const Field& f, const Coeffs& c, Elem x) {
    Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
}

}  // namespace testsupport
