#include "lcpqc/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lcpqc/error.hpp"

namespace lcpqc {

namespace {

Poly x_poly(const Field& f) { return Poly::monomial(f, 1, 1); }

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Poly random_poly_below(const Field& f, int degree_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> dist(0, f.order() - 1);
    std::vector<Elem> c(static_cast<std::size_t>(degree_bound));
    for (auto& e : c) e = dist(rng);
    return Poly(f, std::move(c));
}

// Splits g, a product of distinct irreducibles all of degree d, into factors.
void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Field& f = g.field();
    const Elem q = f.order();
    const Poly one = Poly::constant(f, 1);
    while (true) {
        const Poly a = random_poly_below(f, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(f);
        if (f.characteristic() == 2) {
            // Absolute trace to F_2: sum of a^(2^i) for i < k*d.
            Poly term = a;
            b = a;
            for (int i = 1; i < f.degree() * d; ++i) {
                term = poly_mulmod(term, term, g);
                b = b + term;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2).
            Poly frob = a;
            Poly norm = a;
            for (int i = 1; i < d; ++i) {
                frob = poly_powmod(frob, q, g);
                norm = poly_mulmod(norm, frob, g);
            }
            b = poly_powmod(norm, (q - 1) / 2, g) - one;
        }
        Poly h = poly_gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(poly_exact_div(g, h), d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    const int n = f.degree();
    if (n == 1) return true;
    const Poly g = f.monic();
    const Field& field = f.field();
    const Poly x = x_poly(field);
    std::vector<Poly> frob{x};  // frob[i] = x^(q^i) mod g
    for (int i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), field.order(), g));
    if (!(frob[n] == poly_rem(x, g))) return false;
    for (int r : prime_divisors(n)) {
        if (!poly_gcd(frob[n / r] - x, g).is_one()) return false;
    }
    return true;
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed) {
    if (f.degree() < 1) return {};
    std::mt19937_64 rng(seed);
    const Field& field = f.field();
    const Poly x = x_poly(field);
    std::vector<Poly> out;
    Poly g = f.monic();
    Poly h = poly_rem(x, g);
    int i = 0;
    while (g.degree() >= 2 * (i + 1)) {
        ++i;
        h = poly_powmod(h, field.order(), g);
        Poly d = poly_gcd(h - x, g);
        if (!d.is_one()) {
            equal_degree_split(d, i, rng, out);
            g = poly_exact_div(g, d);
            h = poly_rem(h, g);
        }
    }
    if (g.degree() > 0) out.push_back(g);
    std::sort(out.begin(), out.end(), poly_canonical_less);
    return out;
}

Factorization factorize_xm_minus_lambda(const Field& field, int m, Elem lambda, std::uint64_t seed) {
    if (m < 1) fail(ErrorKind::NonCoprimeParameters, "m must be positive");
    if (lambda == 0) fail(ErrorKind::ZeroLambda, "lambda must be nonzero");
    if (!field.contains(lambda)) fail(ErrorKind::ValueOutOfField, "lambda outside field");
    if (std::gcd(static_cast<std::uint32_t>(m), field.characteristic()) != 1) {
        fail(ErrorKind::NonCoprimeParameters, "gcd(m, q) != 1 for m = " + std::to_string(m));
    }
    Factorization out{Poly::x_m_minus(field, m, lambda), {}, m, lambda};
    out.factors = factor_squarefree(out.modulus_poly, seed);
    return out;
}

namespace {

using Mat = std::vector<std::vector<std::uint32_t>>;

std::uint32_t inv_mod(std::uint64_t a, std::uint32_t p) {
    std::uint64_t result = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Inverts a square matrix over F_p; returns false when singular.
bool invert_mod(Mat a, std::uint32_t p, Mat& inv) {
    const std::size_t n = a.size();
    inv.assign(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const std::uint64_t s = inv_mod(a[col][col], p);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = static_cast<std::uint32_t>(a[col][j] * s % p);
            inv[col][j] = static_cast<std::uint32_t>(inv[col][j] * s % p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const std::uint64_t c = p - a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = static_cast<std::uint32_t>((a[r][j] + c * a[col][j]) % p);
                inv[r][j] = static_cast<std::uint32_t>((inv[r][j] + c * inv[col][j]) % p);
            }
        }
    }
    return true;
}

// Coordinates of a residue (deg < d) in the F_p-basis {w^a x^b}, index a + k*b.
std::vector<std::uint32_t> flat_coords(const Poly& r, int d) {
    const Field& f = r.field();
    const int k = f.degree();
    std::vector<std::uint32_t> v(static_cast<std::size_t>(k * d), 0);
    for (int b = 0; b <= r.degree(); ++b) {
        const auto c = f.coeffs(r.coeff(b));
        for (int a = 0; a < k; ++a) v[a + k * b] = c[a];
    }
    return v;
}

Poly from_flat_coords(const Field& f, std::span<const std::uint32_t> v, int d) {
    const int k = f.degree();
    std::vector<Elem> c(static_cast<std::size_t>(d));
    for (int b = 0; b < d; ++b) c[b] = f.pack(v.subspan(static_cast<std::size_t>(k * b), k));
    return Poly(f, std::move(c));
}

}  // namespace

QuotientField QuotientField::make(const Poly& f) {
    if (!is_irreducible(f)) fail(ErrorKind::ReducibleModulus, "constituent modulus must be irreducible");
    const Poly fm = f.monic();
    const Field& base = f.field();
    const std::uint32_t p = base.characteristic();
    const int d = fm.degree();
    if (base.degree() == 1) {
        std::vector<std::uint32_t> mod(fm.coeffs().begin(), fm.coeffs().end());
        return QuotientField(fm, Field::from_trusted_modulus(p, std::move(mod), "z"), {});
    }

    // Tower F_p < F_q < F_q[x]/(f): search, in increasing packed order, for an
    // element theta whose powers 1..theta^(K-1) span the K-dimensional space.
    const int K = base.degree() * d;
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(K), 0);
    auto next = [&digits, p] {
        for (auto& c : digits) {
            if (++c < p) return true;
            c = 0;
        }
        return false;
    };
    while (next()) {
        const Poly theta = from_flat_coords(base, digits, d);
        Mat cols;  // cols[j] = coordinates of theta^j
        Poly power = Poly::constant(base, 1);
        for (int j = 0; j <= K; ++j) {
            cols.push_back(flat_coords(power, d));
            power = poly_mulmod(power, theta, fm);
        }
        Mat basis(static_cast<std::size_t>(K), std::vector<std::uint32_t>(static_cast<std::size_t>(K)));
        for (int r = 0; r < K; ++r) {
            for (int c = 0; c < K; ++c) basis[r][c] = cols[c][r];
        }
        Mat to_flat;
        if (!invert_mod(basis, p, to_flat)) continue;
        // theta^K = sum c_j theta^j gives the minimal polynomial y^K - sum c_j y^j.
        std::vector<std::uint32_t> mod(static_cast<std::size_t>(K) + 1, 0);
        mod[K] = 1;
        for (int r = 0; r < K; ++r) {
            std::uint64_t acc = 0;
            for (int c = 0; c < K; ++c) acc += std::uint64_t{to_flat[r][c]} * cols[K][c];
            mod[r] = static_cast<std::uint32_t>((p - acc % p) % p);
        }
        return QuotientField(fm, Field::from_trusted_modulus(p, std::move(mod), "z"), std::move(to_flat));
    }
    fail(ErrorKind::ReducibleModulus, "no generating element found");
}

Elem QuotientField::reduce(const Poly& a) const {
    if (!(a.field() == modulus_.field())) fail(ErrorKind::FieldMismatch, "residue of polynomial over another field");
    const Poly r = poly_rem(a, modulus_);
    const std::uint32_t p = base().characteristic();
    if (to_flat_.empty()) {
        std::vector<std::uint32_t> c(r.coeffs().begin(), r.coeffs().end());
        return field_.pack(c);
    }
    const auto v = flat_coords(r, modulus_.degree());
    std::vector<std::uint32_t> t(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += std::uint64_t{to_flat_[i][j]} * v[j];
        t[i] = static_cast<std::uint32_t>(acc % p);
    }
    return field_.pack(t);
}

}  // namespace lcpqc
