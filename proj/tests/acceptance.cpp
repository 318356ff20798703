// Acceptance run: one PASS/FAIL line per criterion. Sample sizes and limits
// are fixed below; the process exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "lcpqc/distance.hpp"
#include "lcpqc/lcp.hpp"
#include "lcpqc/oracle.hpp"
#include "lcpqc/repro.hpp"
#include "support.hpp"

using namespace lcpqc;

namespace {

constexpr double kReproSeconds = 60.0;
constexpr int kPairs = 5000;
constexpr int kOneGenPairs = 2000;
constexpr int kDimSpecs = 2000;
constexpr std::uint64_t kCrossCheckLimit = 1'000'000;  // q^k
constexpr int kDcPairs = 1000;
constexpr int kMaximalPairs = 1000;
constexpr std::uint64_t kSeed = 20261014;

int failures = 0;

void report(bool ok, const std::string& id, const std::string& text) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ' ' << text << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Ambient {
    Field field;
    int m;
    Elem lambda;
};

const std::array<std::uint32_t, 4> kOrders = {2, 3, 4, 5};

Ambient random_ambient(std::mt19937_64& rng) {
    const Field f = testsupport::small_field(kOrders[rng() % kOrders.size()]);
    const int m = testsupport::random_m(f, 3, 10, rng);
    return {f, m, testsupport::random_lambda(f, rng)};
}

bool oracle(const QtCodeSpec& c, const QtCodeSpec& d) {
    return lcp_oracle(generator_matrix(normalize_one_generator(c)), generator_matrix(normalize_one_generator(d)))
        .verdict;
}

std::uint64_t power(std::uint64_t q, int k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

void criterion_reproduce() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = std::string(LCPQC_CLI_PATH) + " reproduce --all 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    if (p) {
        std::array<char, 4096> buf{};
        std::size_t got = 0;
        while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    }
    const int status = p ? pclose(p) : -1;
    const double secs = seconds_since(t0);
    int passed = 0;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) passed += line.rfind("PASS ", 0) == 0;
    const int total = static_cast<int>(repro_cases().size());
    const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0 && passed == total && secs < kReproSeconds;
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << "reproduce --all: " << passed << "/" << total << " fixtures pass in " << secs << " s (limit "
      << kReproSeconds << " s)";
    report(ok, "C1", s.str());
}

std::vector<std::pair<QtCodeSpec, QtCodeSpec>> standard_population() {
    std::vector<std::pair<QtCodeSpec, QtCodeSpec>> pop;
    pop.reserve(kPairs);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < kPairs; ++i) {
        const Ambient a = random_ambient(rng);
        QtCodeSpec c = testsupport::random_standard(a.field, a.m, a.lambda, rng);
        QtCodeSpec d = testsupport::random_partner(c, rng);
        pop.emplace_back(std::move(c), std::move(d));
    }
    return pop;
}

void criterion_three_engines(const std::vector<std::pair<QtCodeSpec, QtCodeSpec>>& pop) {
    int agree = 0, lcps = 0, twisted = 0;
    for (const auto& [c, d] : pop) {
        const bool two = lcp_two_generator(c, d).verdict;
        const bool con = lcp_via_constituents(c, d).verdict;
        const bool orc = oracle(c, d);
        agree += two == con && con == orc;
        lcps += orc;
        twisted += c.lambda() != 1;
    }
    const int n = static_cast<int>(pop.size());
    std::ostringstream s;
    s << "two-gen = constituents = oracle on " << agree << "/" << n << " StandardForm pairs (" << lcps
      << " LCP, " << twisted << " with lambda != 1)";
    report(n >= kPairs && agree == n && lcps > 0 && twisted > 0 && twisted < n, "C2", s.str());
}

void criterion_one_gen() {
    std::mt19937_64 rng(kSeed + 1);
    int agree = 0, preserved = 0, lcps = 0;
    for (int i = 0; i < kOneGenPairs; ++i) {
        const Ambient a = random_ambient(rng);
        const QtCodeSpec c = testsupport::random_one_gen(a.field, a.m, a.lambda, rng);
        const QtCodeSpec d = testsupport::random_one_gen(a.field, a.m, a.lambda, rng);
        const QtCodeSpec nc = normalize_one_generator(c);
        const QtCodeSpec nd = normalize_one_generator(d);
        const bool one = lcp_one_generator(c, d).verdict;
        agree += one == lcp_two_generator(nc, nd).verdict;
        lcps += one;
        preserved += same_row_space(one_generator_matrix(c), generator_matrix(nc)) &&
                     same_row_space(one_generator_matrix(d), generator_matrix(nd));
    }
    std::ostringstream s;
    s << "one-gen = two-gen(normalized) on " << agree << "/" << kOneGenPairs << " OneGen pairs (" << lcps
      << " LCP); row space preserved on " << preserved << "/" << kOneGenPairs;
    report(agree == kOneGenPairs && preserved == kOneGenPairs && lcps > 0, "C3", s.str());
}

void criterion_dimension() {
    std::mt19937_64 rng(kSeed + 2);
    int ok = 0;
    for (int i = 0; i < kDimSpecs; ++i) {
        const Ambient a = random_ambient(rng);
        const QtCodeSpec c = testsupport::random_standard(a.field, a.m, a.lambda, rng);
        const auto& sf = c.standard_form();
        ok += static_cast<int>(rank(generator_matrix(c))) == 2 * a.m - sf.g11.degree() - sf.g22.degree();
    }
    std::ostringstream s;
    s << "rank G = 2m - deg g11 - deg g22 on " << ok << "/" << kDimSpecs << " specs";
    report(ok == kDimSpecs, "C4", s.str());
}

void criterion_distance(const std::vector<std::pair<QtCodeSpec, QtCodeSpec>>& pop) {
    const auto t0 = std::chrono::steady_clock::now();
    int eligible = 0, agree = 0;
    DistanceOptions enumerate;
    enumerate.method = DistanceMethod::Enumeration;
    DistanceOptions columns;
    columns.method = DistanceMethod::ColumnSearch;
    for (const auto& pr : pop) {
        for (const QtCodeSpec* s : {&pr.first, &pr.second}) {
            const int k = dimension(*s);
            if (k == 0 || power(s->field().order(), k, kCrossCheckLimit) > kCrossCheckLimit) continue;
            ++eligible;
            const GenMatrix g = generator_matrix(*s);
            agree += min_distance(g, enumerate).distance == min_distance(g, columns).distance;
        }
    }
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << "enumeration = column search on " << agree << "/" << eligible << " codes with q^k <= " << kCrossCheckLimit
      << " from the C2 population (" << seconds_since(t0) << " s)";
    report(eligible > 0 && agree == eligible, "C5", s.str());
}

void criterion_corollaries() {
    std::mt19937_64 rng(kSeed + 3);
    int dc_ok = 0;
    for (int i = 0; i < kDcPairs; ++i) {
        const Ambient a = random_ambient(rng);
        const Poly x = testsupport::random_poly(a.field, a.m, rng);
        Poly y = testsupport::random_poly(a.field, a.m, rng);
        if (rng() % 4 == 0) y = x;
        const Poly one = Poly::constant(a.field, 1);
        const QtCodeSpec c(a.field, a.m, a.lambda, OneGen{one, x});
        const QtCodeSpec d(a.field, a.m, a.lambda, OneGen{one, y});
        dc_ok += lcp_dc(x, y, a.m, a.lambda).verdict == oracle(c, d);
    }
    int held = 0, max_ok = 0, tries = 0;
    while (held < kMaximalPairs && tries < 50 * kMaximalPairs) {
        ++tries;
        const Ambient a = random_ambient(rng);
        const QtCodeSpec c = testsupport::random_one_gen(a.field, a.m, a.lambda, rng);
        const QtCodeSpec d = testsupport::random_one_gen(a.field, a.m, a.lambda, rng);
        const auto cor = lcp_maximal_corollary(c, d);
        if (!cor) continue;
        ++held;
        const LcpReport r = lcp_one_generator(c, d);
        max_ok += *cor == (r.condition("A") && r.condition("B") && r.condition("C"));
    }
    std::ostringstream s;
    s << "DC corollary = oracle on " << dc_ok << "/" << kDcPairs << " pairs; maximal corollary = (A)(B)(C) on "
      << max_ok << "/" << held << " pairs meeting its hypotheses";
    report(dc_ok == kDcPairs && held >= kMaximalPairs && max_ok == held, "C6", s.str());
}

void criterion_factorization() {
    int cases = 0, ok = 0, factors = 0;
    for (const std::uint32_t q : kOrders) {
        const Field f = testsupport::small_field(q);
        for (int m = 3; m <= 10; ++m) {
            if (m % static_cast<int>(f.characteristic()) == 0) continue;
            for (Elem lambda = 1; lambda < f.order(); ++lambda) {
                ++cases;
                const auto fz = factorize_xm_minus_lambda(f, m, lambda);
                Poly prod = Poly::constant(f, 1);
                bool irreducible = true;
                for (const auto& g : fz.factors) {
                    prod = prod * g;
                    irreducible = irreducible && testsupport::irreducible_by_trial_division(g);
                    ++factors;
                }
                ok += irreducible && prod == Poly::x_m_minus(f, m, lambda);
            }
        }
    }
    std::ostringstream s;
    s << "factor products rebuild x^m - lambda and pass trial division on " << ok << "/" << cases
      << " (q, m, lambda) triples, " << factors << " factors";
    report(ok == cases, "C7", s.str());
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_reproduce();
    const auto pop = standard_population();
    criterion_three_engines(pop);
    criterion_one_gen();
    criterion_dimension();
    criterion_distance(pop);
    criterion_corollaries();
    criterion_factorization();
    std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << " ("
              << seconds_since(t0) << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
