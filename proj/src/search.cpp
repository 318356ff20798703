#include "lcpqc/search.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

#include "lcpqc/error.hpp"

namespace lcpqc {

namespace {

using u128 = unsigned __int128;

std::vector<Poly> monic_divisors(const Field& field, int m, Elem lambda) {
    const auto& factors = constituent_fields(field, m, lambda).factorization.factors;
    std::vector<Poly> out;
    const std::size_t t = factors.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        Poly d = Poly::constant(field, 1);
        for (std::size_t i = 0; i < t; ++i) {
            if (mask >> i & 1) d = d * factors[i];
        }
        out.push_back(d);
    }
    std::sort(out.begin(), out.end(), poly_canonical_less);
    return out;
}

struct Space {
    const Field* field;
    int m;
    Elem lambda;
    std::vector<Poly> divisors;
    std::uint64_t per_divisor;  // q^m
    u128 size;                  // codes in the space

    QtCodeSpec code(u128 idx) const {
        const auto div = static_cast<std::size_t>(idx / per_divisor);
        std::uint64_t rest = static_cast<std::uint64_t>(idx % per_divisor);
        std::vector<Elem> c(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) {
            c[i] = rest % field->order();
            rest /= field->order();
        }
        return QtCodeSpec(*field, m, lambda, OneGen{divisors[div], Poly(*field, std::move(c))});
    }
};

bool hit_less(const SearchHit& a, const SearchHit& b) {
    if (a.dlcp != b.dlcp) return a.dlcp > b.dlcp;
    if (a.generators_c != b.generators_c) return a.generators_c < b.generators_c;
    return a.generators_d < b.generators_d;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

SearchSummary run_search(const SearchConfig& cfg) {
    const Field& field = cfg.field;
    Space space{&field, cfg.m, cfg.lambda, monic_divisors(field, cfg.m, cfg.lambda), 1, 0};
    for (int i = 0; i < cfg.m; ++i) {
        if (space.per_divisor > (std::uint64_t{1} << 40) / field.order()) {
            fail(ErrorKind::FieldTooLarge, "search space too large for q^m");
        }
        space.per_divisor *= field.order();
    }
    space.size = static_cast<u128>(space.divisors.size()) * space.per_divisor;
    const u128 pairs = space.size * space.size;

    SearchSummary s;
    s.space = pairs > static_cast<u128>(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(pairs);
    std::uint64_t total = cfg.budget;
    if (cfg.mode == SearchMode::Exhaustive && static_cast<u128>(total) >= pairs) {
        total = static_cast<std::uint64_t>(pairs);
    } else {
        s.budget_exhausted = cfg.mode == SearchMode::Exhaustive;
    }
    s.evaluated = total;

    const int threads = resolve_threads(cfg.threads);
    DistanceOptions dopts;
    dopts.threads = 1;
    std::vector<std::vector<SearchHit>> per_thread(static_cast<std::size_t>(threads));
    std::uint64_t lcp_pairs = 0;
    const int n = 2 * cfg.m;

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) reduction(+ : lcp_pairs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
        u128 ic = 0;
        u128 id = 0;
        if (cfg.mode == SearchMode::Exhaustive) {
            ic = static_cast<u128>(i) / space.size;
            id = static_cast<u128>(i) % space.size;
        } else {
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                              static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
            std::mt19937_64 rng(seq);
            auto draw = [&] {
                const u128 v = (static_cast<u128>(rng()) << 64) | rng();
                return v % space.size;
            };
            ic = draw();
            id = draw();
        }
        const QtCodeSpec c = space.code(ic);
        const QtCodeSpec d = space.code(id);
        const LcpReport rep = lcp_one_generator(c, d);
        if (!rep.verdict) continue;
        ++lcp_pairs;
        if (cfg.target_k && rep.dim_c != *cfg.target_k) continue;
        if (rep.dim_c == 0 || rep.dim_d == n) continue;
        const int dlcp = d_lcp(c, d, dopts).dlcp;
        if (dlcp < cfg.min_dlcp) continue;
        SearchHit h;
        h.generators_c = format_gens(c);
        h.generators_d = format_gens(d);
        h.n = n;
        h.k = rep.dim_c;
        h.dlcp = dlcp;
        if (cfg.bklc) h.dbklc = cfg.bklc->lookup(field.order(), n, h.k);
        h.optimal = h.dbklc && *h.dbklc == dlcp;
        per_thread[static_cast<std::size_t>(omp_get_thread_num())].push_back(std::move(h));
    }
    s.lcp_pairs = lcp_pairs;
    for (auto& v : per_thread) {
        for (auto& h : v) s.hits.push_back(std::move(h));
    }
    std::sort(s.hits.begin(), s.hits.end(), hit_less);
    s.hits.erase(std::unique(s.hits.begin(), s.hits.end(),
                             [](const SearchHit& a, const SearchHit& b) {
                                 return a.generators_c == b.generators_c && a.generators_d == b.generators_d;
                             }),
                 s.hits.end());
    return s;
}

void write_search_csv(std::ostream& out, const SearchConfig& cfg, const SearchSummary& s) {
    out << "generators_c,generators_d,q,m,lambda,n,k,d_lcp,d_bklc,optimal\n";
    const std::string lambda = csv_quote(elem_format(cfg.field, cfg.lambda));
    for (const auto& h : s.hits) {
        out << csv_quote(h.generators_c) << ',' << csv_quote(h.generators_d) << ',' << cfg.field.order() << ','
            << cfg.m << ',' << lambda << ',' << h.n << ',' << h.k << ',' << h.dlcp << ',' << format_bklc(h.dbklc)
            << ',' << (h.optimal ? "true" : "false") << '\n';
    }
}

std::string search_summary_line(const SearchSummary& s) {
    std::string line = "search: evaluated " + std::to_string(s.evaluated) + " of " + std::to_string(s.space) +
                       " candidate pairs; " + std::to_string(s.lcp_pairs) + " LCP pairs; " +
                       std::to_string(s.hits.size()) + " hits";
    if (s.budget_exhausted) line += "; BudgetExceeded: partial results";
    return line;
}

}  // namespace lcpqc
