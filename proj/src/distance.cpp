#include "lcpqc/distance.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace lcpqc {

std::string_view to_string(DistanceMethod m) noexcept {
    switch (m) {
        case DistanceMethod::Auto: return "auto";
        case DistanceMethod::Enumeration: return "codeword-enumeration";
        case DistanceMethod::ColumnSearch: return "parity-column-search";
    }
    return "unknown";
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LCPQC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1, omp_get_max_threads());
}

namespace {

std::uint64_t power_capped(std::uint64_t q, std::size_t k, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

DistanceResult run(DistanceMethod method, const GenMatrix& basis, const DistanceOptions& opts, int threads) {
    kernels::Outcome o = method == DistanceMethod::Enumeration
                             ? kernels::enumerate(basis, opts.budget, threads)
                             : kernels::column_search(dual_matrix(basis), opts.budget, threads);
    if (!o.complete) {
        throw BudgetExceededError(o.lower, o.distance,
                                  std::string(to_string(method)) + " stopped after " + std::to_string(o.work) +
                                      " work units; " + std::to_string(o.lower) + " <= d <= " +
                                      std::to_string(o.distance));
    }
    return {o.distance, method, o.work};
}

}  // namespace

DistanceResult min_distance(const GenMatrix& g, const DistanceOptions& opts) {
    const GenMatrix basis = row_basis(g);
    if (basis.rows() == 0) fail(ErrorKind::ZeroCode, "minimum distance of the zero code is undefined");
    const int threads = resolve_threads(opts.threads);
    DistanceMethod method = opts.method;
    if (method == DistanceMethod::Auto) {
        const std::uint64_t size = power_capped(basis.field().order(), basis.rows(), opts.enumeration_limit);
        method = size <= opts.enumeration_limit ? DistanceMethod::Enumeration : DistanceMethod::ColumnSearch;
    }
    DistanceResult res = run(method, basis, opts, threads);
    if (opts.cross_check) {
        const DistanceMethod other =
            method == DistanceMethod::Enumeration ? DistanceMethod::ColumnSearch : DistanceMethod::Enumeration;
        const DistanceResult alt = run(other, basis, opts, threads);
        if (alt.distance != res.distance) {
            fail(ErrorKind::EngineDisagreement, "enumeration and column search disagree: " +
                                                    std::to_string(res.distance) + " vs " +
                                                    std::to_string(alt.distance));
        }
    }
    return res;
}

DlcpResult d_lcp(const QtCodeSpec& c, const QtCodeSpec& d, const DistanceOptions& opts) {
    if (!c.same_ambient(d)) fail(ErrorKind::MismatchedAmbient, "codes differ in q, m or lambda");
    DlcpResult out;
    out.c = min_distance(generator_matrix(c), opts);
    out.d_dual = min_distance(dual_matrix(row_basis(generator_matrix(d))), opts);
    out.dlcp = std::min(out.c.distance, out.d_dual.distance);
    return out;
}

}  // namespace lcpqc
