#pragma once

#include <cstdint>
#include <string_view>

#include "lcpqc/error.hpp"
#include "lcpqc/matrix.hpp"
#include "lcpqc/qtcode.hpp"

namespace lcpqc {

enum class DistanceMethod { Auto, Enumeration, ColumnSearch };

std::string_view to_string(DistanceMethod m) noexcept;

struct DistanceOptions {
    DistanceMethod method = DistanceMethod::Auto;
    /// Enumeration is chosen when q^k is at most this.
    std::uint64_t enumeration_limit = 100'000'000;
    /// Codewords visited (enumeration) or column-subset nodes expanded
    /// (column search) before giving up.
    std::uint64_t budget = 1'000'000'000;
    /// Run both strategies and throw EngineDisagreement if they differ.
    bool cross_check = false;
    /// 0 uses LCPQC_THREADS, then the OpenMP default.
    int threads = 0;
};

struct DistanceResult {
    int distance = 0;
    DistanceMethod method = DistanceMethod::Enumeration;
    std::uint64_t work_count = 0;
};

/// Thrown when the work budget runs out. lower() is the smallest weight not
/// yet ruled out, upper() the lightest codeword seen (n + 1 if none).
class BudgetExceededError : public Error {
public:
    BudgetExceededError(int lower, int upper, const std::string& what)
        : Error(ErrorKind::BudgetExceeded, what), lower_(lower), upper_(upper) {}
    int lower() const noexcept { return lower_; }
    int upper() const noexcept { return upper_; }

private:
    int lower_;
    int upper_;
};

/// Exact minimum Hamming weight of the nonzero codewords of the row space of
/// `g`. Throws ZeroCode when the row space is {0}.
DistanceResult min_distance(const GenMatrix& g, const DistanceOptions& opts = {});

struct DlcpResult {
    DistanceResult c;       // d(C)
    DistanceResult d_dual;  // d(D^perp)
    int dlcp = 0;
};

/// d(C), d(D^perp) and their minimum. Throws MismatchedAmbient when the specs
/// live over different (q, m, lambda).
DlcpResult d_lcp(const QtCodeSpec& c, const QtCodeSpec& d, const DistanceOptions& opts = {});

/// Worker count after applying LCPQC_THREADS (0 or unset = OpenMP default).
int resolve_threads(int requested);

namespace kernels {

struct Outcome {
    bool complete = false;
    int distance = 0;  // exact value when complete, else best upper bound
    int lower = 1;     // every weight below this has been ruled out
    std::uint64_t work = 0;
};

/// Parallel enumeration over projective messages of a full-rank basis.
Outcome enumerate(const GenMatrix& basis, std::uint64_t budget, int threads);
/// Parallel search for the smallest linearly dependent set of columns of a
/// parity-check matrix with `n` columns.
Outcome column_search(const GenMatrix& h, std::uint64_t budget, int threads);

}  // namespace kernels

namespace reference {

/// Serial brute force over all q^k messages.
int enumerate(const GenMatrix& g);
/// Serial search over column subsets of increasing size, one rank per subset.
int column_search(const GenMatrix& h);

}  // namespace reference

}  // namespace lcpqc
