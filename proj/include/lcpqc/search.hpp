#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lcpqc/report.hpp"

namespace lcpqc {

enum class SearchMode { Exhaustive, Random };

/// Candidates are pairs of one-generator codes <(g11, g12)>, <(f11, f12)>
/// with g11, f11 monic divisors of x^m - lambda and deg g12, deg f12 < m.
struct SearchConfig {
    Field field;
    int m = 0;
    Elem lambda = 1;
    std::optional<int> target_k;  // required dim C; dim D is then 2m - k
    int min_dlcp = 1;
    std::uint64_t budget = 10'000;  // candidates evaluated
    std::uint64_t seed = 1;
    SearchMode mode = SearchMode::Random;
    int threads = 0;
    const BklcTable* bklc = nullptr;
};

struct SearchHit {
    std::string generators_c;
    std::string generators_d;
    int n = 0;
    int k = 0;
    int dlcp = 0;
    std::optional<int> dbklc;
    bool optimal = false;
};

struct SearchSummary {
    std::vector<SearchHit> hits;  // d_LCP descending, then generator text
    std::uint64_t evaluated = 0;
    std::uint64_t lcp_pairs = 0;
    std::uint64_t space = 0;      // size of the candidate space (saturating)
    bool budget_exhausted = false;  // stopped before covering the space
};

SearchSummary run_search(const SearchConfig& cfg);

void write_search_csv(std::ostream& out, const SearchConfig& cfg, const SearchSummary& s);
std::string search_summary_line(const SearchSummary& s);

}  // namespace lcpqc
