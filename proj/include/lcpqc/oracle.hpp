#pragma once

#include <cstddef>

#include "lcpqc/matrix.hpp"

namespace lcpqc {

struct OracleVerdict {
    bool verdict = false;
    std::size_t dim_c = 0;
    std::size_t dim_d = 0;
    std::size_t dim_sum_space = 0;  // rank of [GC; GD]
    std::size_t ambient = 0;
};

/// LCP decision by elimination alone: dim C + dim D = n and rank [GC; GD] = n.
/// Rows may be redundant. Throws ShapeMismatch.
OracleVerdict lcp_oracle(const GenMatrix& gc, const GenMatrix& gd);

/// rank GC + rank GD - rank [GC; GD].
std::size_t intersection_dim(const GenMatrix& gc, const GenMatrix& gd);

}  // namespace lcpqc
