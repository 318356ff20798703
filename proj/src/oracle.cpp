#include "lcpqc/oracle.hpp"

namespace lcpqc {

OracleVerdict lcp_oracle(const GenMatrix& gc, const GenMatrix& gd) {
    OracleVerdict v;
    v.dim_sum_space = rank(stack(gc, gd));
    v.dim_c = rank(gc);
    v.dim_d = rank(gd);
    v.ambient = gc.cols();
    v.verdict = v.dim_c + v.dim_d == v.ambient && v.dim_sum_space == v.ambient;
    return v;
}

std::size_t intersection_dim(const GenMatrix& gc, const GenMatrix& gd) {
    const std::size_t s = rank(stack(gc, gd));
    return rank(gc) + rank(gd) - s;
}

}  // namespace lcpqc
