#include <algorithm>
#include <vector>

#include "lcpqc/distance.hpp"

namespace lcpqc::reference {

int enumerate(const GenMatrix& g) {
    const Field& f = g.field();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    const Elem q = f.order();
    std::vector<Elem> msg(k, 0);
    int best = 0;
    while (true) {
        std::size_t i = 0;
        while (i < k && ++msg[i] == q) {
            msg[i] = 0;
            ++i;
        }
        if (i == k) break;
        int w = 0;
        for (std::size_t c = 0; c < n; ++c) {
            Elem s = 0;
            for (std::size_t r = 0; r < k; ++r) s = f.add(s, f.mul(msg[r], g.at(r, c)));
            w += s != 0;
        }
        if (w > 0 && (best == 0 || w < best)) best = w;
    }
    if (best == 0) fail(ErrorKind::ZeroCode, "code has no nonzero codeword");
    return best;
}

int column_search(const GenMatrix& h) {
    const std::size_t n = h.cols();
    const std::size_t r = h.rows();
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(w), true);
        do {
            GenMatrix sub(h.field(), w, r);
            std::size_t row = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (!pick[c]) continue;
                for (std::size_t i = 0; i < r; ++i) sub.at(row, i) = h.at(i, c);
                ++row;
            }
            if (rank(sub) < w) return static_cast<int>(w);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    fail(ErrorKind::ZeroCode, "columns are independent, so the code is {0}");
}

}  // namespace lcpqc::reference
