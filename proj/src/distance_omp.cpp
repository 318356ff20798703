#include <atomic>
#include <limits>
#include <vector>

#include <omp.h>

#include "lcpqc/distance.hpp"

namespace lcpqc::kernels {

namespace {

using T = std::uint16_t;

// Cayley tables for q <= 256.
struct TableOps {
    std::size_t q;
    std::vector<T> add_t, sub_t, mul_t, inv_t;

    explicit TableOps(const Field& f) : q(f.order()) {
        add_t.resize(q * q);
        sub_t.resize(q * q);
        mul_t.resize(q * q);
        inv_t.assign(q, 0);
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                add_t[a * q + b] = static_cast<T>(f.add(a, b));
                sub_t[a * q + b] = static_cast<T>(f.sub(a, b));
                mul_t[a * q + b] = static_cast<T>(f.mul(a, b));
            }
            if (a) inv_t[a] = static_cast<T>(f.inv(a));
        }
    }
    T add(T a, T b) const noexcept { return add_t[a * q + b]; }
    T sub(T a, T b) const noexcept { return sub_t[a * q + b]; }
    T mul(T a, T b) const noexcept { return mul_t[a * q + b]; }
    T inv(T a) const noexcept { return inv_t[a]; }
};

struct FieldOps {
    const Field* f;
    T add(T a, T b) const noexcept { return static_cast<T>(f->add(a, b)); }
    T sub(T a, T b) const noexcept { return static_cast<T>(f->sub(a, b)); }
    T mul(T a, T b) const noexcept { return static_cast<T>(f->mul(a, b)); }
    T inv(T a) const { return static_cast<T>(f->inv(a)); }
};

template <class Fn>
auto with_ops(const Field& f, Fn&& fn) {
    if (f.order() <= 256) return fn(TableOps(f));
    return fn(FieldOps{&f});
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// ---------------------------------------------------------------------------
// Enumeration. A projective message has its first nonzero digit at position
// j set to 1 and free digits j+1..k-1, the last one moving fastest. Every
// nonzero codeword is a scalar multiple of exactly one such message.

template <class Ops>
Outcome enumerate_impl(const Ops& ops, const GenMatrix& basis, std::uint64_t budget, int threads) {
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    const std::size_t q = basis.field().order();

    // Support of each row and its scaled copies delta * row on that support.
    std::vector<std::vector<std::uint32_t>> support(k);
    std::vector<std::vector<T>> scaled(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            if (basis.at(i, c)) support[i].push_back(static_cast<std::uint32_t>(c));
        }
        const std::size_t s = support[i].size();
        scaled[i].resize(q * s);
        for (std::size_t d = 0; d < q; ++d) {
            for (std::size_t t = 0; t < s; ++t) {
                scaled[i][d * s + t] = ops.mul(static_cast<T>(d), static_cast<T>(basis.at(i, support[i][t])));
            }
        }
    }
    // Digit step a -> a+1 (wrapping at q-1) adds step[a] * row.
    std::vector<T> step(q);
    for (std::size_t a = 0; a < q; ++a) step[a] = ops.sub(static_cast<T>((a + 1) % q), static_cast<T>(a));

    std::vector<std::uint64_t> block_start(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t size = 1;
        for (std::size_t t = j + 1; t < k; ++t) size = sat_mul(size, q);
        block_start[j + 1] = sat_add(block_start[j], size);
    }
    const std::uint64_t total = block_start[k];
    const std::uint64_t limit = std::min(total, budget);

    const int nthreads = std::max(1, threads);
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(limit, 64ULL * nthreads));
    std::vector<int> chunk_best(chunks, static_cast<int>(n) + 1);

    auto apply = [&](std::vector<T>& cw, int& weight, std::size_t row, T delta) {
        const auto& sup = support[row];
        const T* add = scaled[row].data() + delta * sup.size();
        for (std::size_t t = 0; t < sup.size(); ++t) {
            const T old = cw[sup[t]];
            const T nv = ops.add(old, add[t]);
            weight += (nv != 0) - (old != 0);
            cw[sup[t]] = nv;
        }
    };

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
        const std::uint64_t lo = limit / chunks * ci + std::min<std::uint64_t>(ci, limit % chunks);
        const std::uint64_t hi = lo + limit / chunks + (static_cast<std::uint64_t>(ci) < limit % chunks ? 1 : 0);
        if (lo >= hi) continue;
        std::vector<T> cw(n, 0);
        std::vector<T> digits(k, 0);
        int weight = 0;
        int best = static_cast<int>(n) + 1;
        std::size_t j = 0;
        while (block_start[j + 1] <= lo) ++j;
        auto load = [&](std::size_t lead, std::uint64_t offset) {
            std::fill(cw.begin(), cw.end(), 0);
            std::fill(digits.begin(), digits.end(), 0);
            weight = 0;
            digits[lead] = 1;
            apply(cw, weight, lead, 1);
            for (std::size_t t = k; t-- > lead + 1 && offset;) {
                digits[t] = static_cast<T>(offset % q);
                offset /= q;
                if (digits[t]) apply(cw, weight, t, digits[t]);
            }
        };
        load(j, lo - block_start[j]);
        for (std::uint64_t idx = lo;;) {
            best = std::min(best, weight);
            if (++idx == hi) break;
            if (idx == block_start[j + 1]) {
                ++j;
                load(j, 0);
                continue;
            }
            std::size_t t = k - 1;
            while (true) {
                const T a = digits[t];
                apply(cw, weight, t, step[a]);
                digits[t] = static_cast<T>((a + 1) % q);
                if (digits[t] != 0) break;
                --t;
            }
        }
        chunk_best[ci] = best;
    }

    Outcome out;
    out.work = limit;
    out.distance = static_cast<int>(n) + 1;
    for (int b : chunk_best) out.distance = std::min(out.distance, b);
    out.complete = limit == total;
    out.lower = out.complete ? out.distance : 1;
    return out;
}

// ---------------------------------------------------------------------------
// Column search. Each DFS level keeps, for every later column, its projection
// onto a complement of the span of the chosen columns S. A later column that
// projects to zero closes a dependent set of size |S| + 1.

template <class Ops>
struct ColumnSearcher {
    const Ops& ops;
    std::size_t n;
    std::size_t r;
    std::vector<T> buf;
    int limit = 0;
    int best = 0;
    int floor = 0;  // stop once a set of this size is found
    bool stop = false;
    std::uint64_t work = 0;
    std::uint64_t pending = 0;
    std::atomic<std::uint64_t>* shared_work = nullptr;
    std::atomic<bool>* aborted = nullptr;
    std::uint64_t budget = 0;

    ColumnSearcher(const Ops& o, std::size_t cols, std::size_t rows)
        : ops(o), n(cols), r(rows), buf((rows + 2) * cols * rows, 0) {}

    T* level(int j) { return buf.data() + static_cast<std::size_t>(j) * n * r; }

    void tick() {
        ++work;
        if (++pending == 4096) {
            if (shared_work->fetch_add(pending) + pending > budget) aborted->store(true);
            pending = 0;
            if (aborted->load(std::memory_order_relaxed)) stop = true;
        }
    }

    // Adds column c to a set of size j whose projections live at level j.
    // Returns true when a dependent set of size j + 2 appears.
    bool extend(int j, std::size_t c) {
        tick();
        const T* P = level(j);
        T* Q = level(j + 1);
        const T* v = P + c * r;
        std::size_t piv = 0;
        while (v[piv] == 0) ++piv;
        const T inv = ops.inv(v[piv]);
        for (std::size_t u = c + 1; u < n; ++u) {
            const T* x = P + u * r;
            T* y = Q + u * r;
            const T coef = ops.mul(x[piv], inv);
            bool nz = false;
            if (coef == 0) {
                for (std::size_t i = 0; i < r; ++i) {
                    y[i] = x[i];
                    nz |= y[i] != 0;
                }
            } else {
                for (std::size_t i = 0; i < r; ++i) {
                    y[i] = ops.sub(x[i], ops.mul(coef, v[i]));
                    nz |= y[i] != 0;
                }
            }
            if (!nz) return true;
        }
        return false;
    }

    void branch(int j, std::size_t c) {
        if (stop || j + 2 > limit || j + 2 >= best || c + 1 >= n) return;
        if (extend(j, c)) {
            best = j + 2;
            if (best <= floor) stop = true;
            return;
        }
        if (j + 3 > limit || j + 3 >= best) return;
        for (std::size_t u = c + 1; u + 1 < n; ++u) {
            branch(j + 1, u);
            if (stop || j + 3 >= best) return;
        }
    }
};

template <class Ops>
Outcome column_search_impl(const Ops& ops, const GenMatrix& h, std::uint64_t budget, int threads) {
    const std::size_t n = h.cols();
    const std::size_t r = h.rows();
    Outcome out;
    if (n == 0) fail(ErrorKind::ZeroCode, "empty code");
    std::vector<T> root(n * r);
    bool zero_column = r == 0;
    for (std::size_t c = 0; c < n; ++c) {
        bool nz = false;
        for (std::size_t i = 0; i < r; ++i) {
            root[c * r + i] = static_cast<T>(h.at(i, c));
            nz |= root[c * r + i] != 0;
        }
        zero_column |= !nz;
    }
    if (zero_column) {
        out.complete = true;
        out.distance = out.lower = 1;
        out.work = 1;
        return out;
    }
    if (n <= r) fail(ErrorKind::ZeroCode, "columns are independent, so the code is {0}");

    const int nthreads = std::max(1, threads);
    std::atomic<std::uint64_t> shared{0};
    std::atomic<bool> aborted{false};
    const int upper = static_cast<int>(r) + 1;

    // Runs one pass over all first columns; returns the per-pass minimum.
    auto pass = [&](int limit, int best0, int floor) {
        const std::size_t roots = n - 1;
        std::vector<int> found(roots, best0);
        std::vector<std::uint64_t> work(roots, 0);
#pragma omp parallel num_threads(nthreads)
        {
            ColumnSearcher<Ops> s(ops, n, r);
            std::copy(root.begin(), root.end(), s.level(0));
            s.shared_work = &shared;
            s.aborted = &aborted;
            s.budget = budget;
#pragma omp for schedule(dynamic, 1)
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(roots); ++c) {
                s.limit = limit;
                s.best = best0;
                s.floor = floor;
                s.stop = aborted.load();
                const std::uint64_t before = s.work;
                s.branch(0, static_cast<std::size_t>(c));
                found[c] = s.best;
                work[c] = s.work - before;
            }
            shared.fetch_add(s.pending);
        }
        int best = best0;
        for (std::size_t c = 0; c < roots; ++c) {
            best = std::min(best, found[c]);
            out.work += work[c];
        }
        return best;
    };

    // Iterative deepening over small weights, where early exit pays off.
    int lower = 2;
    const int deepening = std::min(upper, std::max(2, static_cast<int>(n) / 2));
    for (int w = 2; w <= deepening; ++w) {
        const int got = pass(w, w + 1, w);
        if (aborted.load()) break;
        if (got == w) {
            out.complete = true;
            out.distance = out.lower = w;
            return out;
        }
        lower = w + 1;
    }
    if (!aborted.load() && lower >= upper) {
        out.complete = true;
        out.distance = out.lower = upper;
        return out;
    }
    // Branch and bound for the remaining range; any r + 1 columns are dependent.
    int best = upper;
    if (!aborted.load()) best = pass(upper, upper, lower);
    out.lower = lower;
    out.distance = best;
    out.complete = !aborted.load();
    if (out.complete) out.lower = best;
    return out;
}

}  // namespace

Outcome enumerate(const GenMatrix& basis, std::uint64_t budget, int threads) {
    return with_ops(basis.field(), [&](const auto& ops) { return enumerate_impl(ops, basis, budget, threads); });
}

Outcome column_search(const GenMatrix& h, std::uint64_t budget, int threads) {
    return with_ops(h.field(), [&](const auto& ops) { return column_search_impl(ops, h, budget, threads); });
}

}  // namespace lcpqc::kernels
