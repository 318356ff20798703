#include <doctest.h>

#include "lcpqc/distance.hpp"
#include "lcpqc/error.hpp"
#include "lcpqc/report.hpp"
#include "lcpqc/repro.hpp"
#include "support.hpp"

using namespace lcpqc;

namespace {

GenMatrix random_basis(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        GenMatrix m(f, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng() % 3 ? testsupport::random_elem(f, rng) : 0;
        }
        if (rank(m) == k) return m;
    }
}

QtCodeSpec spec_of(const ReproCase& rc, bool d) {
    const Field f = parse_field(rc.q, rc.modulus);
    const Elem lambda = elem_parse(rc.lambda, f).value();
    std::vector<std::string> notes;
    return prepare_standard_form(parse_spec(f, rc.m, lambda, d ? rc.d : rc.c), d ? "D" : "C", notes);
}

}  // namespace

TEST_CASE("all-ones row has distance n") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const Field f = testsupport::small_field(q);
        for (std::size_t n : {1u, 5u, 12u}) {
            GenMatrix g(f, 1, n);
            for (std::size_t j = 0; j < n; ++j) g.at(0, j) = 1;
            DistanceOptions e;
            e.method = DistanceMethod::Enumeration;
            CHECK(min_distance(g, e).distance == static_cast<int>(n));
            if (n > 1) {
                DistanceOptions c;
                c.method = DistanceMethod::ColumnSearch;
                const auto r = min_distance(g, c);
                CHECK(r.distance == static_cast<int>(n));
                CHECK(r.method == DistanceMethod::ColumnSearch);
            }
        }
    }
}

TEST_CASE("zero code is refused") {
    const Field f3 = Field::make(3);
    try {
        min_distance(GenMatrix(f3, 2, 4));
        FAIL("zero code accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroCode);
    }
}

TEST_CASE("kernels agree with the serial references") {
    std::mt19937_64 rng(31337);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const Field f = testsupport::small_field(q);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 2 + rng() % 9;
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 5);
            const GenMatrix g = random_basis(f, k, n, rng);
            const int ref = reference::enumerate(g);
            const auto en = kernels::enumerate(g, 1'000'000'000, 0);
            REQUIRE(en.complete);
            CHECK(en.distance == ref);
            if (k < n) {
                const GenMatrix h = dual_matrix(g);
                CHECK(reference::column_search(h) == ref);
                const auto cs = kernels::column_search(h, 1'000'000'000, 0);
                REQUIRE(cs.complete);
                CHECK(cs.distance == ref);
            }
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    std::mt19937_64 rng(8);
    const Field f = testsupport::small_field(4);
    for (int t = 0; t < 10; ++t) {
        const GenMatrix g = random_basis(f, 6, 14, rng);
        const GenMatrix h = dual_matrix(g);
        const auto e1 = kernels::enumerate(g, 1'000'000'000, 1);
        const auto e4 = kernels::enumerate(g, 1'000'000'000, 4);
        CHECK(e1.distance == e4.distance);
        CHECK(e1.work == e4.work);
        CHECK(kernels::column_search(h, 1'000'000'000, 1).distance ==
              kernels::column_search(h, 1'000'000'000, 3).distance);
    }
}

TEST_CASE("budget exhaustion reports bounds") {
    std::mt19937_64 rng(1);
    const Field f = testsupport::small_field(5);
    const GenMatrix g = random_basis(f, 8, 16, rng);
    const int exact = min_distance(g).distance;
    for (const DistanceMethod m : {DistanceMethod::Enumeration, DistanceMethod::ColumnSearch}) {
        DistanceOptions o;
        o.method = m;
        o.budget = 50;
        try {
            const auto r = min_distance(g, o);
            // Column search may legitimately finish a low-distance code early.
            CHECK(m == DistanceMethod::ColumnSearch);
            CHECK(r.distance == exact);
        } catch (const BudgetExceededError& e) {
            CHECK(e.kind() == ErrorKind::BudgetExceeded);
            CHECK(e.lower() <= exact);
            CHECK(e.upper() >= exact);
        }
    }
}

TEST_CASE("cross-check mode") {
    std::mt19937_64 rng(2);
    const Field f = testsupport::small_field(3);
    DistanceOptions o;
    o.cross_check = true;
    for (int t = 0; t < 20; ++t) {
        const GenMatrix g = random_basis(f, 4, 9, rng);
        CHECK(min_distance(g, o).distance == reference::enumerate(g));
    }
}

TEST_CASE("published d_LCP values") {
    // ex2: [8,4,4]_3, ex3: [10,5,5]_3, qt2: [20,10,8]_9 via column search,
    // qt3: [20,14,5]_9, table1-row2: [10,5,5]_4.
    for (const char* id : {"ex2", "ex3", "qt2", "qt3", "table1-row2"}) {
        CAPTURE(id);
        const ReproCase* rc = find_repro_case(id);
        REQUIRE(rc != nullptr);
        const auto r = d_lcp(spec_of(*rc, false), spec_of(*rc, true));
        CHECK(r.dlcp == rc->dlcp);
        CHECK(r.dlcp == std::min(r.c.distance, r.d_dual.distance));
        if (std::string(id) == "qt2") {
            CHECK(r.c.method == DistanceMethod::ColumnSearch);
            CHECK(r.d_dual.method == DistanceMethod::ColumnSearch);
        }
    }
}

TEST_CASE("d_lcp rejects mismatched ambients") {
    const Field f3 = Field::make(3);
    const QtCodeSpec a = parse_spec(f3, 4, 1, "1,1;1,1,1;2,1,2,1");
    const QtCodeSpec b = parse_spec(f3, 5, 1, "1;0;1");
    try {
        d_lcp(a, b);
        FAIL("mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MismatchedAmbient);
    }
}
