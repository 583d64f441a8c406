// Overpartition rank counting: brute-force enumeration as ground truth for
// the generating-function pipeline (twisted rank series, residue extraction,
// 3-dissection, and the conjectured inequality scan).

#include <string>
#include <vector>

#include "doctest.h"
#include "qv/monomial.hpp"
#include "qv/products.hpp"
#include "qv/ranks.hpp"

using namespace qv;

namespace {

// Weight picked up by z^m when z is the primitive 6th root of unity raised to
// the t-th power, folded with the m <-> -m symmetry so the result is real:
// t=1 gives cos(pi m / 3), t=2 gives cos(2 pi m / 3), t=3 gives (-1)^m.
Rat root_weight(int t, long m) {
    switch (t) {
        case 0: return Rat(1);
        case 1: {
            static const Rat w[6] = {Rat(1), rat(1, 2), rat(-1, 2), Rat(-1), rat(-1, 2), rat(1, 2)};
            return w[floor_mod(m, 6)];
        }
        case 2: {
            static const Rat w[3] = {Rat(1), rat(-1, 2), rat(-1, 2)};
            return w[floor_mod(m, 3)];
        }
        default: return floor_mod(m, 2) == 0 ? Rat(1) : Rat(-1);
    }
}

Rat weighted_rank_sum(const RankTable& table, int t, long n) {
    Rat total = 0;
    for (long m = -n; m <= n; ++m) total += root_weight(t, m) * Rat(static_cast<long>(table.at(m, n)));
    return total;
}

}  // namespace

TEST_CASE("rank counts for the first few sizes by hand") {
    const RankTable t = enumerate_ranks(5);

    // n=0: only the empty overpartition, rank 0.
    CHECK(t.at(0, 0) == 1);
    CHECK(t.total(0) == 1);

    // n=1: [1] and [1 overlined], both rank 0.
    CHECK(t.at(0, 1) == 2);
    CHECK(t.total(1) == 2);

    // n=2: [2] rank 1, [1,1] rank -1, each with one overline variant.
    CHECK(t.at(1, 2) == 2);
    CHECK(t.at(-1, 2) == 2);
    CHECK(t.at(0, 2) == 0);
    CHECK(t.total(2) == 4);

    // n=3: [3] rank 2 (x2), [2,1] rank 0 (x4), [1,1,1] rank -2 (x2).
    CHECK(t.at(2, 3) == 2);
    CHECK(t.at(0, 3) == 4);
    CHECK(t.at(-2, 3) == 2);
    CHECK(t.at(1, 3) == 0);
    CHECK(t.total(3) == 8);

    // n=4: [4] x2 rank 3, [3,1] x4 rank 1, [2,2] x2 rank 0,
    //      [2,1,1] x4 rank -1, [1,1,1,1] x2 rank -3.
    CHECK(t.at(3, 4) == 2);
    CHECK(t.at(1, 4) == 4);
    CHECK(t.at(0, 4) == 2);
    CHECK(t.at(-1, 4) == 4);
    CHECK(t.at(-3, 4) == 2);
    CHECK(t.total(4) == 14);

    // n=5: [5] x2 r4, [4,1] x4 r2, [3,2] x4 r1, [3,1,1] x4 r0,
    //      [2,2,1] x4 r-1, [2,1,1,1] x4 r-2, [1^5] x2 r-4.
    CHECK(t.at(4, 5) == 2);
    CHECK(t.at(2, 5) == 4);
    CHECK(t.at(1, 5) == 4);
    CHECK(t.at(0, 5) == 4);
    CHECK(t.at(3, 5) == 0);
    CHECK(t.total(5) == 24);
}

TEST_CASE("table access rules") {
    const RankTable t = enumerate_ranks(6);
    CHECK(t.at(7, 6) == 0);    // |m| > n is a valid query with count 0
    CHECK(t.at(-7, 6) == 0);
    CHECK_THROWS_AS(t.at(0, 7), Error);  // beyond the enumerated range
    CHECK_THROWS_AS(t.at(0, -1), Error);
    CHECK_THROWS_AS(enumerate_ranks(26), Error);  // enumeration cap
    CHECK_THROWS_AS(enumerate_ranks(-1), Error);
}

TEST_CASE("totals match the overpartition generating function") {
    const RankTable t = enumerate_ranks(15);
    const long long expected[] = {1, 2, 4, 8, 14, 24, 40, 64, 100,
                                  154, 232, 344, 504, 728, 1040, 1472};
    const Series g = opgf(15);
    for (long n = 0; n <= 15; ++n) {
        CHECK(t.total(n) == expected[n]);
        CHECK(g.at(n) == Rat(static_cast<long>(expected[n])));
    }
}

TEST_CASE("rank symmetry under negation") {
    const RankTable t = enumerate_ranks(12);
    for (long n = 0; n <= 12; ++n)
        for (long m = 1; m <= n; ++m) CHECK(t.at(m, n) == t.at(-m, n));
}

TEST_CASE("twisted rank series match enumeration") {
    const long N = 18;
    const RankTable t = enumerate_ranks(N);
    for (int spec = 0; spec <= 3; ++spec) {
        const Series s = rbar_spec(spec, N);
        for (long n = 0; n <= N; ++n) CHECK(s.at(n) == weighted_rank_sum(t, spec, n));
    }
    CHECK_THROWS_AS(rbar_spec(4, 10), Error);
    CHECK_THROWS_AS(rbar_spec(-1, 10), Error);
}

TEST_CASE("count_rank_mod slices the table") {
    const RankTable t = enumerate_ranks(10);
    for (long n = 0; n <= 10; ++n)
        for (long s = 0; s < 6; ++s) {
            long long direct = 0;
            for (long m = -n; m <= n; ++m)
                if (floor_mod(m - s, 6) == 0) direct += t.at(m, n);
            CHECK(count_rank_mod(t, s, 6, n) == direct);
        }
    // A different modulus, and the s-out-of-range wraparound.
    CHECK(count_rank_mod(t, 1, 2, 4) == 12);   // odd ranks of size 4
    CHECK(count_rank_mod(t, -1, 2, 4) == 12);  // -1 = 1 mod 2
    CHECK_THROWS_AS(count_rank_mod(t, 0, 0, 4), Error);
}

TEST_CASE("residue generating functions match enumeration") {
    const long N = 16;
    const RankTable t = enumerate_ranks(N);
    for (int s = 0; s <= 3; ++s) {
        const Series g = residue_gf(s, N);
        for (long n = 0; n <= N; ++n)
            CHECK(g.at(n) == Rat(static_cast<long>(count_rank_mod(t, s, 6, n))));
    }
    CHECK_THROWS_AS(residue_gf(5, 10), Error);
    CHECK_THROWS_AS(residue_gf(-1, 10), Error);
}

TEST_CASE("rank dissection picks out arithmetic progressions") {
    const long N = 8;
    for (int s = 0; s <= 3; ++s) {
        const Series whole = residue_gf(s, 3 * N + 2);
        for (int d = 0; d <= 2; ++d) {
            const Series part = rank_dissection(s, d, N);
            CHECK(part.order() == N);
            for (long n = 0; n <= N; ++n) CHECK(part.at(n) == whole.at(3 * n + d));
        }
    }
    CHECK_THROWS_AS(rank_dissection(0, 3, 10), Error);
    CHECK_THROWS_AS(rank_dissection(0, -1, 10), Error);
    CHECK_THROWS_AS(rank_dissection(4, 0, 10), Error);
}

TEST_CASE("conjecture scan finds exactly the small-size failures") {
    const std::vector<Violation> v = conjecture_scan(0, 1);
    REQUIRE(v.size() == 3);

    CHECK(v[0].size == 3);
    CHECK(v[0].relation == "N(3,6,3) >= N(2,6,3)");
    CHECK(v[0].lhs == 0);
    CHECK(v[0].rhs == 2);

    CHECK(v[1].size == 4);
    CHECK(v[1].relation == "N(0,6,4) >= N(1,6,4)");
    CHECK(v[1].lhs == 2);
    CHECK(v[1].rhs == 4);

    CHECK(v[2].size == 5);
    CHECK(v[2].relation == "N(1,6,5) >= N(2,6,5)");
    CHECK(v[2].lhs == 4);
    CHECK(v[2].rhs == 6);

    CHECK_THROWS_AS(conjecture_scan(-1, 2), Error);
    CHECK_THROWS_AS(conjecture_scan(3, 2), Error);
}

TEST_CASE("every reported violation cross-checks against enumeration") {
    const RankTable t = enumerate_ranks(14);
    for (const Violation& v : conjecture_scan(0, 4)) {
        REQUIRE(v.size <= 14);
        // Parse "N(a,6,size) OP N(b,6,size)".
        const int sa = v.relation[2] - '0';
        const std::size_t second = v.relation.find("N(", 2);
        REQUIRE(second != std::string::npos);
        const int sb = v.relation[second + 2] - '0';
        const bool is_eq = v.relation.find(" == ") != std::string::npos;
        CHECK(v.lhs == count_rank_mod(t, sa, 6, v.size));
        CHECK(v.rhs == count_rank_mod(t, sb, 6, v.size));
        if (is_eq)
            CHECK(v.lhs != v.rhs);
        else
            CHECK(v.lhs < v.rhs);
    }
}
