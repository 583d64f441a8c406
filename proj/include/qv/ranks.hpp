#pragma once

#include <string>
#include <vector>

#include "qv/series.hpp"

namespace qv {

// Rank counts N(m, n) for overpartitions of n: partitions into weakly
// decreasing parts where any subset of the distinct part sizes may carry an
// overline; the rank is (largest part) - (number of parts), and the empty
// overpartition of 0 has rank 0.
struct RankTable {
    long max_n;
    // counts[n][m + n] = number of overpartitions of n with rank m, |m| <= n.
    std::vector<std::vector<long long>> counts;

    long long at(long m, long n) const;
    long long total(long n) const;  // number of overpartitions of n
};

// Direct enumeration: every partition of every n <= max_n, with all
// 2^{#distinct parts} overline choices generated explicitly.  Intended as a
// ground-truth oracle for small n (the generator is exponential by design).
RankTable enumerate_ranks(long max_n);

// Number of overpartitions of n with rank congruent to s modulo ell.
long long count_rank_mod(const RankTable& table, long s, long ell, long n);

// Rank generating functions twisted by a primitive 6th root of unity z:
// with R(z; q) = sum_{m,n} N(m, n) z^m q^n, rbar_spec(t, N) returns
// R(z^t; q) for t = 0..3, each collapsed to an exact rational-coefficient
// series via the closed single/double-pole Lambert forms:
//   t=0:  (-q)_inf / (q)_inf
//   t=1:  2 * opgf * sum_n (-1)^n q^{n^2+n} / (1 + q^{3n})
//   t=2:  opgf * (1 + 6 * sum_{n!=0} (-1)^n q^{n^2+n} / (1 - q^{3n}))
//   t=3:  4 * opgf * sum_n (-1)^n q^{n^2+n} / (1 + q^n)^2
Series rbar_spec(int t, long N);

// Generating function of N(s, 6, n) (ranks congruent to s mod 6), obtained
// from the rbar_spec values by exact root-of-unity averaging.
Series residue_gf(int s, long N);

// sum_n N(s, 6, 3n + d) q^n: residue d of the 3-dissection of residue_gf.
Series rank_dissection(int s, int d, long N);

// One failed comparison from the conjectured rank orderings.
struct Violation {
    long size;             // the partition size 3n+d being tested
    std::string relation;  // e.g. "N(1,6,4) >= N(2,6,4)"
    long long lhs, rhs;
};

// Check, for every n in [from, to], the conjectured chains
//   sizes 3n, 3n+1:  N(0) >= N(1), N(1) == N(3), N(3) >= N(2)
//   size  3n+2:      N(1) >= N(2) >= N(0) >= N(3)
// and report every failure.
std::vector<Violation> conjecture_scan(long from, long to);

}  // namespace qv
