#include "qv/ranks.hpp"

#include "qv/lambert.hpp"
#include "qv/products.hpp"

namespace qv {

long long RankTable::at(long m, long n) const {
    if (n < 0 || n > max_n) throw Error("rank table has no entry for n = " + std::to_string(n));
    if (m < -n || m > n) return 0;
    return counts[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
}

long long RankTable::total(long n) const {
    long long s = 0;
    for (long m = -n; m <= n; ++m) s += at(m, n);
    return s;
}

namespace {

void gen_partitions(long remaining, long max_part, std::vector<long>& parts, RankTable& table, long n) {
    if (remaining == 0) {
        long distinct = 0;
        for (size_t i = 0; i < parts.size(); ++i)
            if (i == 0 || parts[i] != parts[i - 1]) ++distinct;
        const long rank = parts.empty() ? 0 : parts.front() - static_cast<long>(parts.size());
        // Every subset of the distinct part sizes may be overlined; the rank
        // does not depend on the choice, but each choice is its own object.
        auto& row = table.counts[static_cast<size_t>(n)];
        for (long mask = 0; mask < (1L << distinct); ++mask) row[static_cast<size_t>(rank + n)] += 1;
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        gen_partitions(remaining - p, p, parts, table, n);
        parts.pop_back();
    }
}

}  // namespace

RankTable enumerate_ranks(long max_n) {
    if (max_n < 0) throw Error("max_n must be >= 0");
    if (max_n > 25) throw Error("enumeration oracle is limited to n <= 25");
    RankTable table;
    table.max_n = max_n;
    table.counts.resize(static_cast<size_t>(max_n) + 1);
    for (long n = 0; n <= max_n; ++n) {
        table.counts[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n) + 1, 0);
        std::vector<long> parts;
        gen_partitions(n, n, parts, table, n);
    }
    return table;
}

long long count_rank_mod(const RankTable& table, long s, long ell, long n) {
    if (ell < 1) throw Error("modulus must be >= 1");
    long long total = 0;
    for (long m = -n; m <= n; ++m)
        if (floor_mod(m - s, ell) == 0) total += table.at(m, n);
    return total;
}

Series rbar_spec(int t, long N) {
    const Series over = opgf(N);
    switch (t) {
        case 0:
            return over;
        case 1: {
            LambertSpec sp;
            sp.alt_sign = true;
            sp.A = 1; sp.B = 1; sp.C = 0;
            sp.denom_sign = -1;
            sp.D = 3; sp.E = 0;
            sp.power = 1;
            return (over * lambert_sum(sp, N)).scaled(2);
        }
        case 2: {
            LambertSpec sp;
            sp.alt_sign = true;
            sp.A = 1; sp.B = 1; sp.C = 0;
            sp.denom_sign = 1;
            sp.D = 3; sp.E = 0;
            sp.power = 1;
            sp.exclusions = {0};
            return over * lambert_sum(sp, N).scaled(6).plus_const(1);
        }
        case 3: {
            LambertSpec sp;
            sp.alt_sign = true;
            sp.A = 1; sp.B = 1; sp.C = 0;
            sp.denom_sign = -1;
            sp.D = 1; sp.E = 0;
            sp.power = 2;
            return (over * lambert_sum(sp, N)).scaled(4);
        }
        default:
            throw Error("rbar_spec argument must be 0..3");
    }
}

Series residue_gf(int s, long N) {
    const Series r0 = rbar_spec(0, N);
    const Series r1 = rbar_spec(1, N);
    const Series r2 = rbar_spec(2, N);
    const Series r3 = rbar_spec(3, N);
    // Averaging z over the 6th roots of unity with weight z^{-s*t} leaves
    // exactly the rank classes congruent to s mod 6; conjugate pairs merge.
    Series acc(N);
    switch (s) {
        case 0: acc = r0 + r1.scaled(2) + r2.scaled(2) + r3; break;
        case 1: acc = r0 + r1 - r2 - r3; break;
        case 2: acc = r0 - r1 - r2 + r3; break;
        case 3: acc = r0 - r1.scaled(2) + r2.scaled(2) - r3; break;
        default: throw Error("residue class must be 0..3");
    }
    return acc.scaled(rat(1, 6));
}

Series rank_dissection(int s, int d, long N) {
    if (d < 0 || d > 2) throw Error("dissection residue must be 0..2");
    return residue_gf(s, 3 * N + 2).dissected(3, d).truncated(N);
}

namespace {

long long int_coeff(const Series& s, long n) {
    const Rat& c = s.at(n);
    if (!is_integer(c)) throw Error("expected an integer count at q^" + std::to_string(n));
    return c.get_num().get_si();
}

void check(std::vector<Violation>& out, long size, const char* op, int sa, long long a, int sb, long long b) {
    const bool ok = (op[0] == '=') ? (a == b) : (a >= b);
    if (ok) return;
    out.push_back(Violation{
        size,
        "N(" + std::to_string(sa) + ",6," + std::to_string(size) + ") " + op + " N(" +
            std::to_string(sb) + ",6," + std::to_string(size) + ")",
        a, b});
}

}  // namespace

std::vector<Violation> conjecture_scan(long from, long to) {
    if (from < 0 || to < from) throw Error("bad scan range");
    const long M = 3 * to + 2;
    const Series g0 = residue_gf(0, M);
    const Series g1 = residue_gf(1, M);
    const Series g2 = residue_gf(2, M);
    const Series g3 = residue_gf(3, M);
    std::vector<Violation> out;
    for (long n = from; n <= to; ++n) {
        for (long d = 0; d <= 1; ++d) {
            const long sz = 3 * n + d;
            const long long a0 = int_coeff(g0, sz), a1 = int_coeff(g1, sz);
            const long long a2 = int_coeff(g2, sz), a3 = int_coeff(g3, sz);
            check(out, sz, ">=", 0, a0, 1, a1);
            check(out, sz, "==", 1, a1, 3, a3);
            check(out, sz, ">=", 3, a3, 2, a2);
        }
        const long sz = 3 * n + 2;
        const long long a0 = int_coeff(g0, sz), a1 = int_coeff(g1, sz);
        const long long a2 = int_coeff(g2, sz), a3 = int_coeff(g3, sz);
        check(out, sz, ">=", 1, a1, 2, a2);
        check(out, sz, ">=", 2, a2, 0, a0);
        check(out, sz, ">=", 0, a0, 3, a3);
    }
    return out;
}

}  // namespace qv
