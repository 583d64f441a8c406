#include "qv/lambert.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "qv/products.hpp"

namespace qv {

namespace {

// Shared accumulator: signed exponents, converted to a Series at the end.
struct ExpMap {
    std::map<long, Rat> c;

    void add(long e, const Rat& v) {
        auto it = c.find(e);
        if (it == c.end())
            c.emplace(e, v);
        else
            it->second += v;
    }

    Series to_series(long N) const {
        Series r(N);
        for (const auto& [e, v] : c) {
            if (v == 0) continue;
            if (e < 0)
                throw NegativeExponentResult("sum has a nonzero q^" + std::to_string(e) + " term");
            if (e <= N) r.set(e, v);
        }
        return r;
    }

    Laurent to_laurent(long hi) const {
        long lo = 0;
        for (const auto& [e, v] : c)
            if (v != 0) {
                lo = std::min(lo, e);
                break;  // map is ordered; first nonzero is the minimum
            }
        Series body(hi - lo);
        for (const auto& [e, v] : c)
            if (e >= lo && e <= hi) body.set(e - lo, v);
        return Laurent{lo, body};
    }
};

// Expand  sign_factor / (1 - denom_sign*q^e)^power  * q^{num_exp}  into `acc`,
// keeping exponents <= hi.  Handles e of any sign and e == 0 (pole_index is
// the summation index to blame if that denominator vanishes).
void accumulate_term(ExpMap& acc, Rat coeff, long num_exp, int denom_sign, long e, int power,
                     long pole_index, long hi) {
    if (e == 0) {
        if (denom_sign > 0) throw PoleAtIndex(pole_index);
        coeff /= (power == 1 ? 2 : 4);  // (1+1)^power
        if (num_exp <= hi) acc.add(num_exp, coeff);
        return;
    }
    long ee = e, base = num_exp;
    if (e < 0) {
        // 1/(1 - s q^{-ee})^p = (-s)^p q^{p*ee} / (1 - s q^{ee})^p
        ee = -e;
        base += static_cast<long>(power) * ee;
        if (power == 1 && denom_sign > 0) coeff = -coeff;
        if (power == 1 && denom_sign < 0) { /* (-(-1))^1 = +1 */ }
    }
    for (long i = 0; base + i * ee <= hi; ++i) {
        Rat t = coeff;
        if (denom_sign < 0 && (i & 1)) t = -t;
        if (power == 2) t *= (i + 1);
        acc.add(base + i * ee, t);
    }
}

}  // namespace

Series lambert_sum(const LambertSpec& sp, long N) {
    if (sp.A < 1) throw Error("quadratic coefficient A must be >= 1");
    if (sp.C < 0) throw Error("constant exponent C must be >= 0");
    if (sp.power != 1 && sp.power != 2) throw Error("denominator power must be 1 or 2");
    if (sp.denom_sign != 1 && sp.denom_sign != -1) throw Error("denominator sign must be +1 or -1");

    const auto f = [&](long n) { return sp.A * n * n + sp.B * n + sp.C; };
    // The numerator exponent is a parabola in n; indices with f(n) <= N form a
    // contiguous (possibly empty) block around its vertex.
    const long center = std::lround(-static_cast<double>(sp.B) / (2.0 * sp.A));
    long lo = center, hi_idx = center;
    if (f(center) <= N) {
        while (f(lo - 1) <= N) --lo;
        while (f(hi_idx + 1) <= N) ++hi_idx;
    }
    lo -= 2;
    hi_idx += 2;

    ExpMap acc;
    for (long n = lo; n <= hi_idx; ++n) {
        if (sp.exclusions.count(n)) continue;
        Rat coeff = (sp.alt_sign && floor_mod(n, 2) == 1) ? Rat(-1) : Rat(1);
        accumulate_term(acc, coeff, f(n), sp.denom_sign, sp.D * n + sp.E, sp.power, n, N);
    }
    return acc.to_series(N);
}

SNormalized s_normalize(const SSeriesSpec& spec) {
    if (spec.sign != 1 && spec.sign != -1) throw Error("S-series sign must be +1 or -1");
    if (spec.n == 0) throw Error("S-series base exponent must be nonzero");
    long m = spec.m, n = spec.n;
    if (n < 0) {
        // S(q^m; q^{-n'}) = S(q^{m+n'}; q^{n'})
        n = -n;
        m += n;
    }
    SNormalized out;
    const long t = floor_div(m, n);
    out.offset = Rat(t);
    const long mp = m - t * n;  // in [0, n)
    if (mp == 0) {
        if (spec.sign > 0)
            throw UndefinedS("S(+q^m; q^n) with m divisible by n hits the undefined term 1/(1-1)");
        // S(-1; q^n) = -1/2, shifted by the peeled-off offset.
        out.resolved = true;
        out.value = out.offset - rat(1, 2);
        return out;
    }
    if (2 * mp == n) {
        // the flip rule maps +-q^{n/2} to itself with a sign change, so S = 0
        out.resolved = true;
        out.value = out.offset;
        return out;
    }
    out.canon = SSeriesSpec{spec.sign, mp, n};
    return out;
}

Series s_direct(const SSeriesSpec& canon, long N) {
    if (!(0 < canon.m && canon.m < canon.n)) throw Error("s_direct requires 0 < m < n");
    ExpMap acc;
    for (long j = 0;; ++j) {
        const long e1 = canon.m + canon.n * j;
        const long e2 = canon.n * (j + 1) - canon.m;
        if (e1 > N && e2 > N) break;
        // 1/(1-s q^{e1}) - 1/(1-s q^{e2}): the constant terms cancel.
        for (long i = 1; i * e1 <= N; ++i)
            acc.add(i * e1, Rat(canon.sign < 0 && (i & 1) ? -1 : 1));
        for (long i = 1; i * e2 <= N; ++i)
            acc.add(i * e2, Rat(canon.sign < 0 && (i & 1) ? 1 : -1));
    }
    return acc.to_series(N);
}

Series s_value(const SSeriesSpec& spec, long N) {
    const SNormalized nm = s_normalize(spec);
    if (nm.resolved) return Series::constant(nm.value, N);
    return s_direct(nm.canon, N).plus_const(nm.offset);
}

Laurent appell_lerch_laurent(Monomial x, long base, Monomial z, long N) {
    if (base < 1) throw Error("Appell-Lerch base exponent must be >= 1");
    const long pad = 4 * base + 2 * std::labs(x.exp) + 2 * std::labs(z.exp) + 32;
    const long W = N + pad;

    // Denominator theta j(z; q^base); its window must survive the division.
    const Laurent jz = laurent_theta(z, base, W);
    if (jz.body.is_zero())
        throw PoleInSpecialization("j(z; q^base) vanishes for this z");

    // sum_r (-1)^r q^{b r(r-1)/2} z^r / (1 - q^{b(r-1)} x z)
    ExpMap acc;
    const int sigma = x.sign * z.sign;  // sign of q in the denominator binomial
    auto emit = [&](long r) -> bool {
        const long num_exp = base * (r * (r - 1) / 2) + r * z.exp;
        const long den_exp = base * (r - 1) + x.exp + z.exp;
        const long min_exp = num_exp + (den_exp < 0 ? -den_exp * 1L : 0);
        if (min_exp > W) return false;
        Rat coeff((floor_mod(r, 2) == 1) ? -1 : 1);
        if (z.sign < 0 && floor_mod(r, 2) == 1) coeff = -coeff;  // z^r sign
        accumulate_term(acc, coeff, num_exp, sigma, den_exp, 1, r, W);
        return true;
    };
    for (long r = 0, misses = 0; misses < 4; ++r)
        if (!emit(r)) ++misses;
    for (long r = -1, misses = 0; misses < 4; --r)
        if (!emit(r)) ++misses;

    return lau_div(acc.to_laurent(W), jz);
}

Series appell_lerch(Monomial x, long base, Monomial z, long N) {
    return lau_to_series(appell_lerch_laurent(x, base, z, N), N);
}

Series g2(Monomial x, long base, long N) {
    if (base < 1) throw Error("g2 base exponent must be >= 1");
    LambertSpec sp;
    sp.alt_sign = true;
    sp.A = base;
    sp.B = base;
    sp.C = 0;
    sp.denom_sign = x.sign;
    sp.D = base;
    sp.E = x.exp;
    sp.power = 1;
    const Series num = lambert_sum(sp, N);
    return num * cap_j(base, 2 * base, N).inverse();
}

Series mock_omega(long N) {
    Series acc(N);
    for (long n = 0; 2 * n * (n + 1) <= N; ++n) {
        const Series d = finite_pochhammer(Monomial{1, 1}, 2, n + 1, N);
        acc = acc + (d * d).inverse().shifted_up(2 * n * (n + 1)).truncated(N);
    }
    return acc;
}

Series mock_rho(long N) {
    Series acc(N);
    for (long n = 0; 2 * n * (n + 1) <= N; ++n) {
        const Series num = finite_pochhammer(Monomial{1, 1}, 2, n + 1, N);
        const Series den = finite_pochhammer(Monomial{1, 3}, 6, n + 1, N);
        acc = acc + (num * den.inverse()).shifted_up(2 * n * (n + 1)).truncated(N);
    }
    return acc;
}

}  // namespace qv
