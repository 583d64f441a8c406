#pragma once

#include <set>

#include "qv/laurent.hpp"
#include "qv/monomial.hpp"
#include "qv/series.hpp"

namespace qv {

// Bilateral generalized Lambert series
//
//   sum_n  (alt ? (-1)^n : 1) * q^{A n^2 + B n + C} / (1 - denom_sign * q^{D n + E})^power
//
// summed over integer n (minus `exclusions`).  Evaluation walks every index n
// whose numerator exponent can reach the truncation order (padded by 2 on
// each side) and expands the denominator geometrically:
//   * D n + E > 0: ordinary geometric/derived-geometric expansion;
//   * D n + E = 0: denominator (1 - denom_sign); a pole for +1 (PoleAtIndex),
//     the constant 2^power for -1;
//   * D n + E < 0: rewrite 1/(1 - s q^{-e}) = (-s) q^{e} / (1 - s q^{e}) to
//     pull the exponent positive before expanding.
struct LambertSpec {
    bool alt_sign = false;
    long A = 1, B = 0, C = 0;
    int denom_sign = 1;
    long D = 1, E = 0;
    int power = 1;
    std::set<long> exclusions;

    friend bool operator==(const LambertSpec&, const LambertSpec&) = default;
};

Series lambert_sum(const LambertSpec& spec, long N);

// The Lambert-difference series
//   S(a; q^n) = sum_{j>=0} [ 1/(1 - a q^{nj})  -  1/(1 - q^{n(j+1)}/a) ]
// for a = sign*q^m; the constant parts of each bracketed pair cancel, so this
// is an ordinary power series whenever 0 < m < n.
struct SSeriesSpec {
    int sign = 1;
    long m = 0;
    long n = 1;
};

// Canonicalization via the shift/flip rules
//   S(a q^n; q^n) = S(a; q^n) + 1,    S(q^n/a; q^n) = -S(a; q^n),
//   S(q^m; q^{-n}) = S(q^{m+n}; q^n),
// plus the closed special values S(-q^{tn}; q^n) = t - 1/2 and
// S(+-q^{n/2}; q^n) = 0 (the flip rule fixes q^{n/2} arguments, forcing 0).
// S(+q^m; q^n) with m divisible by n is undefined (UndefinedS).
struct SNormalized {
    bool resolved = false;  // true: the series is the constant `value`
    Rat value;
    SSeriesSpec canon;      // otherwise S(input) = S(canon) + offset, 0 < canon.m < canon.n
    Rat offset;
};

SNormalized s_normalize(const SSeriesSpec& spec);

// Direct expansion; requires 0 < m < n.
Series s_direct(const SSeriesSpec& canon, long N);

// normalize-then-evaluate; accepts anything s_normalize accepts.
Series s_value(const SSeriesSpec& spec, long N);

// Appell-Lerch sum with q -> q^base:
//   m(x, q^b, z) = (1/j(z; q^b)) * sum_r (-1)^r q^{b*binom(r,2)} z^r / (1 - q^{b(r-1)} x z).
// The Laurent variant keeps the (possibly negative) powers of q unapplied for
// use inside expressions; appell_lerch() truncates to a power series.
Laurent appell_lerch_laurent(Monomial x, long base, Monomial z, long N);
Series appell_lerch(Monomial x, long base, Monomial z, long N);

// Universal mock theta function with q -> q^base:
//   g2(x, q^b) = (1/j(q^b; q^{2b})) * sum_n (-1)^n q^{b n(n+1)} / (1 - x q^{bn}).
Series g2(Monomial x, long base, long N);

// Third-order mock theta functions, by direct summation:
//   omega(q) = sum_{n>=0} q^{2n(n+1)} / (q; q^2)_{n+1}^2
//   rho(q)   = sum_{n>=0} q^{2n(n+1)} (q; q^2)_{n+1} / (q^3; q^6)_{n+1}
Series mock_omega(long N);
Series mock_rho(long N);

}  // namespace qv
