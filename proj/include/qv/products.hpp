#pragma once

#include "qv/laurent.hpp"
#include "qv/monomial.hpp"
#include "qv/series.hpp"

namespace qv {

// (a; q^step)_infinity = prod_{j>=0} (1 - a q^{step*j}) for a = sign*q^e,
// e >= 0, step >= 1, truncated at order N.  a = +1 gives the zero series
// (first factor vanishes); a = -1 contributes a factor 2.
Series pochhammer(Monomial a, long step, long N);

// (a; q^step)_k: just the first k factors.
Series finite_pochhammer(Monomial a, long step, long k, long N);

// Quasi-periodicity reduction of the two-sided bracket
//   [z]_m = (z; q^m)_inf (q^m/z; q^m)_inf,   z = sign*q^e.
// Using j(q^m z) = -z^{-1} j(z) (and its inverse) the exponent e is shifted by
// multiples of m into the window (0, m], peeling off a signed power of q:
//   [sign*q^e]_m = mult_sign * q^{mult_exp} * [sign*q^{e'}]_m,   e' in (0, m].
// `reduced` is [sign*q^{e'}]_m as a power series; the multiplier exponent may
// be negative.  For sign = +1 with e divisible by m the bracket is the zero
// series (a value, not an error).
struct BracketReduction {
    int mult_sign;
    long mult_exp;
    Series reduced;
};

BracketReduction bracket(Monomial a, long m, long N);

// Full theta product j(z; q^m) = [z]_m * (q^m; q^m)_inf with the reduction
// multiplier applied.  Raises NegativeExponentResult if the multiplier would
// leave a Laurent term that the series cannot absorb.
Series theta_j(Monomial z, long m, long N);

// Same value kept in the Laurent layer (multiplier unapplied-but-recorded),
// for use inside expression evaluation where negative powers may cancel.
Laurent laurent_theta(Monomial z, long m, long N);

// Shorthands: J_{a,m} = j(q^a; q^m) and J_m = (q^m; q^m)_inf.
Series cap_j(long a, long m, long N);
Series cap_jm(long m, long N);

// Three-parameter product ratio
//   P(a,b,c; q^base) = [ab]_base [bc]_base [ca]_base (q^base;q^base)^2
//                      / ([a]_base [b]_base [c]_base [abc]_base)
// with every bracket put through quasi-periodicity reduction and the net
// multiplier applied.  Raises PoleInSpecialization if a denominator bracket
// is the zero series.
Series p_function(Monomial a, Monomial b, Monomial c, long base, long N);
Laurent laurent_p(Monomial a, Monomial b, Monomial c, long base, long N);

// Overpartition generating function (-q; q)_inf / (q; q)_inf.
Series opgf(long N);

}  // namespace qv
