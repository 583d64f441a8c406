#include "qv/products.hpp"

#include <cstdlib>

namespace qv {

namespace {

// In-place multiply of the coefficient table by (1 - s*q^e), e >= 1 assumed
// handled by caller for e == 0.  Descending update keeps it O(N) per factor.
void mul_binomial(Series& f, int s, long e) {
    const long N = f.order();
    for (long k = N; k >= e; --k) {
        const Rat& src = f.at(k - e);
        if (src == 0) continue;
        if (s > 0)
            f.set(k, f.at(k) - src);
        else
            f.set(k, f.at(k) + src);
    }
}

}  // namespace

Series pochhammer(Monomial a, long step, long N) {
    if (a.exp < 0) throw Error("pochhammer base exponent must be >= 0");
    if (step < 1) throw Error("pochhammer step must be >= 1");
    Series f = Series::constant(Rat(1), N);
    for (long j = 0;; ++j) {
        const long e = a.exp + step * j;
        if (e > N) break;
        if (e == 0) {
            // factor (1 - sign): zero for +1, constant 2 for -1
            f = f.scaled(a.sign > 0 ? Rat(0) : Rat(2));
            continue;
        }
        mul_binomial(f, a.sign, e);
    }
    return f;
}

Series finite_pochhammer(Monomial a, long step, long k, long N) {
    if (a.exp < 0) throw Error("pochhammer base exponent must be >= 0");
    if (step < 1) throw Error("pochhammer step must be >= 1");
    if (k < 0) throw Error("factor count must be >= 0");
    Series f = Series::constant(Rat(1), N);
    for (long j = 0; j < k; ++j) {
        const long e = a.exp + step * j;
        if (e > N) break;  // remaining factors are 1 + O(q^{N+1})
        if (e == 0) {
            f = f.scaled(a.sign > 0 ? Rat(0) : Rat(2));
            continue;
        }
        mul_binomial(f, a.sign, e);
    }
    return f;
}

BracketReduction bracket(Monomial a, long m, long N) {
    if (m < 1) throw Error("bracket modulus must be >= 1");
    // Shift e into (0, m]: e = e' + k*m with e' in [1, m].
    const long k = floor_div(a.exp - 1, m);
    const long ep = a.exp - k * m;
    // Iterating j(q^m z) = -z^{-1} j(z) k times (k of either sign) peels off
    //   (-1)^k sign^k q^{-(m*k*(k-1)/2 + k*e')}.
    const bool k_odd = (floor_mod(k, 2) == 1);
    BracketReduction r{k_odd ? -a.sign : 1, -(m * (k * (k - 1) / 2) + k * ep), Series(N)};
    if (a.sign > 0 && ep == m) {
        // (q^m; q^m)(1; q^m): the second factor starts with (1-1) = 0.
        return r;  // reduced stays the zero series
    }
    // [sign*q^{e'}]_m = (sign*q^{e'}; q^m)(sign*q^{m-e'}; q^m)
    Series f = pochhammer(Monomial{a.sign, ep}, m, N);
    r.reduced = f * pochhammer(Monomial{a.sign, m - ep}, m, N);
    return r;
}

Laurent laurent_theta(Monomial z, long m, long N) {
    BracketReduction br = bracket(z, m, N);
    Series body = br.reduced * cap_jm(m, N);
    if (br.mult_sign < 0) body = -body;
    return Laurent{br.mult_exp, body};
}

Series theta_j(Monomial z, long m, long N) {
    Laurent v = laurent_theta(z, m, N + std::labs(bracket(z, m, 0).mult_exp));
    return lau_to_series(v, N);
}

Series cap_j(long a, long m, long N) { return theta_j(Monomial{1, a}, m, N); }

Series cap_jm(long m, long N) { return pochhammer(Monomial{1, m}, m, N); }

Laurent laurent_p(Monomial a, Monomial b, Monomial c, long base, long N) {
    const Monomial abc = a * b * c;
    // Working width: enough that the net multiplier exponent cannot push the
    // window back below the requested order.
    long pad = 0;
    for (const Monomial& t : {a * b, b * c, c * a, a, b, c, abc})
        pad += std::labs(bracket(t, base, 0).mult_exp);
    const long W = N + pad;

    const BracketReduction den_a = bracket(a, base, W);
    const BracketReduction den_b = bracket(b, base, W);
    const BracketReduction den_c = bracket(c, base, W);
    const BracketReduction den_abc = bracket(abc, base, W);
    for (const BracketReduction* d : {&den_a, &den_b, &den_c, &den_abc})
        if (d->reduced.is_zero())
            throw PoleInSpecialization("a denominator bracket vanishes for these arguments");

    const BracketReduction num_ab = bracket(a * b, base, W);
    const BracketReduction num_bc = bracket(b * c, base, W);
    const BracketReduction num_ca = bracket(c * a, base, W);

    auto as_lau = [](const BracketReduction& br) {
        return Laurent{br.mult_exp, br.mult_sign < 0 ? -br.reduced : br.reduced};
    };

    const Series jm = cap_jm(base, W);
    Laurent num = lau_mul(lau_mul(as_lau(num_ab), as_lau(num_bc)), as_lau(num_ca));
    num = lau_mul(num, lau_series(jm * jm));
    Laurent den = lau_mul(lau_mul(as_lau(den_a), as_lau(den_b)),
                          lau_mul(as_lau(den_c), as_lau(den_abc)));
    return lau_div(num, den);
}

Series p_function(Monomial a, Monomial b, Monomial c, long base, long N) {
    return lau_to_series(laurent_p(a, b, c, base, N), N);
}

Series opgf(long N) {
    return pochhammer(Monomial{-1, 1}, 1, N) * pochhammer(Monomial{1, 1}, 1, N).inverse();
}

}  // namespace qv
