#include "qv/pexpand.hpp"

#include "qv/products.hpp"

namespace qv {

long order3(long n_prime) {
    if (n_prime < 1) throw Error("order3 requires a positive modulus");
    if (n_prime % 3 == 0) throw InvalidModulus("3 has no multiplicative order modulo a multiple of 3");
    if (n_prime == 1) return 1;
    long pw = 3 % n_prime;
    for (long k = 1; k <= n_prime; ++k) {
        if (pw == 1) return k;
        pw = (pw * 3) % n_prime;
    }
    throw Error("order3 internal failure");  // unreachable: 3 is a unit mod n_prime
}

namespace {

// Shift e into the window (0, n], returning the number of n's peeled off.
// Each peeled n shifts S(-q^e) by 1, so the caller owes `t` to the constant.
long reduce_exponent(long& e, long n) {
    const long k = floor_div(e - 1, n);
    e -= k * n;
    return k;
}

long pow3(long k) {
    long r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

}  // namespace

PExpansion s_expand(int sign, long m, long n) {
    if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
    if (n < 1) throw Error("base exponent must be >= 1");
    if (m < 1) throw Error("argument exponent must be >= 1");

    PExpansion out;
    // The expansion target is 2S + (n-2m)/n, which is what the product
    // combination below sums to with no leftover constant in the primitive
    // range 0 < m < n; the shift uses the literal m, so for larger m the
    // 2*floor(m/n) from peeling powers of q^n cancels against it.
    out.constant = rat(n - 2 * m, n);
    // Peel whole powers of q^n off the argument first: S(a q^n) = S(a) + 1.
    const long t0 = floor_div(m, n);
    long mp = m - t0 * n;
    out.constant += 2 * t0;
    if (mp == 0) {
        if (sign > 0) throw UndefinedS("S(+q^m; q^n) with m divisible by n is undefined");
        out.constant -= 1;  // 2 * S(-q^{t0*n}; q^n) = 2*t0 - 1, already counted above
        return out;
    }

    // Anchor identity: expanding P(s*q^m, s*q^m, -q^{n-2m}; q^n) by partial
    // fractions gives  2*S(s*q^m) = P - 1/2 + S(-q^{2m}).
    long c_exp = n - 2 * mp;
    reduce_exponent(c_exp, n);  // the product ratio is invariant under q^n shifts of one slot
    out.terms.push_back(PTerm{Rat(1), Monomial{sign, mp}, Monomial{sign, mp}, Monomial{-1, c_exp}, n});
    out.constant -= rat(1, 2);

    // Remaining unknown: w * S(-q^E), starting at E = 2m, w = 1.
    long E = 2 * mp;
    Rat w(1);
    long s3 = 0;
    for (long v = n; v % 3 == 0; v /= 3) ++s3;

    for (long j = 1; j <= s3 + 1; ++j) {
        out.constant += w * reduce_exponent(E, n);
        if (E == n) {  // S(-q^n; q^n) = 1/2
            out.constant += w / 2;
            return out;
        }
        if (2 * E == n) return out;  // S(+-q^{n/2}; q^n) = 0
        if (j == s3 + 1) break;      // 3-part exhausted; the chain is now periodic
        out.terms.push_back(PTerm{w / 3, Monomial{-1, E}, Monomial{-1, E}, Monomial{-1, E}, n});
        out.constant -= w / 3;
        w /= 3;
        E *= 3;
    }

    // Cycle closure: with n' = n / 3^{s3} (coprime to 3) and k = order3(n'),
    // the reduced exponents repeat after k more cubing steps, so
    //   X = sum_{i=1..k} 3^{-i} (P_i - 1 + t_i) + 3^{-k} X
    // solves to X with an extra factor 3^k / (3^k - 1).
    const long k = order3(n / pow3(s3));
    const Rat closure = w * Rat(pow3(k)) / Rat(pow3(k) - 1);
    Rat wi(1);
    for (long i = 1; i <= k; ++i) {
        wi /= 3;
        out.terms.push_back(PTerm{closure * wi, Monomial{-1, E}, Monomial{-1, E}, Monomial{-1, E}, n});
        out.constant -= closure * wi;
        E *= 3;
        out.constant += closure * wi * reduce_exponent(E, n);
    }
    return out;
}

Series evaluate(const PExpansion& exp, long N) {
    Series acc = Series::constant(exp.constant, N);
    for (const PTerm& t : exp.terms)
        acc = acc + p_function(t.a, t.b, t.c, t.base, N).scaled(t.weight);
    return acc;
}

}  // namespace qv
