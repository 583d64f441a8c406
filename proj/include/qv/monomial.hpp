#pragma once

#include "qv/errors.hpp"

namespace qv {

// Signed power of q: sign * q^exp with sign in {+1, -1}.  The exponent may be
// negative; operations that require nonnegative exponents check explicitly.
struct Monomial {
    int sign = 1;
    long exp = 0;

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{a.sign * b.sign, a.exp + b.exp};
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.sign == b.sign && a.exp == b.exp;
    }
};

inline Monomial mono(int sign, long exp) {
    if (sign != 1 && sign != -1) throw Error("monomial sign must be +1 or -1");
    return Monomial{sign, exp};
}

// Floor division/modulo (C++ '/' truncates toward zero, which is wrong for
// the negative exponents that theta reduction has to handle).
inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

}  // namespace qv
