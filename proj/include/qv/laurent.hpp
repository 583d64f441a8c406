#pragma once

#include <algorithm>

#include "qv/errors.hpp"
#include "qv/series.hpp"

namespace qv {

// Truncated Laurent value: q^lo * body, with an explicit precision window.
//
//   * no nonzero coefficients exist below exponent lo (lo may be negative);
//   * the coefficient of q^{lo+k} is body[k], exact for 0 <= k <= body.order();
//   * nothing is known above hi() = lo + body.order().
//
// The window arithmetic below is what lets theta quasi-periodicity
// multipliers with negative exponents ride through products and quotients and
// cancel before the final truncation back to a power series.
struct Laurent {
    long lo;
    Series body;

    long hi() const { return lo + body.order(); }
    long width() const { return body.order(); }
};

inline Laurent lau_series(const Series& s) { return Laurent{0, s}; }

// c * q^e, window reaching up to exponent e + width.
inline Laurent lau_monomial(long e, long width, const Rat& c = Rat(1)) {
    return Laurent{e, Series::constant(c, width)};
}

inline Laurent lau_add(const Laurent& a, const Laurent& b) {
    const long lo = std::min(a.lo, b.lo);
    const long hi = std::min(a.hi(), b.hi());
    if (hi < lo)
        throw InsufficientPrecision("laurent windows do not overlap under addition");
    Series body(hi - lo);
    for (long e = lo; e <= hi; ++e) {
        Rat v(0);
        if (e >= a.lo && e <= a.hi()) v += a.body.at(e - a.lo);
        if (e >= b.lo && e <= b.hi()) v += b.body.at(e - b.lo);
        body.set(e - lo, v);
    }
    return Laurent{lo, body};
}

inline Laurent lau_neg(const Laurent& a) { return Laurent{a.lo, -a.body}; }

inline Laurent lau_scale(const Laurent& a, const Rat& c) { return Laurent{a.lo, a.body.scaled(c)}; }

inline Laurent lau_sub(const Laurent& a, const Laurent& b) { return lau_add(a, lau_neg(b)); }

inline Laurent lau_mul(const Laurent& a, const Laurent& b) {
    // Window widths: the product is exact out to the smaller operand width.
    return Laurent{a.lo + b.lo, a.body * b.body};
}

inline Laurent lau_inv(const Laurent& a) {
    const long v = a.body.valuation();
    if (v > a.body.order())
        throw PoleInSpecialization("division by a series that is zero to working precision");
    // a = q^{lo+v} * u with u a unit; 1/a = q^{-(lo+v)} * u^{-1}.
    const Series unit = a.body.shifted_down(v);
    return Laurent{-(a.lo + v), unit.inverse()};
}

inline Laurent lau_div(const Laurent& a, const Laurent& b) { return lau_mul(a, lau_inv(b)); }

inline Laurent lau_pow(const Laurent& a, long k) {
    if (k < 0) return lau_pow(lau_inv(a), -k);
    Laurent acc = lau_monomial(0, a.width());
    Laurent base = a;
    long e = k;
    while (e > 0) {
        if (e & 1) acc = lau_mul(acc, base);
        base = lau_mul(base, base);
        e >>= 1;
    }
    // Rebuild the window: squaring `base` past the last use does not shrink
    // what acc legitimately knows, but the loop above already folded widths
    // conservatively, which is fine (never over-claims precision).
    return acc;
}

// Truncate back to an ordinary power series of the requested order.
// Errors if a genuinely negative exponent survives, or if the precision
// window stops short of the requested order.
inline Series lau_to_series(const Laurent& a, long order) {
    for (long e = a.lo; e < 0 && e <= a.hi(); ++e)
        if (a.body.at(e - a.lo) != 0)
            throw NegativeExponentResult("value has a nonzero q^" + std::to_string(e) + " term");
    if (a.hi() < order)
        throw InsufficientPrecision("laurent window ends at q^" + std::to_string(a.hi()) +
                                    " but order " + std::to_string(order) + " was requested");
    Series r(order);
    for (long e = std::max(a.lo, 0L); e <= order; ++e) r.set(e, a.body.at(e - a.lo));
    return r;
}

}  // namespace qv
