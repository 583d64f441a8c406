#pragma once

#include <string>
#include <vector>

#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

// Truncated formal power series in q with exact rational coefficients.
//
// A Series of order N stores the coefficients of q^0 .. q^N and represents
// the value "stored polynomial + O(q^{N+1})".  The order is part of the value:
// reading a coefficient beyond it is an error (ReadBeyondOrder), never a
// silent zero.  Binary operations return a result whose order is the minimum
// of the operand orders — the largest prefix both operands determine exactly.
class Series {
  public:
    // Zero series of the given order (order >= 0).
    explicit Series(long order);

    static Series constant(const Rat& c, long order);
    // c * q^e (e >= 0).  An exponent beyond the order simply leaves zero.
    static Series monomial(long e, long order, const Rat& c = Rat(1));

    long order() const { return static_cast<long>(coef_.size()) - 1; }

    // Coefficient of q^n; requires 0 <= n <= order().
    const Rat& at(long n) const;
    void set(long n, const Rat& v);

    bool is_zero() const;
    // Least n with a nonzero coefficient; order()+1 if the series is zero.
    long valuation() const;

    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    friend Series operator*(const Series& f, const Series& g);
    Series operator-() const;
    Series scaled(const Rat& c) const;
    Series plus_const(const Rat& c) const;

    // Multiplicative inverse; requires a nonzero constant term (NonUnit).
    Series inverse() const;

    // f(q^k): coefficient of q^{k*n} is f[n].  Exact, so the result order is
    // order()*k (every coefficient up to there is determined by f).
    Series dilated(long k) const;

    // Arithmetic-progression slice: result[n] = f[m*n + d], 0 <= d < m.
    // Result order = floor((order() - d) / m).
    Series dissected(long m, long d) const;

    // Multiply by q^k (k >= 0).  Exact, so the order grows by k.
    Series shifted_up(long k) const;

    // Drop the factor q^k; requires the first k coefficients to be zero.
    Series shifted_down(long k) const;

    Series truncated(long new_order) const;  // new_order <= order()

    // Equality on the shared prefix: all coefficients up to min(order) agree.
    bool agrees_with(const Series& g) const;

    // First exponent where the shared prefixes differ; -1 if they agree.
    long first_difference(const Series& g) const;

    // Human-readable form, e.g. "1 - q - q^2 + q^5 + ... + O(q^13)".
    std::string str(int max_terms = 12) const;

  private:
    std::vector<Rat> coef_;  // coef_[n] is the coefficient of q^n
};

}  // namespace qv
