#include "qv/series.hpp"

#include <sstream>

namespace qv {

Series::Series(long order) {
    if (order < 0) throw Error("series order must be >= 0");
    coef_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

Series Series::constant(const Rat& c, long order) {
    Series s(order);
    s.coef_[0] = c;
    return s;
}

Series Series::monomial(long e, long order, const Rat& c) {
    if (e < 0) throw Error("monomial exponent must be >= 0 in a power series");
    Series s(order);
    if (e <= order) s.coef_[static_cast<size_t>(e)] = c;
    return s;
}

const Rat& Series::at(long n) const {
    if (n < 0 || n > order())
        throw ReadBeyondOrder("coefficient q^" + std::to_string(n) +
                              " requested from a series of order " + std::to_string(order()));
    return coef_[static_cast<size_t>(n)];
}

void Series::set(long n, const Rat& v) {
    if (n < 0 || n > order())
        throw ReadBeyondOrder("coefficient q^" + std::to_string(n) +
                              " set on a series of order " + std::to_string(order()));
    coef_[static_cast<size_t>(n)] = v;
}

bool Series::is_zero() const {
    for (const Rat& c : coef_)
        if (c != 0) return false;
    return true;
}

long Series::valuation() const {
    for (size_t n = 0; n < coef_.size(); ++n)
        if (coef_[n] != 0) return static_cast<long>(n);
    return order() + 1;
}

Series operator+(const Series& f, const Series& g) {
    Series r(std::min(f.order(), g.order()));
    for (long n = 0; n <= r.order(); ++n)
        r.coef_[static_cast<size_t>(n)] =
            f.coef_[static_cast<size_t>(n)] + g.coef_[static_cast<size_t>(n)];
    return r;
}

Series operator-(const Series& f, const Series& g) {
    Series r(std::min(f.order(), g.order()));
    for (long n = 0; n <= r.order(); ++n)
        r.coef_[static_cast<size_t>(n)] =
            f.coef_[static_cast<size_t>(n)] - g.coef_[static_cast<size_t>(n)];
    return r;
}

Series operator*(const Series& f, const Series& g) {
    const long N = std::min(f.order(), g.order());
    Series r(N);
    // Cauchy product; skipping zero multiplicands matters a lot for the
    // sparse factors that theta products are built from.
    for (long i = 0; i <= N; ++i) {
        const Rat& a = f.coef_[static_cast<size_t>(i)];
        if (a == 0) continue;
        for (long j = 0; i + j <= N; ++j) {
            const Rat& b = g.coef_[static_cast<size_t>(j)];
            if (b == 0) continue;
            r.coef_[static_cast<size_t>(i + j)] += a * b;
        }
    }
    return r;
}

Series Series::operator-() const {
    Series r(order());
    for (size_t n = 0; n < coef_.size(); ++n) r.coef_[n] = -coef_[n];
    return r;
}

Series Series::scaled(const Rat& c) const {
    Series r(order());
    for (size_t n = 0; n < coef_.size(); ++n) r.coef_[n] = coef_[n] * c;
    return r;
}

Series Series::plus_const(const Rat& c) const {
    Series r = *this;
    r.coef_[0] += c;
    return r;
}

Series Series::inverse() const {
    if (coef_[0] == 0) throw NonUnit("cannot invert a series with zero constant term");
    Series b(order());
    const Rat inv0 = Rat(1) / coef_[0];
    b.coef_[0] = inv0;
    // (sum a_k q^k)(sum b_k q^k) = 1  =>  b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
    for (long n = 1; n <= order(); ++n) {
        Rat acc(0);
        for (long k = 1; k <= n; ++k) {
            const Rat& a = coef_[static_cast<size_t>(k)];
            if (a == 0) continue;
            acc += a * b.coef_[static_cast<size_t>(n - k)];
        }
        b.coef_[static_cast<size_t>(n)] = -inv0 * acc;
    }
    return b;
}

Series Series::dilated(long k) const {
    if (k <= 0) throw Error("dilation step must be >= 1");
    Series r(order() * k);
    for (long n = 0; n <= order(); ++n) r.coef_[static_cast<size_t>(n * k)] = coef_[static_cast<size_t>(n)];
    return r;
}

Series Series::dissected(long m, long d) const {
    if (m <= 0 || d < 0 || d >= m) throw Error("dissection requires 0 <= residue < modulus");
    if (order() < d) throw Error("series order too small for requested dissection residue");
    Series r((order() - d) / m);
    for (long n = 0; n <= r.order(); ++n) r.coef_[static_cast<size_t>(n)] = coef_[static_cast<size_t>(m * n + d)];
    return r;
}

Series Series::shifted_up(long k) const {
    if (k < 0) throw Error("shift amount must be >= 0");
    Series r(order() + k);
    for (long n = 0; n <= order(); ++n) r.coef_[static_cast<size_t>(n + k)] = coef_[static_cast<size_t>(n)];
    return r;
}

Series Series::shifted_down(long k) const {
    if (k < 0) throw Error("shift amount must be >= 0");
    if (k > order()) throw Error("cannot shift a series below its full length");
    for (long n = 0; n < k; ++n)
        if (coef_[static_cast<size_t>(n)] != 0)
            throw NegativeExponentResult("q^" + std::to_string(n) + " coefficient is nonzero; dividing by q^" +
                                         std::to_string(k) + " would leave a Laurent term");
    Series r(order() - k);
    for (long n = 0; n <= r.order(); ++n) r.coef_[static_cast<size_t>(n)] = coef_[static_cast<size_t>(n + k)];
    return r;
}

Series Series::truncated(long new_order) const {
    if (new_order > order()) throw ReadBeyondOrder("cannot extend a series by truncation");
    Series r(new_order);
    for (long n = 0; n <= new_order; ++n) r.coef_[static_cast<size_t>(n)] = coef_[static_cast<size_t>(n)];
    return r;
}

bool Series::agrees_with(const Series& g) const { return first_difference(g) < 0; }

long Series::first_difference(const Series& g) const {
    const long N = std::min(order(), g.order());
    for (long n = 0; n <= N; ++n)
        if (coef_[static_cast<size_t>(n)] != g.coef_[static_cast<size_t>(n)]) return n;
    return -1;
}

std::string Series::str(int max_terms) const {
    std::ostringstream out;
    int printed = 0;
    bool truncated_terms = false;
    for (long n = 0; n <= order(); ++n) {
        const Rat& c = coef_[static_cast<size_t>(n)];
        if (c == 0) continue;
        if (printed == max_terms) {
            truncated_terms = true;
            break;
        }
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (printed == 0)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        const bool unit = (mag == 1);
        if (n == 0)
            out << mag.get_str();
        else {
            if (!unit) out << mag.get_str() << "*";
            out << "q";
            if (n > 1) out << "^" << n;
        }
        ++printed;
    }
    if (printed == 0) out << "0";
    if (truncated_terms) out << " + ...";
    out << " + O(q^" << order() + 1 << ")";
    return out.str();
}

}  // namespace qv
