#pragma once

#include <gmpxx.h>

#include <string>

namespace qv {

// Exact rational coefficients. GMP's canonical form keeps gcd(num, den) = 1
// and den > 0, so equality is plain comparison.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qv
