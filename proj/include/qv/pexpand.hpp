#pragma once

#include <vector>

#include "qv/lambert.hpp"
#include "qv/monomial.hpp"
#include "qv/series.hpp"

namespace qv {

// Multiplicative order of 3 modulo n_prime (least k >= 1 with 3^k == 1).
// Requires n_prime >= 1 and 3 not dividing n_prime (InvalidModulus);
// order3(1) == 1 by convention.
long order3(long n_prime);

// One weighted product-ratio term: weight * P(a, b, c; q^base).
struct PTerm {
    Rat weight;
    Monomial a, b, c;
    long base;
};

// An exact identity
//   2*S(sign*q^m; q^n) + (n - 2m)/n = sum_j weight_j * P_j + constant.
// For primitive arguments (0 < m < n) the constant comes out 0 and the
// right-hand side is a pure weighted sum of product ratios.
struct PExpansion {
    std::vector<PTerm> terms;
    Rat constant;
};

// Expand 2*S(sign*q^m; q^n) + (n - 2m)/n into product ratios by iterating the cubing
// relation  S(-q^e) = (P(-q^e,-q^e,-q^e; q^n) - 1 + S(-q^{3e})) / 3  on the
// auxiliary exponent chain e, 3e, 9e, ... (reduced mod n as it goes):
//   * if some 3^l * 4m == 0 (mod n) the chain hits a closed terminal value
//     and stops after l steps;
//   * otherwise the reduced exponents become periodic with period
//     k = order3(n / 3^{v_3(n)}) and the cycle is closed by solving the
//     resulting linear relation for the repeated S-value.
// Requires sign*q^m to give a defined S (UndefinedS otherwise).
PExpansion s_expand(int sign, long m, long n);

// Sum the expansion numerically at truncation order N; for an expansion of
// S(sign*q^m; q^n) this equals 2*S + (n - 2m)/n as a series to order N.
Series evaluate(const PExpansion& exp, long N);

}  // namespace qv
