#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reading a series coefficient beyond the tracked truncation order (or below 0).
struct ReadBeyondOrder : Error {
    using Error::Error;
};

// Attempt to invert a series whose constant term is zero.
struct NonUnit : Error {
    using Error::Error;
};

// A theta/bracket quasi-periodicity multiplier would leave a q^{negative} term
// in a context that must produce an ordinary power series.
struct NegativeExponentResult : Error {
    using Error::Error;
};

// A product specialization places a zero theta-bracket in a denominator.
struct PoleInSpecialization : Error {
    using Error::Error;
};

// A Lambert-type sum hits a term whose denominator vanishes identically.
struct PoleAtIndex : Error {
    long index;
    explicit PoleAtIndex(long n)
        : Error("denominator vanishes at summation index n = " + std::to_string(n)), index(n) {}
};

// S(+q^m; q^n) with m divisible by n: the defining term 1/(1-q^0) is undefined.
struct UndefinedS : Error {
    using Error::Error;
};

// Multiplicative order of 3 requested modulo a multiple of 3.
struct InvalidModulus : Error {
    using Error::Error;
};

// Script parse failure, with 1-based source position.
struct SyntaxError : Error {
    int line, col;
    SyntaxError(int line_, int col_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
};

// Internal signal: a Laurent-layer combination lost so much of its precision
// window that the requested order is not covered; the evaluator retries with
// more working precision, and surfaces this only if retries are exhausted.
struct InsufficientPrecision : Error {
    using Error::Error;
};

}  // namespace qv
