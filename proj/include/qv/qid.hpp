#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qv/lambert.hpp"
#include "qv/laurent.hpp"
#include "qv/monomial.hpp"

namespace qv {

// Expression AST for identity scripts.
//
// Grammar (operators tightest-first: ^, unary -, * /, + -):
//
//   script    := { assertion }
//   assertion := "assert" expr "==" expr "to" INT [ "expect" "discrepancy" STRING ] ";"
//   expr      := term { ("+" | "-") term }
//   term      := factor { ("*" | "/") factor }
//   factor    := [ "-" ] power
//   power     := atom [ "^" sint ]
//   atom      := INT | "q" | NAME "(" [ arg { ("," | ";") arg } ] ")"
//              | "L" "{" field { "," field } "}" | "(" expr ")"
//   arg       := [ "-" ] ( INT | "q" [ "^" sint ] )
//   field     := NAME "=" ( sint | "[" [ sint { "," sint } ] "]" )
//   sint      := [ "-" ] INT
//
// "#" starts a comment running to end of line.  There is no rational-literal
// token: constants like 2/3 are a division of integer literals, which keeps
// "J(1,6)^6/6" unambiguous.
struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// A builtin-call argument: either a signed power of q or a plain integer.
// "-1"/"1" in a monomial position means the sign-only monomial -+q^0.
struct CallArg {
    bool is_mono = false;
    Monomial m;
    long num = 0;
};

struct Expr {
    enum class Kind { Number, Q, Neg, Add, Sub, Mul, Div, Pow, Call, Lambert };
    Kind kind;
    long number = 0;             // Number
    ExprPtr a, b;                // operands (Neg/Pow use `a` only)
    long exponent = 0;           // Pow
    std::string call;            // Call: builtin name
    std::vector<CallArg> args;   // Call
    LambertSpec lambert;         // Lambert
    int line = 0, col = 0;
};

struct Assertion {
    ExprPtr lhs, rhs;
    long order = 0;
    bool expect_discrepancy = false;
    std::string note;  // the discrepancy annotation, if any
    int line = 0;
    std::string id;    // "<file>:<index>"
};

struct Script {
    std::string source_name;
    std::vector<Assertion> assertions;
};

Script parse_script(const std::string& text, const std::string& source_name = "<input>");

// Parse a single standalone expression (no trailing input allowed); used for
// command-line `series`/`dissect` inputs.
ExprPtr parse_expression(const std::string& text, const std::string& source_name = "<input>");

std::string pretty(const Expr& e);
std::string pretty(const Assertion& a);

bool structurally_equal(const Expr& x, const Expr& y);

ExprPtr clone(const Expr& e);

// --- evaluation ---------------------------------------------------------

// Evaluate in the Laurent layer with working order W (every leaf is computed
// out to q^W, so combination never runs the window below W minus the shifts).
Laurent eval_expr(const Expr& e, long W);

// Evaluate to an ordinary power series exact through q^N, growing the working
// order geometrically if window tracking reports a shortfall.
Series eval_to_order(const Expr& e, long N);

enum class VerifyStatus { Pass, Fail, KnownDiscrepancy, UnexpectedPass, Error };

struct VerifyOutcome {
    VerifyStatus status = VerifyStatus::Error;
    long order = 0;
    long first_diff = -1;   // exponent of the first differing coefficient
    Rat diff_coeff;         // lhs - rhs there
    std::string message;
    double elapsed_ms = 0;
};

// Check one assertion to its stated order (or order_override if > 0).
VerifyOutcome verify(const Assertion& a, long order_override = 0);

// True for statuses that should count as failures for exit-code purposes.
inline bool is_failure(VerifyStatus s) {
    return s == VerifyStatus::Fail || s == VerifyStatus::UnexpectedPass || s == VerifyStatus::Error;
}

const char* status_name(VerifyStatus s);

}  // namespace qv
