#include <chrono>

#include "qv/pexpand.hpp"
#include "qv/products.hpp"
#include "qv/qid.hpp"
#include "qv/ranks.hpp"

namespace qv {

namespace {

[[noreturn]] void eval_fail(const Expr& e, const std::string& msg) {
    throw Error("line " + std::to_string(e.line) + ", col " + std::to_string(e.col) + ": " + msg);
}

Laurent eval_call(const Expr& e, long W) {
    const auto& a = e.args;
    if (e.call == "J") return laurent_theta(Monomial{1, a[0].num}, a[1].num, W);
    if (e.call == "Jm") return lau_series(cap_jm(a[0].num, W));
    if (e.call == "jtheta") return laurent_theta(a[0].m, a[1].num, W);
    if (e.call == "poch") {
        if (a[0].m.exp < 0) eval_fail(e, "poch requires a nonnegative exponent");
        return lau_series(pochhammer(a[0].m, a[1].num, W));
    }
    if (e.call == "P") return laurent_p(a[0].m, a[1].m, a[2].m, a[3].num, W);
    if (e.call == "S") return lau_series(s_value(SSeriesSpec{a[0].m.sign, a[0].m.exp, a[1].num}, W));
    if (e.call == "AL") return appell_lerch_laurent(a[0].m, a[1].num, a[2].m, W);
    if (e.call == "g2") return lau_series(g2(a[0].m, a[1].num, W));
    if (e.call == "omega") return lau_series(mock_omega(W));
    if (e.call == "rho") return lau_series(mock_rho(W));
    if (e.call == "OPGF") return lau_series(opgf(W));
    if (e.call == "RBAR") return lau_series(rbar_spec(static_cast<int>(a[0].num), W));
    if (e.call == "RGF") return lau_series(residue_gf(static_cast<int>(a[0].num), W));
    if (e.call == "RDISS")
        return lau_series(
            rank_dissection(static_cast<int>(a[0].num), static_cast<int>(a[1].num), W));
    eval_fail(e, "unknown builtin '" + e.call + "'");
}

}  // namespace

Laurent eval_expr(const Expr& e, long W) {
    try {
        switch (e.kind) {
            case Expr::Kind::Number: return lau_series(Series::constant(Rat(e.number), W));
            case Expr::Kind::Q: return lau_monomial(1, W);
            case Expr::Kind::Neg: return lau_neg(eval_expr(*e.a, W));
            case Expr::Kind::Add: return lau_add(eval_expr(*e.a, W), eval_expr(*e.b, W));
            case Expr::Kind::Sub: return lau_sub(eval_expr(*e.a, W), eval_expr(*e.b, W));
            case Expr::Kind::Mul: return lau_mul(eval_expr(*e.a, W), eval_expr(*e.b, W));
            case Expr::Kind::Div: return lau_div(eval_expr(*e.a, W), eval_expr(*e.b, W));
            case Expr::Kind::Pow: return lau_pow(eval_expr(*e.a, W), e.exponent);
            case Expr::Kind::Call: return eval_call(e, W);
            case Expr::Kind::Lambert: return lau_series(lambert_sum(e.lambert, W));
        }
    } catch (const InsufficientPrecision&) {
        throw;  // handled by the retry loop, location is irrelevant
    } catch (const SyntaxError&) {
        throw;
    } catch (const Error& err) {
        // Attach the source position of the outermost expression that failed.
        if (std::string(err.what()).rfind("line ", 0) == 0) throw;
        eval_fail(e, err.what());
    }
    eval_fail(e, "unhandled expression kind");
}

Series eval_to_order(const Expr& e, long N) {
    // Leaves are evaluated out to N + slack; quotients and negative-exponent
    // multipliers can eat into the window, so widen geometrically on demand.
    for (long slack = 16; slack <= 256; slack *= 2) {
        try {
            return lau_to_series(eval_expr(e, N + slack), N);
        } catch (const InsufficientPrecision&) {
            if (slack * 2 > 256) throw;
        }
    }
    throw InsufficientPrecision("requested order not reachable within retry budget");
}

VerifyOutcome verify(const Assertion& a, long order_override) {
    VerifyOutcome out;
    out.order = order_override > 0 ? order_override : a.order;
    const auto t0 = std::chrono::steady_clock::now();
    bool holds = false;
    bool evaluated = false;
    for (long slack = 16; slack <= 256 && !evaluated; slack *= 2) {
        try {
            const Laurent lhs = eval_expr(*a.lhs, out.order + slack);
            const Laurent rhs = eval_expr(*a.rhs, out.order + slack);
            const Laurent diff = lau_sub(lhs, rhs);
            if (diff.hi() < out.order)
                throw InsufficientPrecision("difference window too short");
            evaluated = true;
            holds = true;
            for (long e = diff.lo; e <= std::min(diff.hi(), out.order); ++e) {
                const Rat& c = diff.body.at(e - diff.lo);
                if (c != 0) {
                    holds = false;
                    out.first_diff = e;
                    out.diff_coeff = c;
                    break;
                }
            }
        } catch (const InsufficientPrecision& err) {
            if (slack * 2 > 256) {
                out.status = VerifyStatus::Error;
                out.message = err.what();
            }
        } catch (const Error& err) {
            out.status = VerifyStatus::Error;
            out.message = err.what();
            break;
        }
    }
    if (evaluated) {
        if (a.expect_discrepancy)
            out.status = holds ? VerifyStatus::UnexpectedPass : VerifyStatus::KnownDiscrepancy;
        else
            out.status = holds ? VerifyStatus::Pass : VerifyStatus::Fail;
        if (!holds && !a.note.empty()) out.message = a.note;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

}  // namespace qv
