// The assertion script language: lexing/parsing diagnostics, the canonical
// printer, structural comparison, expression evaluation, and the verdict
// logic of verify().

#include <string>
#include <vector>

#include "doctest.h"
#include "qv/lambert.hpp"
#include "qv/products.hpp"
#include "qv/qid.hpp"
#include "qv/ranks.hpp"

using namespace qv;

namespace {

std::string round_trip(const std::string& text) { return pretty(*parse_expression(text)); }

void check_coeffs(const Series& s, const std::vector<long>& expect) {
    REQUIRE(s.order() + 1 >= static_cast<long>(expect.size()));
    for (size_t n = 0; n < expect.size(); ++n)
        CHECK(s.at(static_cast<long>(n)) == Rat(expect[n]));
}

}  // namespace

TEST_CASE("printer respects precedence") {
    CHECK(round_trip("1+2*3^2") == "1 + 2*3^2");
    CHECK(round_trip("(1+2)*3") == "(1 + 2)*3");
    CHECK(round_trip("2-3-4") == "2 - 3 - 4");
    CHECK(round_trip("2-(3-4)") == "2 - (3 - 4)");
    CHECK(round_trip("-q^2") == "-q^2");
    CHECK(round_trip("1/6") == "1/6");
    CHECK(round_trip("1/(2*3)") == "1/(2*3)");
    CHECK(round_trip("Jm(1)^3") == "Jm(1)^3");
    CHECK(round_trip("q^-1*q^2") == "q^-1*q^2");
    CHECK(round_trip("2*(q + 1)^2") == "2*(q + 1)^2");
}

TEST_CASE("printer separates argument groups") {
    // Monomial and integer argument runs are separated by ';', members of a
    // run by ','.
    CHECK(round_trip("P(q,q,-q,3)") == "P(q, q, -q; 3)");
    CHECK(round_trip("AL(q, 6, -q)") == "AL(q; 6; -q)");
    CHECK(round_trip("S(-q^2; 9)") == "S(-q^2; 9)");
    CHECK(round_trip("jtheta(-q; 2)") == "jtheta(-q; 2)");
    CHECK(round_trip("J(2, 5)") == "J(2, 5)");
    CHECK(round_trip("OPGF()") == "OPGF()");
    CHECK(round_trip("S(1; 4)") == "S(1; 4)");
    CHECK(round_trip("S(-1; 4)") == "S(-1; 4)");
}

TEST_CASE("lambert literal round trip") {
    CHECK(round_trip("L{A=1, B=1, den=-1, D=3}") == "L{A=1, B=1, den=-1, D=3}");
    CHECK(round_trip("L{alt=1, A=9, den=-1, D=9, E=3, pow=2, excl=[0, 1]}") ==
          "L{alt=1, A=9, den=-1, D=9, E=3, pow=2, excl=[0, 1]}");
    // Default-valued fields are omitted on output.
    CHECK(round_trip("L{A=1, B=0, C=0, den=-1, D=3, E=0, pow=1}") == "L{A=1, den=-1, D=3}");
}

TEST_CASE("lambert literal validation") {
    CHECK_THROWS_AS(parse_expression("L{den=-1, D=3}"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("L{A=1, D=3, den=2}"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("L{A=1, D=3, den=-1, pow=3}"), SyntaxError);
    try {
        parse_expression("L{A=1, D=3, den=-1, zz=2}");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("unknown field 'zz'") != std::string::npos);
    }
}

TEST_CASE("argument arity and kind checks") {
    try {
        parse_expression("J(1)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("takes 2 arguments") != std::string::npos);
    }
    try {
        parse_expression("S(2; 3)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("argument 1 of 'S'") != std::string::npos);
    }
    try {
        parse_expression("J(q, 3)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("argument 1 of 'J'") != std::string::npos);
    }
    try {
        parse_expression("foo(1)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("unknown builtin 'foo'") != std::string::npos);
    }
}

TEST_CASE("syntax diagnostics carry positions") {
    try {
        parse_script("assert q == q to ;", "t.qid");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 18);
        CHECK(std::string(e.what()).find("expected an integer (found ';')") != std::string::npos);
    }
    try {
        parse_expression("@");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 1);
        CHECK(std::string(e.what()).find("unexpected character '@'") != std::string::npos);
    }
    try {
        parse_script("# header\n\nassert q == q to 5;\nassert p == q to 5;");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("unknown builtin 'p'") != std::string::npos);
    }
    try {
        parse_expression("q + 1 extra");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("expected end of expression") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_script("assert 1 == 1 to 5"), SyntaxError);   // missing ';'
    CHECK_THROWS_AS(parse_script("assrt 1 == 1 to 5;"), SyntaxError);   // bad keyword
    CHECK_THROWS_AS(parse_script("assert \"x == 1 to 5;"), SyntaxError);  // unterminated string
}

TEST_CASE("script structure and assertion identities") {
    const Script sc = parse_script(
        "# two statements\n"
        "assert 1 + 1 == 2 to 8;\n"
        "\n"
        "assert q == q to 12 expect discrepancy \"placeholder\";\n",
        "demo.qid");
    CHECK(sc.source_name == "demo.qid");
    REQUIRE(sc.assertions.size() == 2);
    CHECK(sc.assertions[0].id == "demo.qid:1");
    CHECK(sc.assertions[0].line == 2);
    CHECK(sc.assertions[0].order == 8);
    CHECK_FALSE(sc.assertions[0].expect_discrepancy);
    CHECK(sc.assertions[1].id == "demo.qid:2");
    CHECK(sc.assertions[1].line == 4);
    CHECK(sc.assertions[1].expect_discrepancy);
    CHECK(sc.assertions[1].note == "placeholder");
    CHECK(pretty(sc.assertions[0]) == "assert 1 + 1 == 2 to 8;");
    CHECK(pretty(sc.assertions[1]) == "assert q == q to 12 expect discrepancy \"placeholder\";");
}

TEST_CASE("structural comparison and cloning") {
    const ExprPtr a = parse_expression("P(q, q, -q; 3) + 1/2");
    const ExprPtr b = parse_expression("P(q; q; -q, 3) + 1/2");  // separators interchangeable
    const ExprPtr c = parse_expression("P(q, q, -q; 5) + 1/2");
    CHECK(structurally_equal(*a, *b));
    CHECK_FALSE(structurally_equal(*a, *c));
    const ExprPtr d = clone(*a);
    CHECK(structurally_equal(*a, *d));

    const ExprPtr l1 = parse_expression("L{A=1, den=-1, D=3, excl=[0]}");
    const ExprPtr l2 = parse_expression("L{A=1, den=-1, D=3}");
    CHECK(structurally_equal(*l1, *clone(*l1)));
    CHECK_FALSE(structurally_equal(*l1, *l2));
}

TEST_CASE("evaluation of arithmetic and leaves") {
    check_coeffs(eval_to_order(*parse_expression("OPGF()"), 6), {1, 2, 4, 8, 14, 24, 40});
    check_coeffs(eval_to_order(*parse_expression("Jm(1)"), 8), {1, -1, -1, 0, 0, 1, 0, 1, 0});
    check_coeffs(eval_to_order(*parse_expression("1/Jm(1)"), 10),
                 {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    {
        const Series s = eval_to_order(*parse_expression("1/6"), 0);
        CHECK(s.order() == 0);
        CHECK(s.at(0) == rat(1, 6));
    }
    {
        const Series s = eval_to_order(*parse_expression("q^-1*q^2"), 5);
        CHECK(s.first_difference(Series::monomial(1, 5)) == -1);
    }
    {
        const Series s = eval_to_order(*parse_expression("-5"), 3);
        CHECK(s.at(0) == Rat(-5));
    }
    {
        const Series one = eval_to_order(*parse_expression("q^0"), 4);
        CHECK(one.first_difference(Series::constant(Rat(1), 4)) == -1);
    }
    {
        const Series cube = eval_to_order(*parse_expression("(1 + q)^3"), 6);
        const Series direct = eval_to_order(*parse_expression("(1 + q)*(1 + q)*(1 + q)"), 6);
        CHECK(cube.first_difference(direct) == -1);
        const Series inv = eval_to_order(*parse_expression("Jm(1)^-1"), 10);
        check_coeffs(inv, {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    }
    CHECK_THROWS_AS(eval_to_order(*parse_expression("q^-1"), 5), NegativeExponentResult);
}

TEST_CASE("evaluation errors carry source positions") {
    try {
        eval_to_order(*parse_expression("P(q, q, q; 3)"), 10);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 1, col 1:") != std::string::npos);
    }
    try {
        eval_to_order(*parse_expression("1 + poch(q^-2, 1)"), 10);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 1, col 5:") != std::string::npos);
    }
}

TEST_CASE("builtin dispatch matches the library") {
    const long N = 14;
    CHECK(eval_to_order(*parse_expression("S(-q; 3)"), N)
              .first_difference(s_value(SSeriesSpec{-1, 1, 3}, N)) == -1);
    CHECK(eval_to_order(*parse_expression("S(-1; 3)"), N)
              .first_difference(Series::constant(rat(-1, 2), N)) == -1);
    CHECK(eval_to_order(*parse_expression("P(q, q, -q; 3)"), N)
              .first_difference(p_function(Monomial{1, 1}, Monomial{1, 1}, Monomial{-1, 1}, 3, N)) ==
          -1);
    CHECK(eval_to_order(*parse_expression("jtheta(-q; 2)"), N)
              .first_difference(theta_j(Monomial{-1, 1}, 2, N)) == -1);
    CHECK(eval_to_order(*parse_expression("J(2, 5)"), N)
              .first_difference(theta_j(Monomial{1, 2}, 5, N)) == -1);
    CHECK(eval_to_order(*parse_expression("Jm(3)"), N).first_difference(cap_jm(3, N)) == -1);
    CHECK(eval_to_order(*parse_expression("poch(-q, 1)"), N)
              .first_difference(pochhammer(Monomial{-1, 1}, 1, N)) == -1);
    CHECK(eval_to_order(*parse_expression("omega()"), N).first_difference(mock_omega(N)) == -1);
    CHECK(eval_to_order(*parse_expression("rho()"), N).first_difference(mock_rho(N)) == -1);
    CHECK(eval_to_order(*parse_expression("g2(-q; 3)"), N)
              .first_difference(g2(Monomial{-1, 1}, 3, N)) == -1);
    CHECK(eval_to_order(*parse_expression("AL(q; 6; q^2)"), N)
              .first_difference(appell_lerch(Monomial{1, 1}, 6, Monomial{1, 2}, N)) == -1);
    CHECK(eval_to_order(*parse_expression("L{A=1, B=1, den=-1, D=3}"), N)
              .first_difference(lambert_sum(LambertSpec{false, 1, 1, 0, -1, 3, 0, 1, {}}, N)) ==
          -1);
    const long M = 10;
    CHECK(eval_to_order(*parse_expression("RBAR(2)"), M).first_difference(rbar_spec(2, M)) == -1);
    CHECK(eval_to_order(*parse_expression("RGF(1)"), M).first_difference(residue_gf(1, M)) == -1);
    CHECK(eval_to_order(*parse_expression("RDISS(1, 2)"), M)
              .first_difference(rank_dissection(1, 2, M)) == -1);
}

TEST_CASE("verify verdicts") {
    {
        const Script sc = parse_script("assert Jm(1)*OPGF() == poch(-q, 1) to 30;", "v.qid");
        const VerifyOutcome o = verify(sc.assertions[0]);
        CHECK(o.status == VerifyStatus::Pass);
        CHECK(o.order == 30);
        CHECK(o.first_diff == -1);
        CHECK(o.elapsed_ms >= 0);
        CHECK_FALSE(is_failure(o.status));
    }
    {
        const Script sc = parse_script("assert OPGF() == OPGF() + q^5 to 30;", "v.qid");
        const VerifyOutcome o = verify(sc.assertions[0]);
        CHECK(o.status == VerifyStatus::Fail);
        CHECK(o.first_diff == 5);
        CHECK(o.diff_coeff == Rat(-1));
        CHECK(is_failure(o.status));
    }
    {
        const Script sc = parse_script(
            "assert OPGF() == OPGF() + q^5 to 30 expect discrepancy \"tail shift\";", "v.qid");
        const VerifyOutcome o = verify(sc.assertions[0]);
        CHECK(o.status == VerifyStatus::KnownDiscrepancy);
        CHECK(o.first_diff == 5);
        CHECK(o.message == "tail shift");
        CHECK_FALSE(is_failure(o.status));
    }
    {
        const Script sc =
            parse_script("assert 1 == 1 to 5 expect discrepancy \"never\";", "v.qid");
        const VerifyOutcome o = verify(sc.assertions[0]);
        CHECK(o.status == VerifyStatus::UnexpectedPass);
        CHECK(is_failure(o.status));
    }
    {
        const Script sc = parse_script("assert P(q, q, q; 3) == 1 to 10;", "v.qid");
        const VerifyOutcome o = verify(sc.assertions[0]);
        CHECK(o.status == VerifyStatus::Error);
        CHECK(o.message.find("line 1") != std::string::npos);
        CHECK(is_failure(o.status));
    }
    {
        const Script sc = parse_script("assert q^6 == 0 to 60;", "v.qid");
        const VerifyOutcome full = verify(sc.assertions[0]);
        CHECK(full.status == VerifyStatus::Fail);
        CHECK(full.first_diff == 6);
        CHECK(full.diff_coeff == Rat(1));
        const VerifyOutcome low = verify(sc.assertions[0], 5);
        CHECK(low.status == VerifyStatus::Pass);
        CHECK(low.order == 5);
    }
}

TEST_CASE("status names") {
    CHECK(std::string(status_name(VerifyStatus::Pass)) == "pass");
    CHECK(std::string(status_name(VerifyStatus::Fail)) == "fail");
    CHECK(std::string(status_name(VerifyStatus::KnownDiscrepancy)) == "known-discrepancy");
    CHECK(std::string(status_name(VerifyStatus::UnexpectedPass)) == "unexpected-pass");
    CHECK(std::string(status_name(VerifyStatus::Error)) == "error");
}
