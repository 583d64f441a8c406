#include <cctype>
#include <map>
#include <sstream>

#include "qv/qid.hpp"

namespace qv {

namespace {

struct Token {
    enum class Type { Name, Int, String, Sym, End };
    Type type;
    std::string text;  // Name/String text or symbol ("==" is one token)
    long value = 0;    // Int
    int line = 1, col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.type = Token::Type::End;
            tok_.text = "<end of input>";
            return;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            col_ += static_cast<int>(pos_ - start);
            tok_.type = Token::Type::Int;
            tok_.value = v;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            col_ += static_cast<int>(pos_ - start);
            tok_.type = Token::Type::Name;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (c == '"') {
            size_t start = ++pos_;
            while (pos_ < s_.size() && s_[pos_] != '"' && s_[pos_] != '\n') ++pos_;
            if (pos_ >= s_.size() || s_[pos_] != '"')
                throw SyntaxError(line_, col_, "unterminated string literal");
            tok_.type = Token::Type::String;
            tok_.text = s_.substr(start, pos_ - start);
            col_ += static_cast<int>(pos_ - start) + 2;
            ++pos_;
            return;
        }
        if (c == '=' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '=') {
            tok_.type = Token::Type::Sym;
            tok_.text = "==";
            pos_ += 2;
            col_ += 2;
            return;
        }
        static const std::string singles = "+-*/^(){}[],;=";
        if (singles.find(c) != std::string::npos) {
            tok_.type = Token::Type::Sym;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
            return;
        }
        throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// Builtin signatures: 'm' = monomial (or bare +-1), 'i' = integer.
const std::map<std::string, std::string>& builtin_signatures() {
    static const std::map<std::string, std::string> sigs = {
        {"J", "ii"},     {"Jm", "i"},      {"jtheta", "mi"}, {"poch", "mi"},
        {"P", "mmmi"},   {"S", "mi"},      {"AL", "mim"},    {"g2", "mi"},
        {"omega", ""},   {"rho", ""},      {"OPGF", ""},     {"RBAR", "i"},
        {"RGF", "i"},    {"RDISS", "ii"},
    };
    return sigs;
}

class Parser {
  public:
    Parser(const std::string& text, const std::string& source_name)
        : lex_(text), source_(source_name) {}

    Script run() {
        Script sc;
        sc.source_name = source_;
        while (lex_.peek().type != Token::Type::End) sc.assertions.push_back(assertion(sc));
        return sc;
    }

    ExprPtr run_expression() {
        ExprPtr e = expr();
        Token t = lex_.take();
        if (t.type != Token::Type::End) fail(t, "expected end of expression");
        return e;
    }

  private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw SyntaxError(t.line, t.col, msg + " (found '" + t.text + "')");
    }

    Token expect_sym(const std::string& sym) {
        Token t = lex_.take();
        if (t.type != Token::Type::Sym || t.text != sym) fail(t, "expected '" + sym + "'");
        return t;
    }

    Token expect_name(const std::string& name) {
        Token t = lex_.take();
        if (t.type != Token::Type::Name || t.text != name) fail(t, "expected '" + name + "'");
        return t;
    }

    long expect_int() {
        Token t = lex_.take();
        if (t.type != Token::Type::Int) fail(t, "expected an integer");
        return t.value;
    }

    long signed_int() {
        if (lex_.peek().type == Token::Type::Sym && lex_.peek().text == "-") {
            lex_.take();
            return -expect_int();
        }
        return expect_int();
    }

    bool at_sym(const std::string& sym) const {
        return lex_.peek().type == Token::Type::Sym && lex_.peek().text == sym;
    }

    Assertion assertion(const Script& sc) {
        Token kw = expect_name("assert");
        Assertion a;
        a.line = kw.line;
        a.id = source_ + ":" + std::to_string(sc.assertions.size() + 1);
        a.lhs = expr();
        expect_sym("==");
        a.rhs = expr();
        expect_name("to");
        a.order = expect_int();
        if (lex_.peek().type == Token::Type::Name && lex_.peek().text == "expect") {
            lex_.take();
            expect_name("discrepancy");
            Token note = lex_.take();
            if (note.type != Token::Type::String) fail(note, "expected a quoted note");
            a.expect_discrepancy = true;
            a.note = note.text;
        }
        expect_sym(";");
        return a;
    }

    ExprPtr make(Expr::Kind k, const Token& at) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->line = at.line;
        e->col = at.col;
        return e;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (at_sym("+") || at_sym("-")) {
            Token op = lex_.take();
            ExprPtr node = make(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op);
            node->a = std::move(left);
            node->b = term();
            left = std::move(node);
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (at_sym("*") || at_sym("/")) {
            Token op = lex_.take();
            ExprPtr node = make(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op);
            node->a = std::move(left);
            node->b = factor();
            left = std::move(node);
        }
        return left;
    }

    ExprPtr factor() {
        if (at_sym("-")) {
            Token op = lex_.take();
            ExprPtr node = make(Expr::Kind::Neg, op);
            node->a = factor();
            return node;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (at_sym("^")) {
            Token op = lex_.take();
            ExprPtr node = make(Expr::Kind::Pow, op);
            node->exponent = signed_int();
            node->a = std::move(base);
            return node;
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        if (t.type == Token::Type::Int) {
            ExprPtr e = make(Expr::Kind::Number, t);
            e->number = t.value;
            return e;
        }
        if (t.type == Token::Type::Sym && t.text == "(") {
            ExprPtr inner = expr();
            expect_sym(")");
            return inner;
        }
        if (t.type != Token::Type::Name) fail(t, "expected a value");
        if (t.text == "q") return make(Expr::Kind::Q, t);
        if (t.text == "L") return lambert_literal(t);
        auto sig = builtin_signatures().find(t.text);
        if (sig == builtin_signatures().end()) fail(t, "unknown builtin '" + t.text + "'");
        ExprPtr e = make(Expr::Kind::Call, t);
        e->call = t.text;
        expect_sym("(");
        if (!at_sym(")")) {
            e->args.push_back(call_arg());
            while (at_sym(",") || at_sym(";")) {
                lex_.take();
                e->args.push_back(call_arg());
            }
        }
        expect_sym(")");
        const std::string& want = sig->second;
        if (e->args.size() != want.size())
            fail(t, "builtin '" + t.text + "' takes " + std::to_string(want.size()) + " arguments");
        for (size_t i = 0; i < want.size(); ++i) {
            CallArg& a = e->args[i];
            if (want[i] == 'i') {
                if (a.is_mono)
                    fail(t, "argument " + std::to_string(i + 1) + " of '" + t.text +
                               "' must be an integer");
            } else if (!a.is_mono) {
                // bare +-1 in a monomial slot means the sign alone
                if (a.num != 1 && a.num != -1)
                    fail(t, "argument " + std::to_string(i + 1) + " of '" + t.text +
                               "' must be a signed power of q (or +-1)");
                a.is_mono = true;
                a.m = Monomial{a.num == 1 ? 1 : -1, 0};
            }
        }
        return e;
    }

    CallArg call_arg() {
        CallArg a;
        int sign = 1;
        if (at_sym("-")) {
            lex_.take();
            sign = -1;
        }
        Token t = lex_.take();
        if (t.type == Token::Type::Int) {
            a.num = sign * t.value;
            return a;
        }
        if (t.type == Token::Type::Name && t.text == "q") {
            long e = 1;
            if (at_sym("^")) {
                lex_.take();
                e = signed_int();
            }
            a.is_mono = true;
            a.m = Monomial{sign, e};
            return a;
        }
        fail(t, "expected an integer or a power of q");
    }

    ExprPtr lambert_literal(const Token& at) {
        ExprPtr e = make(Expr::Kind::Lambert, at);
        LambertSpec& sp = e->lambert;
        expect_sym("{");
        bool saw_A = false, saw_D = false, saw_den = false;
        while (true) {
            Token key = lex_.take();
            if (key.type != Token::Type::Name) fail(key, "expected a field name");
            expect_sym("=");
            if (key.text == "excl") {
                expect_sym("[");
                if (!at_sym("]")) {
                    sp.exclusions.insert(signed_int());
                    while (at_sym(",")) {
                        lex_.take();
                        sp.exclusions.insert(signed_int());
                    }
                }
                expect_sym("]");
            } else {
                const long v = signed_int();
                if (key.text == "alt") sp.alt_sign = (v != 0);
                else if (key.text == "A") { sp.A = v; saw_A = true; }
                else if (key.text == "B") sp.B = v;
                else if (key.text == "C") sp.C = v;
                else if (key.text == "den") { sp.denom_sign = static_cast<int>(v); saw_den = true; }
                else if (key.text == "D") { sp.D = v; saw_D = true; }
                else if (key.text == "E") sp.E = v;
                else if (key.text == "pow") sp.power = static_cast<int>(v);
                else fail(key, "unknown field '" + key.text + "'");
            }
            if (at_sym(",")) {
                lex_.take();
                continue;
            }
            break;
        }
        expect_sym("}");
        if (!saw_A || !saw_D || !saw_den)
            fail(at, "Lambert literal requires at least A, D and den fields");
        if (sp.denom_sign != 1 && sp.denom_sign != -1) fail(at, "den must be 1 or -1");
        if (sp.power != 1 && sp.power != 2) fail(at, "pow must be 1 or 2");
        return e;
    }

    Lexer lex_;
    std::string source_;
};

// --- printing ------------------------------------------------------------

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;  // atoms
    }
}

void print_arg(std::ostringstream& out, const CallArg& a) {
    if (!a.is_mono) {
        out << a.num;
        return;
    }
    if (a.m.exp == 0) {
        out << (a.m.sign < 0 ? "-1" : "1");
        return;
    }
    if (a.m.sign < 0) out << "-";
    out << "q";
    if (a.m.exp != 1) out << "^" << a.m.exp;
}

void print_expr(std::ostringstream& out, const Expr& e, int parent_prec) {
    const int prec = precedence(e.kind);
    // A right operand of '-' or '/' at equal precedence still needs parens;
    // callers pass parent_prec + 1 in those positions.
    const bool parens = prec < parent_prec;
    if (parens) out << "(";
    switch (e.kind) {
        case Expr::Kind::Number: out << e.number; break;
        case Expr::Kind::Q: out << "q"; break;
        case Expr::Kind::Neg:
            out << "-";
            print_expr(out, *e.a, precedence(Expr::Kind::Neg));
            break;
        case Expr::Kind::Add:
            print_expr(out, *e.a, prec);
            out << " + ";
            print_expr(out, *e.b, prec + 1);
            break;
        case Expr::Kind::Sub:
            print_expr(out, *e.a, prec);
            out << " - ";
            print_expr(out, *e.b, prec + 1);
            break;
        case Expr::Kind::Mul:
            print_expr(out, *e.a, prec);
            out << "*";
            print_expr(out, *e.b, prec + 1);
            break;
        case Expr::Kind::Div:
            print_expr(out, *e.a, prec);
            out << "/";
            print_expr(out, *e.b, prec + 1);
            break;
        case Expr::Kind::Pow:
            print_expr(out, *e.a, precedence(Expr::Kind::Pow) + 1);
            out << "^" << e.exponent;
            break;
        case Expr::Kind::Call: {
            out << e.call << "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out << (e.args[i].is_mono != e.args[i - 1].is_mono ? "; " : ", ");
                print_arg(out, e.args[i]);
            }
            out << ")";
            break;
        }
        case Expr::Kind::Lambert: {
            const LambertSpec& sp = e.lambert;
            out << "L{";
            if (sp.alt_sign) out << "alt=1, ";
            out << "A=" << sp.A;
            if (sp.B != 0) out << ", B=" << sp.B;
            if (sp.C != 0) out << ", C=" << sp.C;
            out << ", den=" << sp.denom_sign << ", D=" << sp.D;
            if (sp.E != 0) out << ", E=" << sp.E;
            if (sp.power != 1) out << ", pow=" << sp.power;
            if (!sp.exclusions.empty()) {
                out << ", excl=[";
                bool first = true;
                for (long x : sp.exclusions) {
                    if (!first) out << ", ";
                    out << x;
                    first = false;
                }
                out << "]";
            }
            out << "}";
            break;
        }
    }
    if (parens) out << ")";
}

}  // namespace

Script parse_script(const std::string& text, const std::string& source_name) {
    return Parser(text, source_name).run();
}

ExprPtr parse_expression(const std::string& text, const std::string& source_name) {
    return Parser(text, source_name).run_expression();
}

std::string pretty(const Expr& e) {
    std::ostringstream out;
    print_expr(out, e, 0);
    return out.str();
}

std::string pretty(const Assertion& a) {
    std::ostringstream out;
    out << "assert " << pretty(*a.lhs) << " == " << pretty(*a.rhs) << " to " << a.order;
    if (a.expect_discrepancy) out << " expect discrepancy \"" << a.note << "\"";
    out << ";";
    return out.str();
}

bool structurally_equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::Number: return x.number == y.number;
        case Expr::Kind::Q: return true;
        case Expr::Kind::Neg: return structurally_equal(*x.a, *y.a);
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
            return structurally_equal(*x.a, *y.a) && structurally_equal(*x.b, *y.b);
        case Expr::Kind::Pow:
            return x.exponent == y.exponent && structurally_equal(*x.a, *y.a);
        case Expr::Kind::Call: {
            if (x.call != y.call || x.args.size() != y.args.size()) return false;
            for (size_t i = 0; i < x.args.size(); ++i) {
                const CallArg& p = x.args[i];
                const CallArg& r = y.args[i];
                if (p.is_mono != r.is_mono) return false;
                if (p.is_mono ? !(p.m == r.m) : p.num != r.num) return false;
            }
            return true;
        }
        case Expr::Kind::Lambert: return x.lambert == y.lambert;
    }
    return false;
}

ExprPtr clone(const Expr& e) {
    auto r = std::make_unique<Expr>();
    r->kind = e.kind;
    r->number = e.number;
    r->exponent = e.exponent;
    r->call = e.call;
    r->args = e.args;
    r->lambert = e.lambert;
    r->line = e.line;
    r->col = e.col;
    if (e.a) r->a = clone(*e.a);
    if (e.b) r->b = clone(*e.b);
    return r;
}

const char* status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Pass: return "pass";
        case VerifyStatus::Fail: return "fail";
        case VerifyStatus::KnownDiscrepancy: return "known-discrepancy";
        case VerifyStatus::UnexpectedPass: return "unexpected-pass";
        case VerifyStatus::Error: return "error";
    }
    return "unknown";
}

}  // namespace qv
