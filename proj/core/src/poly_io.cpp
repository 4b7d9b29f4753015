#include "lgould/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lgould {

PolyStyle parse_style(const std::string& name) {
    if (name == "qqa") return PolyStyle::QQA;
    if (name == "t0t1") return PolyStyle::T0T1;
    if (name == "su") return PolyStyle::SU;
    throw std::invalid_argument("unknown style: " + name + " (expected qqa, t0t1 or su)");
}

namespace {

// q^(se/2) as text; se counts s-steps.
std::string q_power(int se) {
    std::ostringstream os;
    os << "q^";
    if (se % 2 == 0) os << se / 2;
    else os << "(" << se << "/2)";
    return os.str();
}

std::string qa_power(int ue) {
    std::ostringstream os;
    os << "qa^";
    if (ue % 2 == 0) os << ue / 2;
    else os << "(" << ue << "/2)";
    return os.str();
}

// RatQ as a q-polynomial string (s-exponents halved), e.g. "-q^-8 - q^-6 + 2".
std::string ratq_in_q(const RatQ& r) {
    auto spoly_in_q = [](const SPoly& p) {
        std::ostringstream os;
        bool first = true;
        for (int e = p.hi(); e >= p.lo(); --e) {
            const mpz_class& c = p.coeff(e);
            if (c == 0) continue;
            mpz_class a = c < 0 ? mpz_class(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << q_power(e);
            }
        }
        return os.str();
    };
    if (r.is_zero()) return "0";
    if (r.is_polynomial()) return spoly_in_q(r.num());
    std::string num = spoly_in_q(r.num());
    std::string den = spoly_in_q(r.den());
    std::string lhs = r.num().term_count() > 1 ? "(" + num + ")" : num;
    std::string rhs = r.den().term_count() > 1 ? "(" + den + ")" : den;
    return lhs + "/" + rhs;
}

std::string render_qqa(const LaurentBi& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Ascending in the q^alpha power, matching the usual display order.
    for (const auto& [ue, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        if (ue == 0) {
            std::string cs = ratq_in_q(c);
            os << (c.num().term_count() + c.den().term_count() > 2 ? "(" + cs + ")" : cs);
        } else {
            os << qa_power(ue) << "*(" << ratq_in_q(c) << ")";
        }
    }
    return os.str();
}

std::string render_su(const LaurentBi& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ue, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str("s");
        bool composite = c.num().term_count() + c.den().term_count() > 2;
        if (ue == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (c.is_one()) {
                os << "u^" << ue;
            } else {
                os << (composite ? "(" + cs + ")" : cs) << "*u^" << ue;
            }
        }
    }
    return os.str();
}

}  // namespace

std::string render(const T0T1Poly& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, c] : x.terms()) {
        auto [a, b] = ab;
        mpq_class q = c;
        bool neg = q < 0;
        if (neg) q = -q;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool has_var = (a != 0) || (b != 0);
        if (q != 1 || !has_var) os << q.get_str();
        if (a != 0) {
            if (q != 1) os << "*";
            os << "t0";
            if (a != 1) os << "^" << a;
        }
        if (b != 0) {
            if (q != 1 || a != 0) os << "*";
            os << "t1";
            if (b != 1) os << "^" << b;
        }
    }
    return os.str();
}

std::string render(const LaurentBi& x, PolyStyle style) {
    switch (style) {
        case PolyStyle::QQA: return render_qqa(x);
        case PolyStyle::SU: return render_su(x);
        case PolyStyle::T0T1: return render(to_t0t1(x));
    }
    return "";
}

std::string render(const FracBi& x, PolyStyle style) {
    if (x.is_polynomial()) return render(x.num(), style);
    if (style == PolyStyle::T0T1)
        throw std::domain_error("cannot render a genuine fraction in t0/t1 style");
    return "(" + render(x.num(), style) + ") / (" + render(x.den(), style) + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    enum Kind { NUM, VAR, PLUS, MINUS, MUL, DIV, POW, LPAR, RPAR, END } kind;
    mpz_class num;
    std::string var;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) { tok_ = {Token::END, 0, ""}; return; }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::NUM, mpz_class(s_.substr(i_, j - i_)), ""};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])))) ++j;
            tok_ = {Token::VAR, 0, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::PLUS, 0, ""}; return;
            case '-': tok_ = {Token::MINUS, 0, ""}; return;
            case '*': tok_ = {Token::MUL, 0, ""}; return;
            case '/': tok_ = {Token::DIV, 0, ""}; return;
            case '^': tok_ = {Token::POW, 0, ""}; return;
            case '(': tok_ = {Token::LPAR, 0, ""}; return;
            case ')': tok_ = {Token::RPAR, 0, ""}; return;
            default: throw std::invalid_argument(std::string("unexpected character '") + c + "'");
        }
    }
    const std::string& s_;
    size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    FracBi parse() {
        FracBi r = expr();
        if (lex_.peek().kind != Token::END) throw std::invalid_argument("trailing input");
        return r;
    }

private:
    FracBi expr() {
        FracBi acc;
        bool neg = false;
        if (lex_.peek().kind == Token::MINUS) { lex_.take(); neg = true; }
        else if (lex_.peek().kind == Token::PLUS) { lex_.take(); }
        FracBi t = term();
        acc = neg ? -t : t;
        while (lex_.peek().kind == Token::PLUS || lex_.peek().kind == Token::MINUS) {
            bool minus = lex_.take().kind == Token::MINUS;
            FracBi nxt = term();
            acc = minus ? acc - nxt : acc + nxt;
        }
        return acc;
    }

    FracBi term() {
        FracBi acc = factor();
        for (;;) {
            auto k = lex_.peek().kind;
            if (k == Token::MUL) { lex_.take(); acc *= factor(); }
            else if (k == Token::DIV) { lex_.take(); acc /= factor(); }
            else if (k == Token::VAR || k == Token::LPAR || k == Token::NUM) {
                // implicit multiplication
                acc *= factor();
            } else break;
        }
        return acc;
    }

    // Exponent: integer, or (p/q) as an exact rational.
    mpq_class exponent() {
        bool neg = false;
        if (lex_.peek().kind == Token::MINUS) { lex_.take(); neg = true; }
        if (lex_.peek().kind == Token::NUM) {
            mpz_class n = lex_.take().num;
            return neg ? mpq_class(-n) : mpq_class(n);
        }
        if (lex_.peek().kind == Token::LPAR) {
            lex_.take();
            bool ineg = false;
            if (lex_.peek().kind == Token::MINUS) { lex_.take(); ineg = true; }
            if (lex_.peek().kind != Token::NUM) throw std::invalid_argument("bad exponent");
            mpz_class p = lex_.take().num;
            mpz_class q = 1;
            if (lex_.peek().kind == Token::DIV) {
                lex_.take();
                if (lex_.peek().kind != Token::NUM) throw std::invalid_argument("bad exponent");
                q = lex_.take().num;
            }
            if (lex_.peek().kind != Token::RPAR) throw std::invalid_argument("bad exponent");
            lex_.take();
            mpq_class e(p, q);
            e.canonicalize();
            if (ineg || neg) e = -e;
            return e;
        }
        throw std::invalid_argument("bad exponent");
    }

    FracBi var_power(const std::string& v, const mpq_class& e) {
        // Convert to internal (s,u)-exponents; must come out integral.
        auto as_int = [](const mpq_class& x, const char* what) {
            if (x.get_den() != 1) throw std::invalid_argument(std::string("non-integral ") + what);
            if (!x.get_num().fits_sint_p()) throw std::invalid_argument("exponent overflow");
            return static_cast<int>(x.get_num().get_si());
        };
        if (v == "s") return FracBi(LaurentBi::s_pow(as_int(e, "s-exponent")));
        if (v == "u") return FracBi(LaurentBi::u_pow(as_int(e, "u-exponent")));
        if (v == "q") return FracBi(LaurentBi::s_pow(as_int(e * 2, "q-half-exponent")));
        if (v == "qa" || v == "p")
            return FracBi(LaurentBi::u_pow(as_int(e * 2, "q^alpha-half-exponent")));
        if (v == "t0") {
            int a = as_int(e, "t0-exponent");
            return FracBi(LaurentBi::u_pow(-4 * a));
        }
        if (v == "t1") {
            int b = as_int(e, "t1-exponent");
            return FracBi(LaurentBi::monomial(RatQ::s_pow(4 * b), 4 * b));
        }
        throw std::invalid_argument("unknown variable: " + v);
    }

    FracBi factor() {
        Token t = lex_.take();
        FracBi base;
        if (t.kind == Token::NUM) {
            base = FracBi(LaurentBi(RatQ(mpz_class(t.num))));
            if (lex_.peek().kind == Token::POW) {
                lex_.take();
                mpq_class e = exponent();
                if (e.get_den() != 1) throw std::invalid_argument("fractional numeric exponent");
                return base.pow(static_cast<int>(e.get_num().get_si()));
            }
            return base;
        }
        if (t.kind == Token::VAR) {
            mpq_class e(1);
            if (lex_.peek().kind == Token::POW) {
                lex_.take();
                e = exponent();
            }
            return var_power(t.var, e);
        }
        if (t.kind == Token::LPAR) {
            FracBi inner = expr();
            if (lex_.peek().kind != Token::RPAR) throw std::invalid_argument("missing ')'");
            lex_.take();
            if (lex_.peek().kind == Token::POW) {
                lex_.take();
                mpq_class e = exponent();
                if (e.get_den() != 1) throw std::invalid_argument("fractional exponent on expression");
                return inner.pow(static_cast<int>(e.get_num().get_si()));
            }
            return inner;
        }
        if (t.kind == Token::MINUS) return -factor();
        throw std::invalid_argument("unexpected token");
    }

    Lexer lex_;
};

}  // namespace

FracBi parse_poly(const std::string& text) {
    Parser p(text);
    return p.parse();
}

}  // namespace lgould
