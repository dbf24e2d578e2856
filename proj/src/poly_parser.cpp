#include "poisres/poly_parser.hpp"

#include <cctype>
#include <gmpxx.h>

namespace poisres::exactalg {

ParseError::ParseError(ParseErrorKind kind, const std::string& message,
                       std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      kind_(kind),
      position_(position) {}

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
public:
    Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        skip_ws();
        if (!eof()) fail_syntax("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (eof() || peek() != c) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail_syntax(const std::string& msg) const {
        throw ParseError(ParseErrorKind::syntax, "syntax error: " + msg, pos_);
    }

    // expr := term (('+' | '-') term)*
    Polynomial parse_expr() {
        Polynomial p = parse_term();
        while (true) {
            if (accept('+')) {
                p += parse_term();
            } else if (accept('-')) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    // term := factor ('*' factor)*
    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    // factor := ('-' | '+') factor | power
    Polynomial parse_factor() {
        if (accept('-')) return -parse_factor();
        if (accept('+')) return parse_factor();
        return parse_power();
    }

    // power := atom ('^' INT)*
    Polynomial parse_power() {
        Polynomial p = parse_atom();
        while (accept('^')) {
            skip_ws();
            if (!eof() && peek() == '-')
                throw ParseError(ParseErrorKind::negative_exponent,
                                 "negative exponent", pos_);
            p = p.pow(parse_small_integer("exponent"));
        }
        return p;
    }

    // atom := INT ('/' INT)? | VAR | '(' expr ')'
    Polynomial parse_atom() {
        skip_ws();
        if (eof()) fail_syntax("unexpected end of input");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_variable();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            if (!accept(')')) fail_syntax("expected ')'");
            return p;
        }
        fail_syntax(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_literal() {
        mpz_class num = parse_big_integer();
        mpz_class den = 1;
        if (accept('/')) {
            skip_ws();
            const std::size_t den_pos = pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail_syntax("expected denominator");
            den = parse_big_integer();
            if (den == 0)
                throw ParseError(ParseErrorKind::syntax,
                                 "syntax error: zero denominator", den_pos);
        }
        return Polynomial::constant(nvars_, Rational(mpq_class(num, den)));
    }

    Polynomial parse_variable() {
        const std::size_t start = pos_;
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += text_[pos_++];
        if (name.size() >= 2 && name[0] == 'x' && name[1] != '0' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            long index = 0;
            bool overflow = false;
            for (std::size_t i = 1; i < name.size(); ++i) {
                index = index * 10 + (name[i] - '0');
                if (index > nvars_) { overflow = true; break; }
            }
            if (!overflow && index >= 1 && index <= nvars_)
                return Polynomial::variable(nvars_, static_cast<int>(index));
        }
        throw ParseError(ParseErrorKind::unknown_variable,
                         "unknown variable '" + name + "'", start);
    }

    mpz_class parse_big_integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail_syntax("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    int parse_small_integer(const std::string& what) {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxExponent)
                throw ParseError(ParseErrorKind::syntax,
                                 "syntax error: " + what + " too large", start);
            ++pos_;
        }
        if (pos_ == start) fail_syntax("expected " + what);
        return static_cast<int>(value);
    }
};

}  // namespace

Polynomial parse_poly(std::string_view text, int nvars) {
    if (nvars < 1) throw std::invalid_argument("parse_poly: nvars must be positive");
    return Parser(text, nvars).run();
}

}  // namespace poisres::exactalg
