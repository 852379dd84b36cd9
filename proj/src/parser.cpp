#include "mldeg/parser.hpp"

#include <cctype>
#include <vector>

namespace mldeg {

namespace {

struct Token {
    enum Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    size_t pos;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::end, "", start};
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::plus, "+", start};
            case '-': ++pos_; return {Token::minus, "-", start};
            case '*': ++pos_; return {Token::star, "*", start};
            case '/': ++pos_; return {Token::slash, "/", start};
            case '^': ++pos_; return {Token::caret, "^", start};
            case '(': ++pos_; return {Token::lparen, "(", start};
            case ')': ++pos_; return {Token::rparen, ")", start};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t n = pos_;
            while (n < text_.size() && std::isdigit(static_cast<unsigned char>(text_[n]))) ++n;
            Token t{Token::number, std::string(text_.substr(pos_, n - pos_)), start};
            pos_ = n;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t n = pos_;
            while (n < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[n])) || text_[n] == '_'))
                ++n;
            Token t{Token::ident, std::string(text_.substr(pos_, n - pos_)), start};
            pos_ = n;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
};

class Parser {
  public:
    Parser(std::string_view text, std::span<const std::string> names) : lexer_(text), names_(names) {
        advance();
    }

    RatFun parse() {
        RatFun result = expression();
        if (current_.kind != Token::end) throw ParseError("trailing input", current_.pos);
        return result;
    }

  private:
    void advance() { current_ = lexer_.next(); }

    bool accept(Token::Kind kind) {
        if (current_.kind != kind) return false;
        advance();
        return true;
    }

    int nvars() const { return static_cast<int>(names_.size()); }

    // expression := term (('+' | '-') term)*
    RatFun expression() {
        RatFun acc = term();
        for (;;) {
            if (accept(Token::plus))
                acc += term();
            else if (accept(Token::minus))
                acc -= term();
            else
                return acc;
        }
    }

    // term := factor (('*' | '/') factor)*
    RatFun term() {
        RatFun acc = factor();
        for (;;) {
            if (accept(Token::star)) {
                acc *= factor();
            } else if (accept(Token::slash)) {
                Token at = current_;
                RatFun rhs = factor();
                if (rhs.is_zero()) throw ParseError("division by zero", at.pos);
                acc /= rhs;
            } else {
                return acc;
            }
        }
    }

    // factor := ('+' | '-')* power
    RatFun factor() {
        bool negate = false;
        for (;;) {
            if (accept(Token::plus)) continue;
            if (accept(Token::minus)) {
                negate = !negate;
                continue;
            }
            break;
        }
        RatFun value = power();
        return negate ? -value : value;
    }

    // power := atom ('^' signed-integer)?
    RatFun power() {
        RatFun base = atom();
        if (!accept(Token::caret)) return base;
        bool negative = false;
        while (current_.kind == Token::minus || current_.kind == Token::plus) {
            if (current_.kind == Token::minus) negative = !negative;
            advance();
        }
        if (current_.kind != Token::number) throw ParseError("exponent must be an integer literal", current_.pos);
        long e = 0;
        try {
            e = std::stol(current_.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", current_.pos);
        }
        if (e > 64) throw ParseError("exponent too large", current_.pos);
        advance();
        if (negative && base.is_zero()) throw ParseError("negative power of zero", current_.pos);
        return base.pow(static_cast<int>(negative ? -e : e));
    }

    RatFun atom() {
        if (current_.kind == Token::number) {
            Rational value(current_.text, 10);
            advance();
            return RatFun::constant(nvars(), value);
        }
        if (current_.kind == Token::ident) {
            for (size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == current_.text) {
                    advance();
                    return RatFun::variable(nvars(), static_cast<int>(i));
                }
            }
            throw ParseError("unknown variable '" + current_.text + "'", current_.pos);
        }
        if (current_.kind == Token::lparen) {
            advance();
            RatFun inner = expression();
            if (!accept(Token::rparen)) throw ParseError("expected ')'", current_.pos);
            return inner;
        }
        throw ParseError("expected a number, variable, or '('", current_.pos);
    }

    Lexer lexer_;
    std::span<const std::string> names_;
    Token current_;
};

}  // namespace

RatFun parse_rational_function(std::string_view text, std::span<const std::string> names) {
    return Parser(text, names).parse();
}

RatPoly parse_polynomial(std::string_view text, std::span<const std::string> names) {
    RatFun f = parse_rational_function(text, names);
    if (!f.denominator().is_constant())
        throw ParseError("expression is not a polynomial", 0);
    Rational c = f.denominator().constant_term();
    return f.numerator().scaled(Rational(1) / c);
}

}  // namespace mldeg
