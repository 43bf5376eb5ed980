#include "lctk/tf_io.hpp"

#include <cctype>
#include <cmath>

namespace lctk {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind = Kind::End;
    std::string text;
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        current_.pos = pos_;
        if (pos_ >= src_.size()) {
            current_.kind = Token::Kind::End;
            current_.text.clear();
            return;
        }
        char c = src_[pos_];
        auto single = [&](Token::Kind k) {
            current_.kind = k;
            current_.text = std::string(1, c);
            ++pos_;
        };
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '/': single(Token::Kind::Slash); return;
            case '^': single(Token::Kind::Caret); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                ++pos_;
            }
            // exponent part, e.g. 1e-6
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                size_t mark = pos_;
                ++pos_;
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        ++pos_;
                    }
                } else {
                    pos_ = mark;  // 'e' belongs to an identifier, not this number
                }
            }
            current_.kind = Token::Kind::Number;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_')) {
                ++pos_;
            }
            current_.kind = Token::Kind::Ident;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "' at position " +
                          std::to_string(pos_));
    }

    std::string_view src_;
    size_t pos_ = 0;
    Token current_;
};

class TfParser {
public:
    explicit TfParser(std::string_view src) : lex_(src) {}

    TransferFunction parse() {
        TransferFunction tf = parse_expr();
        if (lex_.peek().kind != Token::Kind::End) {
            throw SyntaxError("trailing input at position " + std::to_string(lex_.peek().pos));
        }
        return tf;
    }

private:
    TransferFunction parse_expr() {
        TransferFunction acc = parse_term();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.next();
                acc = tf_arith(TfOp::Add, acc, parse_term());
            } else if (k == Token::Kind::Minus) {
                lex_.next();
                acc = tf_arith(TfOp::Sub, acc, parse_term());
            } else {
                return acc;
            }
        }
    }

    TransferFunction parse_term() {
        TransferFunction acc = parse_factor();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.next();
                acc = tf_arith(TfOp::Mul, acc, parse_factor());
            } else if (k == Token::Kind::Slash) {
                lex_.next();
                acc = tf_arith(TfOp::Div, acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    TransferFunction parse_factor() {
        bool negate = false;
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            if (lex_.next().kind == Token::Kind::Minus) negate = !negate;
        }
        TransferFunction value = parse_primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.next();
            Token e = lex_.next();
            if (e.kind != Token::Kind::Number) {
                throw SyntaxError("expected integer exponent at position " + std::to_string(e.pos));
            }
            Rational r = Rational::parse(e.text);
            if (!r.is_integer() || r.sign() < 0) {
                throw SyntaxError("exponent must be a nonnegative integer: " + e.text);
            }
            unsigned n = static_cast<unsigned>(r.numerator().convert_to<unsigned long long>());
            TransferFunction acc = TransferFunction::one();
            for (unsigned i = 0; i < n; ++i) acc = tf_arith(TfOp::Mul, acc, value);
            value = acc;
        }
        return negate ? tf_neg(value) : value;
    }

    TransferFunction parse_primary() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::Kind::Number:
                return TransferFunction::constant(Rational::parse(t.text));
            case Token::Kind::LParen: {
                TransferFunction inner = parse_expr();
                expect_rparen();
                return inner;
            }
            case Token::Kind::Ident: {
                if (t.text == "s") {
                    return {SPoly::s(), SPoly(1)};
                }
                if (t.text == "exp") {
                    return parse_delay_factor(t.pos);
                }
                return {SPoly(ParamPoly::var(t.text)), SPoly(1)};
            }
            default:
                throw SyntaxError("unexpected token at position " + std::to_string(t.pos));
        }
    }

    // exp(<c>*s) with c a nonpositive numeric constant -> delay factor
    TransferFunction parse_delay_factor(size_t pos) {
        if (lex_.next().kind != Token::Kind::LParen) {
            throw SyntaxError("expected '(' after exp at position " + std::to_string(pos));
        }
        TransferFunction inner = parse_expr();
        expect_rparen();
        // inner must be c*s exactly: denominator constant, numerator degree 1
        // with zero constant term, numeric coefficients
        if (inner.delay() != 0.0 || inner.den().degree() != 0 || inner.num().degree() != 1 ||
            !inner.num().coeff(0).is_zero() || !inner.num().coeff(1).is_constant() ||
            !inner.den().coeff(0).is_constant()) {
            throw SyntaxError("exp() argument must be a constant multiple of s");
        }
        Rational c = inner.num().coeff(1).constant_value() / inner.den().coeff(0).constant_value();
        double d = -c.to_double();
        if (d < 0.0) {
            throw SyntaxError("exp() argument must be nonpositive (a delay)");
        }
        return {SPoly(1), SPoly(1), d};
    }

    void expect_rparen() {
        Token t = lex_.next();
        if (t.kind != Token::Kind::RParen) {
            throw SyntaxError("expected ')' at position " + std::to_string(t.pos));
        }
    }

    Lexer lex_;
};

}  // namespace

TransferFunction tf_from_text(std::string_view text) { return TfParser(text).parse(); }

nlohmann::ordered_json param_poly_to_json(const ParamPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    // grlex-descending to match the printed form
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::ordered_json term;
        term["coef"] = it->second.to_string();
        nlohmann::ordered_json mono = nlohmann::ordered_json::object();
        for (const auto& [name, exp] : it->first.factors()) mono[name] = exp;
        term["mono"] = mono;
        terms.push_back(term);
    }
    return terms;
}

ParamPoly param_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw SyntaxError("coefficient must be an array of terms");
    }
    ParamPoly p;
    for (const auto& term : j) {
        Rational coef = Rational::parse(term.at("coef").get<std::string>());
        Monomial mono;
        if (term.contains("mono")) {
            for (const auto& [name, exp] : term.at("mono").items()) {
                mono = mono * Monomial::var(name, exp.get<unsigned>());
            }
        }
        p += ParamPoly::term(coef, mono);
    }
    return p;
}

nlohmann::ordered_json spoly_to_json(const SPoly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(param_poly_to_json(c));
    return coeffs;
}

SPoly spoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw SyntaxError("polynomial must be an array of coefficients");
    }
    std::vector<ParamPoly> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(param_poly_from_json(c));
    return SPoly(std::move(coeffs));
}

nlohmann::ordered_json tf_to_json(const TransferFunction& tf) {
    nlohmann::ordered_json j;
    j["num"] = spoly_to_json(tf.num());
    j["den"] = spoly_to_json(tf.den());
    j["delay"] = tf.delay();
    return j;
}

TransferFunction tf_from_json(const nlohmann::json& j) {
    SPoly num = spoly_from_json(j.at("num"));
    SPoly den = spoly_from_json(j.at("den"));
    double delay = j.value("delay", 0.0);
    return {std::move(num), std::move(den), delay};
}

}  // namespace lctk
