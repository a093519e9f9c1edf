#include "qse/parser.hpp"

#include <cctype>

namespace qse {

namespace {

enum class Tok { Num, Name, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    Token cur_;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t at = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, "", at};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            cur_ = {k, std::string(1, c), at};
        };
        switch (c) {
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            case '[': single(Tok::LBracket); return;
            case ']': single(Tok::RBracket); return;
            case ',': single(Tok::Comma); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = pos_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            if (j < src_.size() && src_[j] == '/' && j + 1 < src_.size()
                && std::isdigit(static_cast<unsigned char>(src_[j + 1]))) {
                ++j;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            }
            cur_ = {Tok::Num, src_.substr(pos_, j - pos_), at};
            pos_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = pos_;
            while (j < src_.size() && std::isalpha(static_cast<unsigned char>(src_[j]))) ++j;
            cur_ = {Tok::Name, src_.substr(pos_, j - pos_), at};
            pos_ = j;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
};

enum class AtomClass { ZParam, ShiftX, ShiftSt, ShiftEt, Plain };

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    OpElement parse() {
        OpElement e = expr();
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError("unexpected trailing input", lex_.peek().offset);
        return e;
    }

private:
    Lexer lex_;

    OpElement expr() {
        int sign = 1;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            sign = -1;
        }
        OpElement acc = term();
        if (sign < 0) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            OpElement rhs = term();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    OpElement term() {
        OpElement acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc *= factor();
        }
        return acc;
    }

    long exponent() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.peek();
        if (t.kind != Tok::Num)
            throw SyntaxError("expected integer exponent", t.offset);
        lex_.take();
        if (t.text.find('/') != std::string::npos)
            throw SyntaxError("exponent must be an integer", t.offset);
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (const std::exception&) {
            throw SyntaxError("exponent out of range", t.offset);
        }
        return neg ? -v : v;
    }

    OpElement factor() {
        auto [el, cls] = atom();
        if (lex_.peek().kind != Tok::Caret) return el;
        std::size_t caret_at = lex_.take().offset;
        long k = exponent();
        switch (cls) {
            case AtomClass::ZParam: return OpElement::scalar(Coefficient::z(static_cast<int>(k)));
            case AtomClass::ShiftX: return OpElement::sx(static_cast<int>(k));
            case AtomClass::ShiftSt: return OpElement::st(static_cast<int>(k));
            case AtomClass::ShiftEt: return OpElement::tshift(static_cast<int>(k));
            case AtomClass::Plain:
                if (k < 0)
                    throw IllegalExponent("negative exponent is only legal on z, Sx, St and Et", caret_at);
                return el.pow(static_cast<unsigned>(k));
        }
        throw SyntaxError("corrupt factor", caret_at);
    }

    std::pair<OpElement, AtomClass> atom() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Num: {
                lex_.take();
                return {OpElement::scalar(Coefficient(Rational::from_string(t.text))), AtomClass::Plain};
            }
            case Tok::Name: {
                lex_.take();
                if (t.text == "z") return {OpElement::scalar(Coefficient::z(1)), AtomClass::ZParam};
                if (t.text == "m") return {OpElement::scalar(Coefficient::m(1)), AtomClass::Plain};
                if (t.text == "a") return {OpElement::scalar(Coefficient::a(1)), AtomClass::Plain};
                if (t.text == "x") return {OpElement::x(), AtomClass::Plain};
                if (t.text == "t") return {OpElement::t(), AtomClass::Plain};
                if (t.text == "dx") return {OpElement::dx(), AtomClass::Plain};
                if (t.text == "dt") return {OpElement::dt(), AtomClass::Plain};
                if (t.text == "Sx") return {OpElement::sx(1), AtomClass::ShiftX};
                if (t.text == "St") return {OpElement::st(1), AtomClass::ShiftSt};
                if (t.text == "Et") return {OpElement::tshift(1), AtomClass::ShiftEt};
                throw SyntaxError("unknown symbol '" + t.text + "'", t.offset);
            }
            case Tok::LParen: {
                lex_.take();
                OpElement e = expr();
                if (lex_.peek().kind != Tok::RParen)
                    throw SyntaxError("expected ')'", lex_.peek().offset);
                lex_.take();
                return {e, AtomClass::Plain};
            }
            case Tok::LBracket: {
                lex_.take();
                OpElement lhs = expr();
                if (lex_.peek().kind != Tok::Comma)
                    throw SyntaxError("expected ',' in bracket", lex_.peek().offset);
                lex_.take();
                OpElement rhs = expr();
                if (lex_.peek().kind != Tok::RBracket)
                    throw SyntaxError("expected ']'", lex_.peek().offset);
                lex_.take();
                return {commutator(lhs, rhs), AtomClass::Plain};
            }
            default:
                throw SyntaxError("expected an atom", t.offset);
        }
    }
};

} // namespace

OpElement parse_element(const std::string& src) {
    return Parser(src).parse();
}

} // namespace qse
