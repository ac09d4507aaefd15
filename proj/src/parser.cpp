#include "crtool/parser.hpp"

#include <cctype>

#include "crtool/errors.hpp"

namespace crtool {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    PolyCC parse() {
        PolyCC p = expression();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input at '" + s_.substr(pos_) + "'");
        return p;
    }

private:
    PolyCC expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        PolyCC p = term();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                PolyCC t = term();
                if (c == '+')
                    p += t;
                else
                    p -= t;
            } else {
                return p;
            }
        }
    }

    PolyCC term() {
        PolyCC p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                get();
                p *= factor();
            } else {
                return p;
            }
        }
    }

    PolyCC factor() {
        PolyCC p = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            unsigned e = read_uint();
            p = p.pow(e);
        }
        return p;
    }

    PolyCC primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            PolyCC p = expression();
            expect(')');
            return p;
        }
        if (c == '-') {
            get();
            return -factor();
        }
        if (c == '+') {
            get();
            return factor();
        }
        if (c == 'I') {
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == 'm') {
                get();
                get();
                skip_ws();
                expect('(');
                PolyCC arg = expression();
                expect(')');
                return im_part(arg);
            }
            get();
            return PolyCC(Gaussian::i());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return PolyCC(Gaussian(read_rational()));
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string name = read_ident();
            skip_ws();
            if (peek() == '(') {
                get();
                PolyCC arg = expression();
                expect(')');
                if (name == "conj") return conjugate(arg);
                throw ParseError("unknown function '" + name + "'");
            }
            if (auto v = var_from_name(name)) return PolyCC(*v);
            throw ParseError("unknown variable '" + name + "'");
        }
        if (c == 'R') {
            get();
            if (peek() != 'e') throw ParseError("unknown function starting with 'R'");
            get();
            skip_ws();
            expect('(');
            PolyCC arg = expression();
            expect(')');
            return re_part(arg);
        }
        if (c == '\0') throw ParseError("unexpected end of input");
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    std::string read_ident() {
        std::string out;
        while (std::islower(static_cast<unsigned char>(peek())) ||
               std::isdigit(static_cast<unsigned char>(peek())))
            out.push_back(get());
        return out;
    }

    unsigned read_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected exponent digits");
        unsigned v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
        return v;
    }

    Rational read_rational() {
        BigInt num = read_bigint();
        skip_ws();
        if (peek() == '/') {
            size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt den = read_bigint();
                if (den == 0) throw ParseError("zero denominator");
                return Rational(num, den);
            }
            pos_ = save;  // "/" belonged to something else; not our grammar, error later
        }
        return Rational(num);
    }

    BigInt read_bigint() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
        return BigInt(digits);
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' at '" + s_.substr(pos_) + "'");
        get();
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

PolyCC parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace crtool
