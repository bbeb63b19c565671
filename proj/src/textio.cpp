#include "jue/textio.hpp"

#include <cctype>

#include "jue/errors.hpp"

namespace jue {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    VarSet vs;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    RationalFunction parse_expr() {
        RationalFunction r = parse_term();
        for (;;) {
            if (eat('+')) {
                r += parse_term();
            } else if (eat('-')) {
                r -= parse_term();
            } else {
                return r;
            }
        }
    }

    RationalFunction parse_term() {
        RationalFunction r = parse_factor();
        for (;;) {
            if (eat('*')) {
                r *= parse_factor();
            } else if (eat('/')) {
                RationalFunction d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero in expression");
                r /= d;
            } else {
                return r;
            }
        }
    }

    RationalFunction parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        RationalFunction base = parse_primary();
        if (eat('^')) {
            bool neg = eat('-');
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent after '^'");
            int e = std::stoi(digits);
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            out += s[pos++];
        return out;
    }

    RationalFunction parse_primary() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression");
        if (eat('(')) {
            RationalFunction r = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'");
            return r;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            return RationalFunction::constant(vs, Rational(Int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name += s[pos++];
            for (int i = 0; i < var_count(vs); ++i)
                if (name == var_name(vs, i)) return RationalFunction::variable(vs, i);
            throw ParseError("unknown variable '" + name + "'");
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RationalFunction parse_ratfun(const std::string& text, VarSet vs) {
    Parser p{text, 0, vs};
    RationalFunction r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input after expression");
    return r;
}

}  // namespace jue
