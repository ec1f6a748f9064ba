#include "qsym/exprparse.hpp"

#include <cctype>
#include <stdexcept>

#include "qsym/symbol.hpp"

namespace qsym {
namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression error at position " +
                                    std::to_string(pos) + ": " + msg);
    }

    RatFunc expr() {
        RatFunc v = eat('-') ? RatFunc(0) - term() : term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary() { return eat('-') ? RatFunc(0) - unary() : factor(); }

    RatFunc factor() {
        RatFunc v = primary();
        if (eat('^')) {
            long e = integer();
            if (v.is_zero() && e < 0) fail("zero raised to a negative power");
            v = v.pow(static_cast<int>(e));
        }
        return v;
    }

    long integer() {
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 10000) fail("exponent out of range");
            ++pos;
        }
        return neg ? -v : v;
    }

    RatFunc primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class z(s.substr(start, pos - start));
            return RatFunc(ExactPoly(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            auto& tb = SymbolTable::instance();
            Symbol sym = tb.has(name) ? tb.lookup(name) : tb.parameter(name);
            return RatFunc::variable(sym);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    std_syms();
    Parser p{text};
    RatFunc v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace qsym
