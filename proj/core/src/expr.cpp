#include "reflectk/expr.hpp"

#include <cctype>
#include <sstream>

namespace reflectk {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Scalar parse() {
        Scalar out = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at offset " + std::to_string(pos_ + 1) + ": " + msg,
                         pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = signed_factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * signed_factor();
            } else if (eat('/')) {
                Scalar d = signed_factor();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Scalar signed_factor() {
        int sign = 1;
        for (;;) {
            if (eat('-'))
                sign = -sign;
            else if (eat('+'))
                ;
            else
                break;
        }
        Scalar f = factor();
        return sign < 0 ? -f : f;
    }

    Scalar factor() {
        Scalar base = atom();
        while (eat('^')) {
            int e = exponent();
            base = base.pow(e);
        }
        return base;
    }

    int exponent() {
        skip_ws();
        bool paren = eat('(');
        int sign = 1;
        if (eat('-')) sign = -1;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        long val = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            val = val * 10 + (text_[pos_] - '0');
            if (val > 100000) fail("exponent too large");
            ++pos_;
        }
        if (paren && !eat(')')) fail("expected ')'");
        return static_cast<int>(sign * val);
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt val = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                val = val * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return Scalar(val);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "q") {
                // q == -s^2
                return -Scalar::var(names::s(), 2);
            }
            if (!names::is_registry_name(name)) {
                pos_ = start;
                fail("unknown name '" + std::string(name) + "'");
            }
            return Scalar::var(names::intern(name));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

void print_monomial(std::ostream& os, const Monomial& m, bool lead_star) {
    bool first = !lead_star;
    for (const auto& [id, e] : m.powers()) {
        if (!first) os << '*';
        first = false;
        os << names::str(id);
        if (e != 1) os << '^' << e;
    }
}

void print_poly(std::ostream& os, const Poly& p) {
    if (p.is_zero()) {
        os << '0';
        return;
    }
    bool first = true;
    p.for_each([&](const Monomial& m, const BigInt& c) {
        BigInt coef = c;
        if (first) {
            if (coef < 0) {
                os << '-';
                coef = -coef;
            }
        } else {
            os << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        first = false;
        if (m.is_one()) {
            os << coef;
        } else {
            if (coef != 1) {
                os << coef;
                print_monomial(os, m, true);
            } else {
                print_monomial(os, m, false);
            }
        }
    });
}

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Poly& p) {
    std::ostringstream os;
    print_poly(os, p);
    return os.str();
}

std::string to_string(const Scalar& x) {
    std::ostringstream os;
    if (x.den().is_one()) {
        print_poly(os, x.num());
    } else {
        os << '(';
        print_poly(os, x.num());
        os << ")/(";
        print_poly(os, x.den());
        os << ')';
    }
    return os.str();
}

}  // namespace reflectk
