#include "cremona/text.hpp"

#include <cctype>

namespace cremona {

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        Poly acc = product();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + product();
            } else if (c == '-') {
                ++pos_;
                acc = acc - product();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly product() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            std::int64_t k = natural();
            if (k < 1) fail("exponent must be >= 1");
            if (k > 1024) fail("exponent too large");
            return base.pow(static_cast<std::uint32_t>(k));
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("expected number, variable or '('");
    }

    std::int64_t natural() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 18) fail("integer literal too large");
        return std::stoll(digits);
    }

    Poly number() {
        mpz_class num(read_digits());
        if (accept('/')) {
            skip_ws();
            mpz_class den(read_digits());
            if (den == 0) fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return Poly::constant(ring_, c_from_mpq(ring_->dom, q));
        }
        return Poly::constant(ring_, c_from_mpq(ring_->dom, mpq_class(num)));
    }

    std::string read_digits() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected digits");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Poly variable() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        auto idx = ring_->var_index(name);
        if (!idx) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return Poly::variable(ring_, *idx);
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace cremona
