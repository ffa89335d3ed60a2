#pragma once

#include <string>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

// Homogeneous polynomial. The zero form keeps an explicit degree tag so
// that addition of forms of equal degree stays total.
class Form {
public:
    Form() = default;

    static Form zero(RingPtr ring, std::int64_t degree);
    // throws DomainError when p is not homogeneous
    static Form from_poly(const Poly& p);
    static Form from_poly(const Poly& p, std::int64_t degree_if_zero);

    const Poly& poly() const { return p_; }
    const RingPtr& ring() const { return p_.ring(); }
    std::int64_t degree() const { return degree_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_monomial() const { return p_.is_monomial(); }

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Form& o) const;
    bool operator==(const Form& o) const;

    Form scalar_mul(const Coeff& c) const;
    Form derivative(std::size_t var) const;
    Form divide_by_monomial(const Monomial& m) const; // throws on non-divisible term
    Form monic_lex() const;

    std::string str() const { return p_.str(); }

private:
    Poly p_;
    std::int64_t degree_ = 0;
};

// parse text against the grammar and require homogeneity
Form parse_form(const std::string& text, const RingPtr& ring);
std::string print_form(const Form& f);

// gcd of two forms via f*g / lcm(f,g), lcm from the elimination ideal of
// (t*f, (1-t)*g); result is monic in lex order. Implemented in gcd.cpp on
// top of the groebner engine, with cheap exact shortcuts.
Form gcd_pair(const Form& a, const Form& b);

// gcd of a set; throws DomainError on all-zero input
Form gcd_set(const std::vector<Form>& forms);

} // namespace cremona
