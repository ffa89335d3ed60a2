#include "cremona/form.hpp"

#include "cremona/text.hpp"

namespace cremona {

Form Form::zero(RingPtr ring, std::int64_t degree) {
    Form f;
    f.p_ = Poly::zero(std::move(ring));
    f.degree_ = degree;
    return f;
}

Form Form::from_poly(const Poly& p) {
    if (!p.is_homogeneous()) throw DomainError("inhomogeneous polynomial: " + p.str());
    Form f;
    f.p_ = p;
    f.degree_ = p.is_zero() ? 0 : p.degree();
    return f;
}

Form Form::from_poly(const Poly& p, std::int64_t degree_if_zero) {
    Form f = from_poly(p);
    if (p.is_zero()) f.degree_ = degree_if_zero;
    return f;
}

Form Form::operator+(const Form& o) const {
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw DomainError("degree mismatch in form addition: " + std::to_string(degree_) + " vs " +
                          std::to_string(o.degree_));
    std::int64_t d = is_zero() ? o.degree_ : degree_;
    return from_poly(p_ + o.p_, d);
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
    Form f;
    f.p_ = -p_;
    f.degree_ = degree_;
    return f;
}

Form Form::operator*(const Form& o) const {
    return from_poly(p_ * o.p_, degree_ + o.degree_);
}

bool Form::operator==(const Form& o) const {
    if (is_zero() && o.is_zero()) return degree_ == o.degree_ && same_ring(ring(), o.ring());
    return p_ == o.p_;
}

Form Form::scalar_mul(const Coeff& c) const {
    Form f;
    f.p_ = p_.scalar_mul(c);
    f.degree_ = degree_;
    return f;
}

Form Form::derivative(std::size_t var) const {
    return from_poly(p_.derivative(var), degree_ > 0 ? degree_ - 1 : 0);
}

Form Form::divide_by_monomial(const Monomial& m) const {
    auto q = p_.divide_by_monomial(m);
    if (!q) throw DomainError("monomial does not divide every term of " + p_.str());
    return from_poly(*q, degree_ - m.degree());
}

Form Form::monic_lex() const {
    if (is_zero()) return *this;
    return from_poly(p_.monic(TermOrder::lex()), degree_);
}

Form parse_form(const std::string& text, const RingPtr& ring) {
    return Form::from_poly(parse_poly(text, ring));
}

std::string print_form(const Form& f) { return f.str(); }

} // namespace cremona
