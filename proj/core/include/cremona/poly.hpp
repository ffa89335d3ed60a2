#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/monomial.hpp"
#include "cremona/order.hpp"
#include "cremona/ring.hpp"

namespace cremona {

// Sparse multivariate polynomial over an exact field. Not necessarily
// homogeneous; the homogeneous wrapper lives in form.hpp. Terms are kept
// in descending lex order and never store a zero coefficient.
class Poly {
public:
    using TermMap = std::map<Monomial, Coeff, LexGreater>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Coeff& c);
    static Poly term(RingPtr ring, const Monomial& m, const Coeff& c);
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly from_int(RingPtr ring, std::int64_t v);

    const RingPtr& ring() const { return ring_; }
    const Domain& dom() const { return ring_->dom; }
    const TermMap& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;

    // -1 for the zero polynomial
    std::int64_t degree() const;
    bool is_homogeneous() const;
    std::int64_t degree_in(std::size_t var) const;

    // coefficient of a monomial (zero coeff if absent)
    Coeff coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Coeff& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;

    Poly scalar_mul(const Coeff& c) const;
    Poly mul_term(const Monomial& m, const Coeff& c) const;
    Poly pow(std::uint32_t k) const;
    Poly derivative(std::size_t var) const;

    // exact division; nullopt when `o` does not divide exactly
    std::optional<Poly> divide_exact(const Poly& o) const;
    std::optional<Poly> divide_by_monomial(const Monomial& m) const;

    // variables that occur in some term
    std::vector<bool> support() const;

    // lead term w.r.t. an arbitrary order (linear scan; engine code keeps
    // its own sorted views)
    std::pair<Monomial, Coeff> lead(const TermOrder& ord) const;
    Poly monic(const TermOrder& ord) const;

    // composition: substitute args[i] for variable i; args live in a common
    // ring which becomes the result ring
    Poly subst(const std::vector<Poly>& args) const;
    Coeff eval(const std::vector<Coeff>& point) const;

    // ring plumbing
    Poly map_domain(const Domain& to) const;
    // reinterpret over `to`, sending variable i to to-variable var_map[i]
    Poly map_vars(const RingPtr& to, const std::vector<std::size_t>& var_map) const;

    std::string str() const; // grammar-compatible text, lex-descending

private:
    RingPtr ring_;
    TermMap terms_;
};

} // namespace cremona
