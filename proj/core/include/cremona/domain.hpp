#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "cremona/errors.hpp"

namespace cremona {

enum class FieldKind { Rational, Prime };

// Coefficient field descriptor: the exact rationals, or F_p for an odd
// prime p selected at runtime. Elements carry no field tag of their own;
// every operation goes through a Domain.
struct Domain {
    FieldKind kind = FieldKind::Rational;
    std::int64_t p = 0;

    static Domain rational() { return Domain{FieldKind::Rational, 0}; }
    static Domain prime(std::int64_t p);

    bool is_rational() const { return kind == FieldKind::Rational; }
    bool operator==(const Domain&) const = default;

    std::string name() const;
};

// Rational values are kept canonical (lowest terms, positive denominator);
// prime-field values are representatives in [0, p).
using Coeff = std::variant<mpq_class, std::int64_t>;

Coeff c_zero(const Domain& d);
Coeff c_one(const Domain& d);
Coeff c_from_int(const Domain& d, std::int64_t v);
Coeff c_from_mpq(const Domain& d, const mpq_class& v);

bool c_is_zero(const Coeff& a);
bool c_eq(const Coeff& a, const Coeff& b);

Coeff c_add(const Domain& d, const Coeff& a, const Coeff& b);
Coeff c_sub(const Domain& d, const Coeff& a, const Coeff& b);
Coeff c_mul(const Domain& d, const Coeff& a, const Coeff& b);
Coeff c_neg(const Domain& d, const Coeff& a);
Coeff c_inv(const Domain& d, const Coeff& a);
Coeff c_div(const Domain& d, const Coeff& a, const Coeff& b);

// Integer-only representation check (used by log-matrix code).
bool c_is_integer(const Coeff& a);

std::string c_to_string(const Coeff& a);

// a mod p as a canonical representative; throws DomainError if the
// denominator of a rational vanishes mod p (a "bad prime").
std::int64_t mod_reduce(const mpq_class& a, std::int64_t p);

std::int64_t mod_inv(std::int64_t a, std::int64_t p);

} // namespace cremona
