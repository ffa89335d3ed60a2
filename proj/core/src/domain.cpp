#include "cremona/domain.hpp"

namespace cremona {

Domain Domain::prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) throw DomainError("prime field modulus must be an odd prime, got " + std::to_string(p));
    return Domain{FieldKind::Prime, p};
}

std::string Domain::name() const {
    return is_rational() ? "QQ" : "F" + std::to_string(p);
}

namespace {

std::int64_t norm_mod(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

mpq_class canon(mpq_class v) {
    v.canonicalize();
    return v;
}

} // namespace

Coeff c_zero(const Domain& d) {
    if (d.is_rational()) return mpq_class(0);
    return std::int64_t(0);
}

Coeff c_one(const Domain& d) {
    if (d.is_rational()) return mpq_class(1);
    return std::int64_t(1);
}

Coeff c_from_int(const Domain& d, std::int64_t v) {
    if (d.is_rational()) return mpq_class(static_cast<long>(v));
    return norm_mod(v, d.p);
}

Coeff c_from_mpq(const Domain& d, const mpq_class& v) {
    if (d.is_rational()) return canon(v);
    return mod_reduce(v, d.p);
}

bool c_is_zero(const Coeff& a) {
    if (const auto* q = std::get_if<mpq_class>(&a)) return sgn(*q) == 0;
    return std::get<std::int64_t>(a) == 0;
}

bool c_eq(const Coeff& a, const Coeff& b) {
    if (a.index() != b.index()) return false;
    if (const auto* q = std::get_if<mpq_class>(&a)) return *q == std::get<mpq_class>(b);
    return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
}

Coeff c_add(const Domain& d, const Coeff& a, const Coeff& b) {
    if (d.is_rational()) return canon(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    return norm_mod(std::get<std::int64_t>(a) + std::get<std::int64_t>(b), d.p);
}

Coeff c_sub(const Domain& d, const Coeff& a, const Coeff& b) {
    if (d.is_rational()) return canon(std::get<mpq_class>(a) - std::get<mpq_class>(b));
    return norm_mod(std::get<std::int64_t>(a) - std::get<std::int64_t>(b), d.p);
}

Coeff c_mul(const Domain& d, const Coeff& a, const Coeff& b) {
    if (d.is_rational()) return canon(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    return norm_mod(std::get<std::int64_t>(a) * std::get<std::int64_t>(b), d.p);
}

Coeff c_neg(const Domain& d, const Coeff& a) {
    if (d.is_rational()) return mpq_class(-std::get<mpq_class>(a));
    return norm_mod(-std::get<std::int64_t>(a), d.p);
}

Coeff c_inv(const Domain& d, const Coeff& a) {
    if (c_is_zero(a)) throw DomainError("division by zero coefficient");
    if (d.is_rational()) return canon(1 / std::get<mpq_class>(a));
    return mod_inv(std::get<std::int64_t>(a), d.p);
}

Coeff c_div(const Domain& d, const Coeff& a, const Coeff& b) {
    return c_mul(d, a, c_inv(d, b));
}

bool c_is_integer(const Coeff& a) {
    if (const auto* q = std::get_if<mpq_class>(&a)) return q->get_den() == 1;
    return true;
}

std::string c_to_string(const Coeff& a) {
    if (const auto* q = std::get_if<mpq_class>(&a)) return q->get_str();
    return std::to_string(std::get<std::int64_t>(a));
}

std::int64_t mod_reduce(const mpq_class& a, std::int64_t p) {
    mpz_class num = a.get_num() % p;
    mpz_class den = a.get_den() % p;
    std::int64_t n = norm_mod(num.get_si(), p);
    std::int64_t m = norm_mod(den.get_si(), p);
    if (m == 0) throw DomainError("bad prime " + std::to_string(p) + ": denominator vanishes");
    return norm_mod(n * mod_inv(m, p), p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a = norm_mod(a, p);
    if (a == 0) throw DomainError("zero is not invertible mod " + std::to_string(p));
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t qt = r / new_r;
        std::int64_t tmp = t - qt * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - qt * new_r;
        r = new_r;
        new_r = tmp;
    }
    return norm_mod(t, p);
}

} // namespace cremona
