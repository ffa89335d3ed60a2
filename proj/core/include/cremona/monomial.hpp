#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cremona {

// Exponent vector. Length always equals the number of ring variables.
struct Monomial {
    std::vector<std::int32_t> e;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::int32_t>(nvars, 0)}; }
    static Monomial var(std::size_t nvars, std::size_t i, std::int32_t k = 1) {
        Monomial m = one(nvars);
        m.e[i] = k;
        return m;
    }

    std::size_t nvars() const { return e.size(); }
    std::int64_t degree() const;
    bool is_one() const;

    Monomial mul(const Monomial& o) const;
    // exact division; nullopt when o does not divide *this
    std::optional<Monomial> div(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial&) const = default;
};

// 1 if a > b, -1 if a < b, 0 if equal; plain lexicographic on exponents
// with earlier variables dominating.
int lex_cmp(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_cmp(a, b) > 0; }
};

} // namespace cremona
