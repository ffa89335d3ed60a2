#include "cremona/monomial.hpp"

#include <algorithm>

namespace cremona {

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (auto k : e) d += k;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::int32_t k) { return k == 0; });
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

std::optional<Monomial> Monomial::div(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
        r.e[i] -= o.e[i];
        if (r.e[i] < 0) return std::nullopt;
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < o.e[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(r.e[i], o.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

} // namespace cremona
