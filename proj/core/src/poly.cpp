#include "cremona/poly.hpp"

#include <sstream>

namespace cremona {

Poly Poly::constant(RingPtr ring, const Coeff& c) {
    Poly p(std::move(ring));
    if (!c_is_zero(c)) p.terms_.emplace(Monomial::one(p.ring_->nvars()), c);
    return p;
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Coeff& c) {
    Poly p(std::move(ring));
    if (m.nvars() != p.ring_->nvars()) throw DomainError("monomial arity mismatch");
    if (!c_is_zero(c)) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    Poly p(std::move(ring));
    p.terms_.emplace(Monomial::var(p.ring_->nvars(), i), c_one(p.ring_->dom));
    return p;
}

Poly Poly::from_int(RingPtr ring, std::int64_t v) {
    const Domain d = ring->dom;
    return constant(std::move(ring), c_from_int(d, v));
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           c_eq(terms_.begin()->second, c_one(dom()));
}

std::int64_t Poly::degree() const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::int64_t Poly::degree_in(std::size_t var) const {
    std::int64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m.e[var]);
    return d;
}

Coeff Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? c_zero(dom()) : it->second;
}

void Poly::add_term(const Monomial& m, const Coeff& c) {
    if (c_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Coeff s = c_add(dom(), it->second, c);
        if (c_is_zero(s))
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw DomainError("ring mismatch in +");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw DomainError("ring mismatch in -");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c_neg(dom(), c));
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c_neg(dom(), c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw DomainError("ring mismatch in *");
    Poly r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.mul(m2), c_mul(dom(), c1, c2));
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || !c_eq(it->second, jt->second)) return false;
    }
    return true;
}

Poly Poly::scalar_mul(const Coeff& c) const {
    Poly r(ring_);
    if (c_is_zero(c)) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, c_mul(dom(), cc, c));
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Coeff& c) const {
    Poly r(ring_);
    if (c_is_zero(c)) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm.mul(m), c_mul(dom(), cc, c));
    return r;
}

Poly Poly::pow(std::uint32_t k) const {
    Poly r = Poly::constant(ring_, c_one(dom()));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial mm = m;
        Coeff cc = c_mul(dom(), c, c_from_int(dom(), m.e[var]));
        mm.e[var] -= 1;
        r.add_term(mm, cc);
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
    if (o.is_zero()) return std::nullopt;
    Poly rem = *this;
    Poly quot(ring_);
    const auto& [lm, lc] = *o.terms_.begin(); // lex lead of divisor
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        auto q = rm.div(lm);
        if (!q) return std::nullopt;
        Coeff qc = c_div(dom(), rc, lc);
        quot.add_term(*q, qc);
        rem = rem - o.mul_term(*q, qc);
    }
    return quot;
}

std::optional<Poly> Poly::divide_by_monomial(const Monomial& m) const {
    Poly r(ring_);
    for (const auto& [mm, cc] : terms_) {
        auto q = mm.div(m);
        if (!q) return std::nullopt;
        r.terms_.emplace(*q, cc);
    }
    return r;
}

std::vector<bool> Poly::support() const {
    std::vector<bool> s(ring_->nvars(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) s[i] = true;
    return s;
}

std::pair<Monomial, Coeff> Poly::lead(const TermOrder& ord) const {
    if (terms_.empty()) throw DomainError("lead term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Poly Poly::monic(const TermOrder& ord) const {
    if (is_zero()) return *this;
    auto [m, c] = lead(ord);
    return scalar_mul(c_inv(dom(), c));
}

Poly Poly::subst(const std::vector<Poly>& args) const {
    if (args.size() != ring_->nvars()) throw DomainError("subst arity mismatch");
    RingPtr target = args.front().ring();
    // cache powers of each argument
    std::vector<std::vector<Poly>> pows(args.size());
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c_one(target->dom));
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            std::int32_t k = m.e[i];
            if (k == 0) continue;
            auto& cache = pows[i];
            if (cache.empty()) cache.push_back(args[i]);
            while (static_cast<std::int32_t>(cache.size()) < k) cache.push_back(cache.back() * args[i]);
            t = t * cache[static_cast<std::size_t>(k) - 1];
        }
        r = r + t.scalar_mul(c);
    }
    return r;
}

Coeff Poly::eval(const std::vector<Coeff>& point) const {
    if (point.size() != ring_->nvars()) throw DomainError("eval arity mismatch");
    Coeff acc = c_zero(dom());
    for (const auto& [m, c] : terms_) {
        Coeff t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (std::int32_t k = 0; k < m.e[i]; ++k) t = c_mul(dom(), t, point[i]);
        acc = c_add(dom(), acc, t);
    }
    return acc;
}

Poly Poly::map_domain(const Domain& to) const {
    if (to == dom()) return *this;
    RingPtr target = with_domain(ring_, to);
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Coeff cc;
        if (dom().is_rational()) {
            cc = c_from_mpq(to, std::get<mpq_class>(c));
        } else if (to.is_rational()) {
            cc = mpq_class(static_cast<long>(std::get<std::int64_t>(c)));
        } else {
            throw DomainError("unsupported domain map " + dom().name() + " -> " + to.name());
        }
        r.add_term(m, cc);
    }
    return r;
}

Poly Poly::map_vars(const RingPtr& to, const std::vector<std::size_t>& var_map) const {
    if (var_map.size() != ring_->nvars()) throw DomainError("var map arity mismatch");
    if (!(to->dom == dom())) throw DomainError("map_vars cannot change domain");
    Poly r(to);
    for (const auto& [m, c] : terms_) {
        Monomial mm = Monomial::one(to->nvars());
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (var_map[i] >= to->nvars()) throw DomainError("variable " + ring_->vars[i] + " has no image");
            mm.e[var_map[i]] += m.e[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c_to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool coeff_is_one = (cs == "1");
        if (m.is_one()) {
            os << cs;
            continue;
        }
        bool wrote = false;
        if (!coeff_is_one) {
            os << cs;
            wrote = true;
        }
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (wrote) os << "*";
            os << ring_->vars[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace cremona
