#include "cremona/form.hpp"
#include "cremona/groebner.hpp"

namespace cremona {

namespace {

// univariate coefficient vectors c[0..d] for a binary form sum c_i x^(d-i) y^i
std::vector<Coeff> binary_coeffs(const Poly& p, std::int64_t d) {
    std::vector<Coeff> c(static_cast<std::size_t>(d) + 1, c_zero(p.dom()));
    for (const auto& [m, cc] : p.terms()) c[static_cast<std::size_t>(m.e[1])] = cc;
    return c;
}

std::vector<Coeff> trim(std::vector<Coeff> v) {
    while (!v.empty() && c_is_zero(v.back())) v.pop_back();
    return v;
}

// univariate gcd by Euclid, monic; coefficients indexed by ascending degree
std::vector<Coeff> uni_gcd(const Domain& dom, std::vector<Coeff> a, std::vector<Coeff> b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Coeff q = c_div(dom, a.back(), b.back());
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = c_sub(dom, a[shift + i], c_mul(dom, q, b[i]));
            a = trim(std::move(a));
        }
        std::swap(a, b);
    }
    a = trim(std::move(a));
    if (!a.empty()) {
        Coeff inv = c_inv(dom, a.back());
        for (auto& c : a) c = c_mul(dom, c, inv);
    }
    return a;
}

// gcd of two nonzero binary forms (nvars == 2), monic
Poly binary_gcd(const Poly& a, const Poly& b) {
    const RingPtr& ring = a.ring();
    const Domain& dom = a.dom();
    auto split = [&](const Poly& p) {
        std::int32_t px = p.terms().begin()->first.e[0], py = p.terms().begin()->first.e[1];
        for (const auto& [m, c] : p.terms()) {
            px = std::min(px, m.e[0]);
            py = std::min(py, m.e[1]);
        }
        Monomial content = Monomial::one(2);
        content.e[0] = px;
        content.e[1] = py;
        return std::pair<Monomial, Poly>(content, *p.divide_by_monomial(content));
    };
    auto [ca, ra] = split(a);
    auto [cb, rb] = split(b);
    // after stripping x/y content, dehomogenize at x = 1: nonzero constant term
    std::int64_t da = ra.degree(), db = rb.degree();
    auto g = uni_gcd(dom, binary_coeffs(ra, da), binary_coeffs(rb, db));
    Poly core = Poly::zero(ring);
    std::int64_t dg = static_cast<std::int64_t>(g.size()) - 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Monomial m = Monomial::one(2);
        m.e[0] = static_cast<std::int32_t>(dg - static_cast<std::int64_t>(i));
        m.e[1] = static_cast<std::int32_t>(i);
        core.add_term(m, g[i]);
    }
    return core.mul_term(ca.gcd(cb), c_one(dom));
}

// deterministic pseudo-random small integers for restriction lines
struct TinyRng {
    std::uint64_t s;
    std::int64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::int64_t>((s >> 33) % 19) - 9;
    }
};

// a common random plane x_i = alpha_i s + beta_i u for both restrictions
std::vector<Poly> random_line(std::size_t nvars, const RingPtr& line_ring, TinyRng& rng) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < nvars; ++i) {
        Poly s = Poly::variable(line_ring, 0).scalar_mul(c_from_int(line_ring->dom, rng.next()));
        Poly u = Poly::variable(line_ring, 1).scalar_mul(c_from_int(line_ring->dom, rng.next()));
        images.push_back(s + u);
    }
    return images;
}

// sound one-sided certificate that gcd(a, b) == 1: a nontrivial common
// factor survives restriction to a plane on which neither form vanishes
bool certify_coprime(const Poly& a, const Poly& b) {
    RingPtr line = make_ring({"@s", "@u"}, a.dom());
    TinyRng rng{0x9e3779b97f4a7c15ull ^ (a.ring()->nvars() * 0x100000001b3ull)};
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Poly> images = random_line(a.ring()->nvars(), line, rng);
        Poly ra = a.subst(images);
        Poly rb = b.subst(images);
        if (ra.is_zero() || rb.is_zero()) continue;
        Poly g = binary_gcd(ra, rb);
        if (g.is_constant()) return true;
    }
    return false;
}

Poly poly_gcd(const Poly& a, const Poly& b);

// lcm from the elimination ideal of (t a, (1-t) b), then gcd = a b / lcm
Poly gcd_by_elimination(const Poly& a, const Poly& b) {
    const RingPtr& ring = a.ring();
    RingPtr ext = extend_ring(ring, "@t");
    std::vector<std::size_t> lift(ring->nvars());
    for (std::size_t i = 0; i < lift.size(); ++i) lift[i] = i;
    const std::size_t tvar = ext->nvars() - 1;
    Poly t = Poly::variable(ext, tvar);
    Poly one_minus_t = Poly::from_int(ext, 1) - t;
    Ideal J{ext, {t * a.map_vars(ext, lift), one_minus_t * b.map_vars(ext, lift)}};
    Ideal meet = eliminate(J, {tvar});
    // (a) ∩ (b) is principal, generated by lcm(a, b)
    Poly lcm = Poly::zero(ring);
    std::vector<std::size_t> back(ring->nvars());
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = i;
    for (const auto& g : meet.gens) {
        if (g.is_zero()) continue;
        if (!lcm.is_zero()) throw Error("lcm elimination returned a non-principal ideal");
        lcm = g.map_vars(ring, back);
    }
    if (lcm.is_zero()) throw Error("lcm elimination returned the zero ideal");
    auto q = (a * b).divide_exact(lcm);
    if (!q) throw Error("gcd: a*b not divisible by lcm(a,b)");
    return *q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    const Domain& dom = a.dom();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly::from_int(a.ring(), 1);

    // split off monomial content first
    auto mono_content = [](const Poly& p) {
        auto it = p.terms().begin();
        Monomial c = it->first;
        for (++it; it != p.terms().end(); ++it) c = c.gcd(it->first);
        return c;
    };
    Monomial ca = mono_content(a), cb = mono_content(b);
    Monomial common = ca.gcd(cb);
    Poly ra = *a.divide_by_monomial(ca);
    Poly rb = *b.divide_by_monomial(cb);

    Poly core;
    if (ra.is_constant() || rb.is_constant()) {
        core = Poly::from_int(a.ring(), 1);
    } else if (a.ring()->nvars() == 2) {
        core = binary_gcd(ra, rb);
    } else if (certify_coprime(ra, rb)) {
        core = Poly::from_int(a.ring(), 1);
    } else {
        core = gcd_by_elimination(ra, rb);
    }
    return core.mul_term(common, c_one(dom));
}

} // namespace

Form gcd_pair(const Form& a, const Form& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("gcd: ring mismatch");
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of zero forms");
    Poly g = poly_gcd(a.poly(), b.poly());
    return Form::from_poly(g.monic(TermOrder::lex()));
}

Form gcd_set(const std::vector<Form>& forms) {
    if (forms.empty()) throw DomainError("gcd of an empty set");
    std::optional<Form> acc;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        if (!acc) {
            acc = f.monic_lex();
        } else {
            acc = gcd_pair(*acc, f);
        }
        if (!acc->is_zero() && acc->degree() == 0) break; // gcd is already 1
    }
    if (!acc) throw DomainError("gcd of an all-zero set");
    return *acc;
}

} // namespace cremona
