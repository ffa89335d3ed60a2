#include "cremona/corpus.hpp"

#include <algorithm>

namespace cremona {

Monomial random_monomial(Rng& rng, std::size_t nvars, std::int64_t degree) {
    Monomial m = Monomial::one(nvars);
    for (std::int64_t k = 0; k < degree; ++k) m.e[rng.below(nvars)] += 1;
    return m;
}

Form random_form(Rng& rng, const RingPtr& ring, std::int64_t degree, std::size_t max_terms) {
    const std::size_t nterms = 1 + rng.below(max_terms);
    Poly p(ring);
    for (std::size_t t = 0; t < nterms || p.is_zero(); ++t) {
        if (t > nterms + 16) break;
        Monomial m = random_monomial(rng, ring->nvars(), degree);
        p.add_term(m, c_from_int(ring->dom, rng.nonzero_range(-3, 3)));
    }
    if (p.is_zero()) p = Poly::term(ring, random_monomial(rng, ring->nvars(), degree), c_one(ring->dom));
    return Form::from_poly(p, degree);
}

namespace {

void enumerate_degree(std::size_t nvars, std::int64_t deg, Monomial& cur, std::size_t var,
                      std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur.e[var] = static_cast<std::int32_t>(deg);
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (std::int64_t k = deg; k >= 0; --k) {
        cur.e[var] = static_cast<std::int32_t>(k);
        enumerate_degree(nvars, deg - k, cur, var + 1, out);
    }
    cur.e[var] = 0;
}

} // namespace

Form random_dense_form(Rng& rng, const RingPtr& ring, std::int64_t degree) {
    std::vector<Monomial> monos;
    Monomial cur = Monomial::one(ring->nvars());
    enumerate_degree(ring->nvars(), degree, cur, 0, monos);
    Poly p(ring);
    for (const auto& m : monos) p.add_term(m, c_from_int(ring->dom, rng.nonzero_range(-5, 5)));
    return Form::from_poly(p, degree);
}

RationalMap random_canonical_map(Rng& rng, const RingPtr& ring, std::size_t nforms, std::int64_t degree,
                                 std::size_t max_terms) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Form> forms;
        for (std::size_t j = 0; j < nforms; ++j) forms.push_back(random_form(rng, ring, degree, max_terms));
        RationalMap map = make_map(std::move(forms));
        if (check_canonical(map).ok()) return map;
    }
    throw CertificationError("random_canonical_map: no admissible draw");
}

namespace {

// monomials of a given degree, descending lex
std::vector<Monomial> all_monomials(std::size_t nvars, std::int64_t degree) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(nvars);
    // recursive enumeration
    struct Rec {
        std::size_t nvars;
        std::vector<Monomial>& out;
        Monomial& cur;
        void go(std::size_t var, std::int64_t left) {
            if (var + 1 == nvars) {
                cur.e[var] = static_cast<std::int32_t>(left);
                out.push_back(cur);
                cur.e[var] = 0;
                return;
            }
            for (std::int64_t k = left; k >= 0; --k) {
                cur.e[var] = static_cast<std::int32_t>(k);
                go(var + 1, left - k);
            }
            cur.e[var] = 0;
        }
    };
    Rec{nvars, out, cur}.go(0, degree);
    return out;
}

} // namespace

std::vector<RationalMap> monomial_quadratic_cremona_p2() {
    RingPtr ring = make_ring({"x", "y", "z"});
    auto monos = all_monomials(3, 2); // 6 of them
    std::vector<RationalMap> out;
    for (std::size_t a = 0; a < monos.size(); ++a)
        for (std::size_t b = a + 1; b < monos.size(); ++b)
            for (std::size_t c = b + 1; c < monos.size(); ++c) {
                std::vector<Form> forms;
                for (const auto& m : {monos[a], monos[b], monos[c]})
                    forms.push_back(Form::from_poly(Poly::term(ring, m, c_one(ring->dom))));
                RationalMap map = make_map(std::move(forms));
                if (!check_canonical(map).ok()) continue;
                if (certified(is_monomial_cremona(map))) out.push_back(map);
            }
    return out;
}

std::vector<RationalMap> seeded_monomial_cremona(std::size_t n_plus_1, std::int64_t max_degree,
                                                 std::size_t count, std::uint64_t seed) {
    RingPtr ring = make_ring_x(n_plus_1);
    std::vector<RationalMap> out;

    // Magnus involution
    {
        std::vector<Form> forms;
        for (std::size_t j = 0; j < n_plus_1; ++j) {
            Monomial m = Monomial::one(n_plus_1);
            for (std::size_t i = 0; i < n_plus_1; ++i)
                if (i != j) m.e[i] = 1;
            forms.push_back(Form::from_poly(Poly::term(ring, m, c_one(ring->dom))));
        }
        out.push_back(make_map(std::move(forms)));
    }
    // coordinate permutations (a few deterministic ones)
    {
        std::vector<std::size_t> perm(n_plus_1);
        for (std::size_t i = 0; i < n_plus_1; ++i) perm[i] = (i + 1) % n_plus_1;
        std::vector<Form> forms;
        for (std::size_t j = 0; j < n_plus_1; ++j)
            forms.push_back(Form::from_poly(Poly::variable(ring, perm[j])));
        out.push_back(make_map(std::move(forms)));
    }

    Rng rng = Rng(seed).fork(0xc0);
    int guard = 0;
    while (out.size() < count && guard++ < 100000) {
        std::int64_t d = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_degree)));
        std::vector<Form> forms;
        for (std::size_t j = 0; j < n_plus_1; ++j) {
            Monomial m = random_monomial(rng, n_plus_1, d);
            forms.push_back(Form::from_poly(Poly::term(ring, m, c_one(ring->dom))));
        }
        RationalMap map = make_map(std::move(forms));
        if (!check_canonical(map).ok()) continue;
        if (!certified(is_monomial_cremona(map))) continue;
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const RationalMap& m) { return maps_equal(m, map); });
        if (!dup) out.push_back(map);
    }
    if (out.size() < count)
        throw CertificationError("seeded_monomial_cremona: could not reach the requested count");
    return out;
}

DeJonquieresData random_dejonquieres(Rng& rng, std::int64_t d, bool allow_zero_h) {
    RingPtr xy = make_ring({"x", "y"});
    for (int attempt = 0; attempt < 512; ++attempt) {
        DeJonquieresData data;
        data.ring_xy = xy;
        data.d = d;
        data.g = random_form(rng, xy, d - 1, 3);
        bool zero_h = allow_zero_h && rng.below(3) == 0;
        data.h = zero_h ? Form::zero(xy, d - 2) : random_form(rng, xy, d - 2, 3);
        data.f0 = random_form(rng, xy, d, 3);
        data.f1 = random_form(rng, xy, d - 1, 3);
        try {
            data.validate();
            return data;
        } catch (const DomainError&) {
            // redraw
        }
    }
    throw CertificationError("random_dejonquieres: no admissible draw");
}

std::vector<RationalMap> seeded_birational_maps(std::size_t count, std::uint64_t seed,
                                                const DegreeOptions& opt) {
    std::vector<RationalMap> out;
    Rng rng = Rng(seed).fork(0xb1);

    auto p2 = monomial_quadratic_cremona_p2();
    std::size_t kind = 0;
    int guard = 0;
    while (out.size() < count && guard++ < 10000) {
        try {
            switch (kind++ % 6) {
                case 0: { // de Jonquieres on P^2
                    std::int64_t d = 2 + static_cast<std::int64_t>(rng.below(3));
                    out.push_back(dejonquieres(random_dejonquieres(rng, d), opt).map);
                    break;
                }
                case 1: { // monomial quadratic Cremona of P^2
                    out.push_back(p2[rng.below(p2.size())]);
                    break;
                }
                case 2: { // plane family base
                    long d = 2 + static_cast<long>(rng.below(3));
                    out.push_back(family(2, 2, d, true, rng.next(), opt).map);
                    break;
                }
                case 3: { // monoid append to P^3
                    long d = 2 + static_cast<long>(rng.below(2));
                    FamilyResult base = family(2, 2, d, false, rng.next(), opt);
                    Form top = random_form(rng, base.map.ring, d - 1, 2);
                    MonoidForm g = monoid_from_coeffs(base.map.ring, d,
                                                      {top, Form::zero(base.map.ring, d)});
                    out.push_back(iterate_append(base.map, g, opt).map);
                    break;
                }
                case 4: { // monomial Cremona of P^3
                    auto ms = seeded_monomial_cremona(4, 3, 3, rng.next());
                    out.push_back(ms[rng.below(ms.size())]);
                    break;
                }
                case 5: { // P^2 -> P^3 with a genuine image hypersurface
                    auto base = map_from_strings(make_ring_x(2), {"x0^2", "x0*x1", "x1^2"});
                    Form f = random_form(rng, base.ring, 1, 2);
                    Poly a = base.forms[rng.below(3)].poly();
                    Poly b = base.forms[rng.below(3)].poly() *
                             random_form(rng, base.ring, 1, 2).poly();
                    MonoidForm g = monoid_from_coeffs(base.ring, 3,
                                                      {Form::from_poly(a, 2), Form::from_poly(b, 3)});
                    auto res = monoid_multiply(base, f, g, opt);
                    if (res.accepted) out.push_back(res.map);
                    break;
                }
            }
        } catch (const Error&) {
            // redraw a different kind
        }
    }
    if (out.size() < count) throw CertificationError("seeded_birational_maps: generation stalled");
    return out;
}

} // namespace cremona
