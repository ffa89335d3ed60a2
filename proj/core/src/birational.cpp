#include "cremona/birational.hpp"

#include <algorithm>
#include <iostream>

#include "cremona/rng.hpp"

namespace cremona {

namespace {

const std::vector<std::int64_t> kEscalationPrimes = {32003, 65537, 1000003, 2000003, 4000037, 8000009};

struct TrialOutcome {
    bool ok = false;
    DegreeTrial trial;
};

// one fiber-degree measurement over F_p; resamples on unlucky points
TrialOutcome run_trial(const RationalMap& map, std::int64_t p, Rng& rng, const DegreeOptions& opt) {
    const std::size_t n1 = map.ring->nvars();
    Domain fp = Domain::prime(p);
    RingPtr ring_p = with_domain(map.ring, fp);

    std::vector<Poly> forms_p;
    for (const auto& f : map.forms) {
        Poly g = f.poly().map_domain(fp); // throws DomainError on a bad prime
        if (g.is_zero()) throw DomainError("form vanishes mod " + std::to_string(p));
        forms_p.push_back(std::move(g));
    }

    for (int attempt = 0; attempt < opt.resample_cap; ++attempt) {
        std::vector<std::int64_t> pt(n1);
        std::vector<Coeff> point(n1);
        for (std::size_t i = 0; i < n1; ++i) {
            pt[i] = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p - 1)));
            point[i] = pt[i];
        }
        std::vector<std::int64_t> b(forms_p.size());
        std::size_t j0 = forms_p.size();
        for (std::size_t j = 0; j < forms_p.size(); ++j) {
            b[j] = std::get<std::int64_t>(forms_p[j].eval(point));
            if (b[j] != 0 && j0 == forms_p.size()) j0 = j;
        }
        if (j0 == forms_p.size()) continue; // sampled inside the base locus

        // fiber: b_j0 f_i - b_i f_j0, base locus removed past f_j0
        std::vector<Poly> fiber;
        for (std::size_t i = 0; i < forms_p.size(); ++i) {
            if (i == j0) continue;
            Poly g = forms_p[i].scalar_mul(c_from_int(fp, b[j0])) -
                     forms_p[j0].scalar_mul(c_from_int(fp, b[i]));
            if (!g.is_zero()) fiber.push_back(std::move(g));
        }
        if (fiber.empty()) continue;
        Ideal J = saturate_single(Ideal{ring_p, fiber}, forms_p[j0], opt.budget);

        // random affine chart
        Poly chart = Poly::from_int(ring_p, -1);
        for (std::size_t i = 0; i < n1; ++i) {
            std::int64_t li = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p - 1)));
            chart = chart + Poly::variable(ring_p, i).scalar_mul(c_from_int(fp, li));
        }
        std::vector<Poly> cut = J.gens;
        cut.push_back(chart);
        GroebnerBasis gb = buchberger(Ideal{ring_p, cut}, GroebnerOptions{TermOrder::degrevlex(), opt.budget});
        auto qd = quotient_k_dimension(gb);
        if (!qd || *qd <= 0) continue; // positive-dimensional or empty: unlucky
        return TrialOutcome{true, DegreeTrial{p, pt, *qd}};
    }
    return TrialOutcome{};
}

} // namespace

DegreeCertificate topological_degree(const RationalMap& map, const DegreeOptions& opt) {
    if (map.degree < 1) throw DomainError("topological degree needs a nonconstant map");
    CanonicalReport rep = check_canonical(map);
    if (!rep.ok())
        throw CanonicalViolation("topological_degree requires canonical restrictions: " +
                                     rep.describe(map.ring),
                                 rep);

    std::vector<std::int64_t> primes = opt.primes;
    for (auto p : kEscalationPrimes)
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);

    for (int esc = 0; esc <= opt.escalation_cap; ++esc) {
        const int want = opt.trials + esc;
        Rng rng = Rng(opt.seed).fork(0xdeu + static_cast<std::uint64_t>(esc));
        std::vector<DegreeTrial> trials;
        std::size_t prime_idx = static_cast<std::size_t>(esc); // escalation shifts the prime window
        while (static_cast<int>(trials.size()) < want && prime_idx < primes.size()) {
            std::int64_t p = primes[prime_idx++];
            try {
                TrialOutcome out = run_trial(map, p, rng, opt);
                if (out.ok) trials.push_back(out.trial);
            } catch (const DomainError&) {
                // bad prime for these coefficients; move on
            }
        }
        if (static_cast<int>(trials.size()) < want) continue;
        bool agree = std::all_of(trials.begin(), trials.end(), [&](const DegreeTrial& t) {
            return t.fiber_degree == trials.front().fiber_degree;
        });
        if (agree) {
            DegreeCertificate cert;
            cert.method = "fiber-sampling";
            cert.degree = trials.front().fiber_degree;
            cert.trials = std::move(trials);
            cert.escalations = esc;
            return cert;
        }
        if (opt.verbose) {
            std::cerr << "[degree] trials disagree (";
            for (const auto& t : trials) std::cerr << " " << t.fiber_degree << "@" << t.prime;
            std::cerr << " ), escalating\n";
        }
    }
    throw CertificationError("topological_degree: trials kept disagreeing after escalation");
}

DegreeCertificate certify_degree(const RationalMap& map, const DegreeOptions& opt) {
    if (map.forms.size() == map.ring->nvars() &&
        std::all_of(map.forms.begin(), map.forms.end(), [](const Form& f) { return f.is_monomial(); })) {
        MonomialInvertResult res = is_monomial_cremona(map);
        if (certified(res)) {
            DegreeCertificate cert;
            cert.method = "monomial-exact";
            cert.degree = 1;
            return cert;
        }
    }
    return topological_degree(map, opt);
}

Ideal image_ideal(const RationalMap& map, std::uint64_t budget) {
    const std::size_t n1 = map.ring->nvars();
    const std::size_t m1 = map.forms.size();

    std::vector<std::string> vars = map.ring->vars;
    std::vector<std::string> yvars;
    for (std::size_t j = 0; j < m1; ++j) {
        std::string y = "y" + std::to_string(j);
        if (std::find(vars.begin(), vars.end(), y) != vars.end()) y = "@" + y;
        yvars.push_back(y);
        vars.push_back(y);
    }
    RingPtr big = make_ring(vars, map.ring->dom);

    std::vector<std::size_t> lift(n1);
    for (std::size_t i = 0; i < n1; ++i) lift[i] = i;

    std::vector<Poly> gens;
    for (std::size_t j = 0; j < m1; ++j)
        gens.push_back(Poly::variable(big, n1 + j) - map.forms[j].poly().map_vars(big, lift));

    std::vector<std::size_t> drop(n1);
    for (std::size_t i = 0; i < n1; ++i) drop[i] = i;
    Ideal img = eliminate(Ideal{big, std::move(gens)}, drop, budget);

    RingPtr target = make_ring(yvars, map.ring->dom);
    std::vector<std::size_t> ident(target->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
    std::vector<Poly> out;
    for (const auto& g : img.gens) out.push_back(g.map_vars(target, ident));
    if (out.empty()) out.push_back(Poly::zero(target));
    return Ideal{target, std::move(out)};
}

bool dual_preserves_image_relations(const RationalMap& map, std::uint64_t budget) {
    Ideal a = image_ideal(map, budget);
    Ideal b = image_ideal(newton_dual(map), budget);
    if (a.is_zero() && b.is_zero()) return true;
    return ideal_equal(a, b, GroebnerOptions{TermOrder::degrevlex(), budget});
}

Poly poly_det(const RingPtr& ring, const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::from_int(ring, 1);
    if (n == 1) return m[0][0];
    Poly acc = Poly::zero(ring);
    // expand along the first column
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Poly term = m[i][0] * poly_det(ring, sub);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

CmCertificate cm_certify(const Ideal& I, long expected_codim, std::uint64_t budget) {
    CmCertificate out;
    out.field_prime = I.ring->dom.is_rational() ? 0 : I.ring->dom.p;
    for (const auto& g : I.gens) {
        if (!g.is_homogeneous()) {
            out.refusal = "generators must be homogeneous";
            return out;
        }
        if (!g.is_zero() && g.is_constant()) {
            out.refusal = "unit ideal";
            return out;
        }
    }
    if (I.is_zero()) {
        out.refusal = "zero ideal";
        return out;
    }

    out.measured_codim = codimension(I, budget);
    if (!out.measured_codim) {
        out.refusal = "unit ideal (codim infinite)";
        return out;
    }
    if (*out.measured_codim != expected_codim) {
        out.refusal = "measured codim " + std::to_string(*out.measured_codim) + " != expected " +
                      std::to_string(expected_codim);
        return out;
    }

    FreeResolution res = free_resolution(I, I.ring->nvars() + 2, budget);
    if (!res.complete) {
        out.refusal = "resolution did not terminate within the variable count";
        return out;
    }
    if (!res.composes_to_zero() || !res.is_minimal() ) {
        out.refusal = "resolution failed internal validation";
        return out;
    }
    out.pd = res.pd();
    out.betti = res.betti();
    out.cm = (out.pd == *out.measured_codim);
    out.accepted = true;

    if (out.cm && *out.measured_codim == 2 && res.maps.size() >= 2) {
        PerfectCod2Certificate hb;
        hb.syz = res.maps[1];
        const GradedMatrix& phi = hb.syz;
        const auto& gens = res.maps[0].ent[0];
        bool match = phi.ncols() + 1 == phi.nrows() && gens.size() == phi.nrows();
        if (match) {
            // generators vs signed maximal minors, one global unit
            std::vector<Poly> minors;
            for (std::size_t i = 0; i < phi.nrows(); ++i) {
                std::vector<std::vector<Poly>> sub;
                for (std::size_t r = 0; r < phi.nrows(); ++r) {
                    if (r == i) continue;
                    sub.push_back(phi.ent[r]);
                }
                Poly mi = poly_det(I.ring, sub);
                if (i % 2 == 1) mi = -mi;
                minors.push_back(std::move(mi));
            }
            std::optional<Coeff> lambda;
            for (std::size_t i = 0; match && i < gens.size(); ++i) {
                if (minors[i].is_zero() != gens[i].is_zero()) {
                    match = false;
                    break;
                }
                if (minors[i].is_zero()) continue;
                const auto& [gm, gc] = *gens[i].terms().begin();
                const auto& [mm, mc] = *minors[i].terms().begin();
                if (!(gm == mm)) {
                    match = false;
                    break;
                }
                Coeff l = c_div(I.ring->dom, gc, mc);
                if (!lambda) lambda = l;
                if (!c_eq(*lambda, l) || !(gens[i] == minors[i].scalar_mul(*lambda))) match = false;
            }
            hb.minors_match = match && lambda.has_value();
        }
        out.hilbert_burch = std::move(hb);
    }
    return out;
}

namespace {

Ideal reduce_ideal_mod(const Ideal& I, std::int64_t p) {
    Domain fp = Domain::prime(p);
    RingPtr ring_p = with_domain(I.ring, fp);
    std::vector<Poly> gens;
    for (const auto& g : I.gens) gens.push_back(g.map_domain(fp));
    return Ideal{ring_p, std::move(gens)};
}

bool cm_outcome_equal(const CmCertificate& a, const CmCertificate& b) {
    bool hb_a = a.hilbert_burch && a.hilbert_burch->minors_match;
    bool hb_b = b.hilbert_burch && b.hilbert_burch->minors_match;
    return a.accepted == b.accepted && a.measured_codim == b.measured_codim && a.pd == b.pd &&
           a.cm == b.cm && a.betti == b.betti && hb_a == hb_b;
}

} // namespace

CmCertificate cm_certify_modular(const Ideal& I, long expected_codim, std::uint64_t budget,
                                 const std::vector<std::int64_t>& primes) {
    if (!I.ring->dom.is_rational() || primes.empty()) return cm_certify(I, expected_codim, budget);
    try {
        CmCertificate first = cm_certify(reduce_ideal_mod(I, primes[0]), expected_codim, budget);
        if (primes.size() < 2) return first;
        CmCertificate second = cm_certify(reduce_ideal_mod(I, primes[1]), expected_codim, budget);
        if (cm_outcome_equal(first, second)) return first;
    } catch (const DomainError&) {
        // bad prime; fall through to the exact run
    }
    return cm_certify(I, expected_codim, budget);
}

} // namespace cremona
