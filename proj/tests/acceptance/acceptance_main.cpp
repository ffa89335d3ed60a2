// Acceptance suite: one line per criterion, exact tolerances, nonzero exit
// on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cremona/corpus.hpp"
#include "cremona/json_io.hpp"
#include "cremona/text.hpp"

using namespace cremona;

namespace {

struct Criterion {
    std::string id;
    std::string what;
    std::function<bool(std::string&)> run;
};

RationalMap identity_map(std::size_t n1) {
    RingPtr ring = make_ring_x(n1);
    std::vector<Form> forms;
    for (std::size_t j = 0; j < n1; ++j) forms.push_back(Form::from_poly(Poly::variable(ring, j)));
    return make_map(std::move(forms));
}

RationalMap magnus(std::size_t n1) {
    RingPtr ring = make_ring_x(n1);
    std::vector<Form> forms;
    for (std::size_t j = 0; j < n1; ++j) {
        Monomial m = Monomial::one(n1);
        for (std::size_t i = 0; i < n1; ++i)
            if (i != j) m.e[i] = 1;
        forms.push_back(Form::from_poly(Poly::term(ring, m, c_one(ring->dom))));
    }
    return make_map(std::move(forms));
}

bool criterion_1a(std::string& note) {
    RingPtr xyz = make_ring({"x", "y", "z"});
    Form f = parse_form("x*(x*z-y^2)", xyz);
    RationalMap partials = make_map({f.derivative(0), f.derivative(1), f.derivative(2)});
    RationalMap dual = newton_dual(partials);
    // frame-exact output of the coefficient-carrying construction
    bool frames = dual.forms[0] == parse_form("2*x*y^2-x^2*z", xyz) &&
                  dual.forms[1] == parse_form("-2*x*y*z", xyz) &&
                  dual.forms[2] == parse_form("y^2*z", xyz);
    // and term-for-term match with the displayed set, one scalar per form
    RationalMap displayed = map_from_strings(xyz, {"x^2*z-2*x*y^2", "x*y*z", "y^2*z"});
    bool projective = maps_equal_up_to_scalars(dual, displayed);
    note = "frame-exact and scalar-normalized comparisons";
    return frames && projective && dual.degree == 3;
}

bool criterion_1b(std::string& note) {
    for (std::size_t n1 : {3u, 4u, 5u}) {
        RationalMap dual = newton_dual(identity_map(n1));
        if (!maps_equal(dual, magnus(n1))) return false;
        DegreeCertificate cert = certify_degree(dual);
        if (cert.degree != 1) return false;
    }
    note = "n = 2, 3, 4";
    return true;
}

bool criterion_1c(std::string& note) {
    RingPtr xyz = make_ring({"x", "y", "z"});
    Ideal dual_ideal{xyz,
                     {parse_poly("x^2*z-2*x*y^2", xyz), parse_poly("x*y*z", xyz), parse_poly("y^2*z", xyz)}};
    RingPtr tuv = make_ring({"t", "u", "v"});
    std::vector<Poly> inverse{parse_poly("u^3-t*u*v", tuv), parse_poly("u^2*v-t*v^2", tuv),
                              parse_poly("2*u*v^2", tuv)};
    std::vector<std::size_t> perm{0, 1, 2};
    int renamings = 0;
    do {
        std::vector<Poly> renamed;
        for (const auto& g : inverse) renamed.push_back(g.map_vars(xyz, perm));
        if (ideal_equal(dual_ideal, Ideal{xyz, renamed})) return false;
        ++renamings;
    } while (std::next_permutation(perm.begin(), perm.end()));
    note = std::to_string(renamings) + " renamings, all ideals differ";
    return renamings == 6;
}

bool criterion_1d(std::string& note) {
    for (long d = 2; d <= 5; ++d) {
        FamilyResult res = family(2, 2, d, true, 0);
        if (!res.feasible) return false;
        RationalMap expect = map_from_strings(
            res.map.ring, {"x0^" + std::to_string(d), "x0^" + std::to_string(d - 1) + "*x1",
                           "x1^" + std::to_string(d - 1) + "*x2"});
        if (!maps_equal(res.map, expect)) return false;
        if (res.degree.degree != 1) return false;
        if (res.codim != 2) return false;
        if (!res.cm || !res.cm->cm || !res.cm->hilbert_burch ||
            !res.cm->hilbert_burch->minors_match)
            return false;
    }
    note = "d = 2..5 with degree-1 + codim-2 + CM certificates";
    return true;
}

bool criterion_2(std::string& note) {
    Rng rng(20250809);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        std::size_t n1 = 3 + rng.below(2); // n <= 4
        RingPtr ring = make_ring_x(n1);
        RationalMap map =
            random_canonical_map(rng, ring, 2 + rng.below(3), 1 + rng.below(4), 5); // d <= 4
        RationalMap dual = newton_dual(map);
        if (!maps_equal(newton_dual(dual), map)) return false;
        if (!(directrix(dual).alpha == directrix(map).alpha)) return false;
        ++checked;
    }
    note = std::to_string(checked) + " maps, dual o dual = id and alpha preserved, exact";
    return checked >= 500;
}

bool criterion_3(std::string& note) {
    std::vector<RationalMap> corpus = monomial_quadratic_cremona_p2();
    std::size_t p2_count = corpus.size();
    for (auto& m : seeded_monomial_cremona(4, 3, 100, 3)) corpus.push_back(std::move(m));
    int checked = 0;
    for (const auto& map : corpus) {
        auto res = is_monomial_cremona(map);
        if (!certified(res)) return false;
        auto dual_res = is_monomial_cremona(newton_dual(map)); // (i)
        if (!certified(dual_res)) return false;
        CommuteReport rep = dual_inverse_commutes(map); // (ii) + (iii)
        if (!rep.equal || !rep.gamma_formula_matches) return false;
        ++checked;
    }
    note = std::to_string(p2_count) + " exhaustive P^2 sets + 100 seeded P^3 maps, exact";
    return checked >= 100;
}

bool criterion_4(std::string& note) {
    auto seeds = seeded_birational_maps(50, 4);
    int checked = 0;
    DegreeOptions opt; // two primes, agreement required
    for (const auto& map : seeds) {
        RationalMap dual = newton_dual(map);
        DegreeCertificate cert = certify_degree(dual, opt);
        if (cert.degree != 1) return false;
        if (!dual_preserves_image_relations(map)) return false;
        ++checked;
    }
    note = std::to_string(checked) + " generator-built maps: dual degree 1, image ideals equal";
    return checked >= 50;
}

bool criterion_5(std::string& note) {
    Rng rng(5);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        std::int64_t d = 2 + rng.below(4); // d <= 5
        DeJonquieresData data = random_dejonquieres(rng, d);
        DualDegreeReport rep = dejonquieres_dual_degree(data);
        if (!rep.consistent()) return false;
        ++checked;
    }
    note = std::to_string(checked) + " seeded data: formula = |alpha|-d = measured, shape {xQ,yQ,F}";
    return checked >= 100;
}

bool criterion_6(std::string& note) {
    Rng rng(6);
    int checked = 0, monoid_cases = 0, ell_d2_cases = 0;
    DegreeOptions opt;
    while (checked < 50) {
        std::int64_t d = 2 + rng.below(3); // d <= 4
        FamilyResult base = family(2, 2, d, false, rng.next());
        const RationalMap& F = base.map;
        bool monoid_case = (d == 2) || rng.below(2) == 0; // ell = d-1 vs ell = d-2
        std::vector<Form> coeffs;
        if (monoid_case) {
            coeffs = {random_form(rng, F.ring, d - 1, 3), Form::zero(F.ring, d)};
        } else {
            coeffs = {random_form(rng, F.ring, d - 2, 3), random_form(rng, F.ring, d - 1, 3),
                      Form::zero(F.ring, d)};
        }
        MonoidForm g = monoid_from_coeffs(F.ring, d, coeffs);
        AppendResult res = iterate_append(F, g, opt);
        std::int64_t bound = monoid_case ? 1 : 2;
        if (res.bound != bound) return false;
        if (res.degree.degree > bound) return false;
        if (monoid_case && res.degree.degree != 1) return false;
        ++checked;
        if (monoid_case)
            ++monoid_cases;
        else
            ++ell_d2_cases;
    }
    note = std::to_string(monoid_cases) + " at ell=d-1 (degree 1) + " + std::to_string(ell_d2_cases) +
           " at ell=d-2 (degree <= 2), 2 primes each";
    return checked >= 50;
}

bool criterion_7(std::string& note) {
    Rng rng(7);
    int checked = 0;
    int guard = 0;
    DegreeOptions opt;
    while (checked < 25 && guard++ < 400) {
        RationalMap F = rng.below(2) == 0
                            ? map_from_strings(make_ring_x(2), {"x0^2", "x0*x1", "x1^2"})
                            : family(2, 2, 2 + rng.below(2), true, rng.next()).map;
        Ideal I = Ideal::from_forms(F.forms);
        std::int64_t e = 1 + rng.below(2);
        std::int64_t D = F.degree + e;
        Form f = random_form(rng, F.ring, e, 2);
        Poly a(F.ring), b(F.ring);
        for (const auto& gen : I.gens) {
            if (rng.below(2) == 0)
                a = a + gen.mul_term(random_monomial(rng, F.ring->nvars(), D - 1 - gen.degree()),
                                     c_from_int(F.ring->dom, rng.nonzero_range(-2, 2)));
            if (rng.below(2) == 0)
                b = b + gen.mul_term(random_monomial(rng, F.ring->nvars(), D - gen.degree()),
                                     c_from_int(F.ring->dom, rng.nonzero_range(-2, 2)));
        }
        if (a.is_zero()) continue;
        MonoidForm g = monoid_from_coeffs(F.ring, D, {Form::from_poly(a, D - 1), Form::from_poly(b, D)});
        MultiplyResult res = monoid_multiply(F, f, g, opt);
        if (!res.accepted) continue; // named hypothesis rejection; draw again
        if (res.degree.degree != 1) return false;
        if (!res.cm.cm || !res.cm.hilbert_burch || !res.cm.hilbert_burch->minors_match) return false;
        if (!res.cone.columns_are_syzygies || !res.cone.psi.degrees_consistent()) return false;
        ++checked;
    }
    note = std::to_string(checked) + " instances: Hilbert-Burch + symbolic psi check + degree 1";
    return checked >= 25;
}

bool criterion_8(std::string& note) {
    int built = 0, refusals = 0;
    for (long n = 2; n <= 4; ++n)
        for (long r = 2; r <= n; ++r)
            for (long d = 2; d <= 3; ++d) {
                FamilyResult plain = family(n, r, d, false, 8);
                if (!plain.feasible || plain.degree.degree != 1 || plain.codim != r ||
                    plain.map.degree != d)
                    return false;
                ++built;
                if (d < n + 1 - r) continue; // CM branch not requested below the bound
                FamilyResult cm = family(n, r, d, true, 8);
                if (family_cm_feasible(n, r, d)) {
                    if (!cm.feasible || cm.degree.degree != 1 || cm.codim != r || cm.map.degree != d)
                        return false;
                    if (!cm.cm || !cm.cm->cm) return false;
                    ++built;
                } else {
                    // d = n+1-r with r < n: impossible for r = 2 (Hilbert-Burch
                    // forces degree >= n there) and not delivered by the
                    // construction for 2 < r < n, where attaining n+1-r is the
                    // paper's open question; a structured refusal is the correct
                    // output at these corners
                    if (cm.feasible) return false;
                    if (cm.infeasible_reason.empty()) return false;
                    ++refusals;
                }
            }
    note = std::to_string(built) + " maps certified (degree 1, codim r, degree d, CM when feasible); " +
           std::to_string(refusals) + " infeasible CM corner(s) refused with reasons";
    return true;
}

bool criterion_9(std::string& note) {
    DegreeOptions opt;
    int checked = 0;
    for (long n : {3, 4, 5})
        for (long q : {1, 2}) {
            SubHankelResult res = subhankel_family(n, q, opt);
            if (!res.divisibility_ok || !res.forms_in_subring) return false;
            if (!res.g_is_x1_monoid || !res.g_not_divisible_by_xn || !res.g_in_reduced_partials)
                return false;
            if (res.degree.degree != 1) return false;
            if (!res.cm.accepted || !res.cm.cm || res.cm.measured_codim != 2) return false;
            ++checked;
        }
    note = std::to_string(checked) + " (n, q) pairs: divisibility, subring, degree-1 + codim-2 + CM";
    return checked == 6;
}

bool criterion_10(std::string& note) {
    DegreeCertificate squaring =
        topological_degree(map_from_strings(make_ring_x(3), {"x0^2", "x1^2", "x2^2"}), DegreeOptions{});
    if (squaring.degree != 4) return false;
    DegreeCertificate magnus_cert = topological_degree(
        map_from_strings(make_ring({"x", "y", "z"}), {"y*z", "x*z", "x*y"}), DegreeOptions{});
    if (magnus_cert.degree != 1) return false;
    // emitted certificates never contain disagreeing trials; escalations are
    // counted on the certificate and logged when verbose
    for (const auto* cert : {&squaring, &magnus_cert}) {
        for (const auto& t : cert->trials)
            if (t.fiber_degree != cert->degree) return false;
        if (cert->trials.size() < 2) return false;
    }
    note = "squaring map degree 4, Magnus degree 1, trial agreement enforced";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1a", "Newton dual of the polar-cubic partials", criterion_1a},
        {"1b", "dual of the identity is Magnus, certified degree 1", criterion_1b},
        {"1c", "non-involution witness under all renamings", criterion_1c},
        {"1d", "plane family base case, full certificates", criterion_1d},
        {"2", "involution property on 500 seeded maps", criterion_2},
        {"3", "monomial duality corpus (exhaustive P^2 + 100 seeded P^3)", criterion_3},
        {"4", "duality preserves birationality and image relations (50 seeds)", criterion_4},
        {"5", "de Jonquieres dual degree formula (100 seeds)", criterion_5},
        {"6", "iteration degree bound (50 seeded appends)", criterion_6},
        {"7", "perfect codim-2 multiply (25 seeded instances)", criterion_7},
        {"8", "prescribed (n, r, d) grid with CM branch", criterion_8},
        {"9", "sub-Hankel family, n in {3,4,5}, q in {1,2}", criterion_9},
        {"10", "degree-certifier soundness", criterion_10},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[criterion %-2s] %s  (%.2fs) %s%s%s\n", c.id.c_str(), ok ? "PASS" : "FAIL", secs,
                    c.what.c_str(), note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
