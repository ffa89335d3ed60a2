#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cremona/json_io.hpp"
#include "cremona/paper_examples.hpp"
#include "cremona/text.hpp"

using namespace cremona;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefusal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    bool json_out = false;
    std::uint64_t seed = 0;
    std::string primes = "32003,65537";
    std::uint64_t budget = 1'000'000;
    std::string field = "fp"; // heavy certificates run modular; --field q forces exact Q
};

std::vector<std::int64_t> parse_primes(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoll(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw DomainError("empty prime list");
    return out;
}

DegreeOptions degree_options(const GlobalOpts& g) {
    DegreeOptions opt;
    opt.seed = g.seed;
    opt.primes = parse_primes(g.primes);
    opt.budget = g.budget;
    return opt;
}

// inline JSON or @file
json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("cannot open " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

RationalMap load_map(const std::string& arg, const GlobalOpts&) {
    return map_from_json(load_json_arg(arg));
}

void emit(const GlobalOpts& g, const json& payload, const std::string& human) {
    if (g.json_out)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

int cmd_dual(const GlobalOpts& g, const std::string& map_arg) {
    RationalMap map = load_map(map_arg, g);
    RationalMap dual = newton_dual(map);
    DirectrixVector dx = directrix(map);
    json payload{{"dual", map_to_json(dual)},
                 {"alpha", dx.alpha},
                 {"dual_degree", dx.dual_degree}};
    std::string human = "dual forms:";
    for (const auto& f : dual.forms) human += "\n  " + f.str();
    emit(g, payload, human);
    return kExitOk;
}

int cmd_invert_monomial(const GlobalOpts& g, const std::string& map_arg) {
    RationalMap map = load_map(map_arg, g);
    auto res = is_monomial_cremona(map);
    if (certified(res)) {
        const auto& cert = certificate(res);
        RationalMap inv = inverse_from_certificate(map.ring, cert);
        json payload{{"certificate", monomial_certificate_to_json(cert)},
                     {"inverse", map_to_json(inv)}};
        std::string human = "monomial Cremona certificate\n  inverse:";
        for (const auto& f : inv.forms) human += " " + f.str() + " ";
        human += "\n  gamma = [";
        for (auto v : cert.gamma) human += " " + std::to_string(v);
        human += " ], d' = " + std::to_string(cert.d_prime);
        emit(g, payload, human);
        return kExitOk;
    }
    const auto& ref = refusal(res);
    emit(g, json{{"refusal", monomial_refusal_to_json(ref)}},
         std::string("refused: ") + MonomialRefusal::reason_name(ref.reason) + " (" + ref.detail + ")");
    return kExitRefusal;
}

int cmd_degree(const GlobalOpts& g, const std::string& map_arg, int trials) {
    RationalMap map = load_map(map_arg, g);
    DegreeOptions opt = degree_options(g);
    if (trials > 0) opt.trials = trials;
    DegreeCertificate cert = certify_degree(map, opt);
    emit(g, degree_certificate_to_json(cert),
         "topological degree " + std::to_string(cert.degree) + " (" + cert.method + ", " +
             std::to_string(cert.trials.size()) + " trials)" +
             (cert.birational() ? " -- birational onto the image" : ""));
    return kExitOk;
}

int cmd_image_ideal(const GlobalOpts& g, const std::string& map_arg) {
    RationalMap map = load_map(map_arg, g);
    Ideal img = image_ideal(map, g.budget);
    std::string human = img.is_zero() ? "image ideal: (0)  (dominant map)" : "image ideal generators:";
    if (!img.is_zero())
        for (const auto& gen : img.gens) human += "\n  " + gen.str();
    emit(g, ideal_to_json(img), human);
    return kExitOk;
}

int cmd_cm_check(const GlobalOpts& g, const std::string& ideal_arg, long expect_codim) {
    Ideal I = ideal_from_json(load_json_arg(ideal_arg));
    long expected = expect_codim;
    if (expected < 0) {
        auto c = codimension(I, g.budget);
        if (!c) {
            emit(g, json{{"accepted", false}, {"refusal", "unit ideal"}}, "refused: unit ideal");
            return kExitRefusal;
        }
        expected = *c;
    }
    CmCertificate cert = g.field == "q"
                             ? cm_certify(I, expected, g.budget)
                             : cm_certify_modular(I, expected, g.budget, parse_primes(g.primes));
    std::string human = cert.accepted
                            ? "codim " + std::to_string(*cert.measured_codim) + ", pd " +
                                  std::to_string(cert.pd) + (cert.cm ? ", Cohen-Macaulay" : ", not CM") +
                                  (cert.hilbert_burch && cert.hilbert_burch->minors_match
                                       ? ", Hilbert-Burch minors match"
                                       : "")
                            : "refused: " + cert.refusal;
    emit(g, cm_certificate_to_json(cert), human);
    return cert.accepted ? kExitOk : kExitRefusal;
}

int cmd_gen_dejonquieres(const GlobalOpts& g, long d, const std::string& gs, const std::string& hs,
                         const std::string& f0s, const std::string& f1s) {
    DeJonquieresData data;
    if (!gs.empty() || !hs.empty() || !f0s.empty() || !f1s.empty()) {
        data.ring_xy = make_ring({"x", "y"});
        data.d = d;
        data.g = gs.empty() ? Form::zero(data.ring_xy, d - 1) : parse_form(gs, data.ring_xy);
        data.h = hs.empty() ? Form::zero(data.ring_xy, d - 2) : parse_form(hs, data.ring_xy);
        data.f0 = parse_form(f0s, data.ring_xy);
        data.f1 = parse_form(f1s, data.ring_xy);
        data.validate();
    } else {
        Rng rng(g.seed);
        data = random_dejonquieres(rng, d);
    }
    auto res = dejonquieres(data, degree_options(g));
    auto dual_rep = dejonquieres_dual_degree(data);
    json payload{{"map", map_to_json(res.map)},
                 {"degree_certificate", degree_certificate_to_json(res.degree)},
                 {"dual_degree_formula", dual_rep.formula},
                 {"dual_degree_measured", dual_rep.measured},
                 {"dual_shape_ok", dual_rep.shape_ok}};
    std::string human = "de Jonquieres map:";
    for (const auto& f : res.map.forms) human += "\n  " + f.str();
    human += "\ndual degree (formula) = " + std::to_string(dual_rep.formula);
    emit(g, payload, human);
    return kExitOk;
}

int cmd_gen_family(const GlobalOpts& g, long n, long r, long d, bool cm) {
    FamilyResult res = family(n, r, d, cm, g.seed, degree_options(g));
    if (!res.feasible) {
        emit(g, json{{"feasible", false}, {"reason", res.infeasible_reason}},
             "infeasible: " + res.infeasible_reason);
        return kExitRefusal;
    }
    json payload{{"map", map_to_json(res.map)},
                 {"degree_certificate", degree_certificate_to_json(res.degree)},
                 {"codim", res.codim},
                 {"trace", json::parse(res.trace_json)}};
    if (res.cm) payload["cm_certificate"] = cm_certificate_to_json(*res.cm);
    std::string human = "family(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(d) +
                        (cm ? ",CM" : "") + "):";
    for (const auto& f : res.map.forms) human += "\n  " + f.str();
    human += "\ncodim " + std::to_string(res.codim) + ", topological degree " +
             std::to_string(res.degree.degree);
    emit(g, payload, human);
    return kExitOk;
}

int cmd_gen_subhankel(const GlobalOpts& g, long n, long q) {
    SubHankelResult res = subhankel_family(n, q, degree_options(g));
    json payload{{"n", res.n},
                 {"q", res.q},
                 {"determinant", res.determinant.str()},
                 {"map", map_to_json(res.map)},
                 {"divisibility_ok", res.divisibility_ok},
                 {"forms_in_subring", res.forms_in_subring},
                 {"g_is_x1_monoid", res.g_is_x1_monoid},
                 {"g_not_divisible_by_xn", res.g_not_divisible_by_xn},
                 {"g_in_reduced_partials", res.g_in_reduced_partials},
                 {"degree_certificate", degree_certificate_to_json(res.degree)},
                 {"cm_certificate", cm_certificate_to_json(res.cm)}};
    std::string human = "sub-Hankel map (n=" + std::to_string(n) + ", q=" + std::to_string(q) + "):";
    for (const auto& f : res.map.forms) human += "\n  " + f.str();
    human += "\ndegree " + std::to_string(res.degree.degree) + ", codim " +
             (res.cm.measured_codim ? std::to_string(*res.cm.measured_codim) : "?") +
             (res.cm.cm ? ", Cohen-Macaulay" : "");
    bool ok = res.divisibility_ok && res.forms_in_subring && res.degree.degree == 1 && res.cm.cm;
    emit(g, payload, human);
    return ok ? kExitOk : kExitRefusal;
}

int cmd_gen_iterate(const GlobalOpts& g, const std::string& map_arg, const std::string& monoid_text) {
    RationalMap F = load_map(map_arg, g);
    RingPtr ext = extend_ring(F.ring, "x" + std::to_string(F.ring->nvars()));
    Form gform = parse_form(monoid_text, ext);
    // split by powers of the new variable into monoid coefficients g_j
    const std::size_t priv = ext->nvars() - 1;
    const std::int64_t d = gform.degree();
    const std::int64_t top = gform.poly().degree_in(priv);
    std::vector<Form> coeffs;
    for (std::int64_t j = d - top; j <= d; ++j) {
        Poly cj(F.ring);
        for (const auto& [m, c] : gform.poly().terms()) {
            if (m.e[priv] != d - j) continue;
            Monomial mb = Monomial::one(F.ring->nvars());
            for (std::size_t i = 0; i < F.ring->nvars(); ++i) mb.e[i] = m.e[i];
            cj.add_term(mb, c);
        }
        coeffs.push_back(Form::from_poly(cj, j));
    }
    MonoidForm monoid = monoid_from_coeffs(F.ring, d, coeffs);
    AppendResult res = iterate_append(F, monoid, degree_options(g), true);
    json payload{{"map", map_to_json(res.map)},
                 {"bound", res.bound},
                 {"degree_certificate", degree_certificate_to_json(res.degree)}};
    if (res.supplement) {
        payload["supplement"] = {{"applicable", res.supplement->applicable},
                                 {"gd_in_ideal", res.supplement->gd_in_ideal},
                                 {"top_coeff_nzd", res.supplement->top_coeff_nzd},
                                 {"codim_before", res.supplement->codim_before},
                                 {"codim_after", res.supplement->codim_after},
                                 {"codim_plus_one", res.supplement->codim_plus_one},
                                 {"cm_before", res.supplement->cm_before},
                                 {"cm_after", res.supplement->cm_after}};
    }
    emit(g, payload,
         "appended map on P^" + std::to_string(res.map.ring->nvars() - 1) + ", measured degree " +
             std::to_string(res.degree.degree) + " (bound " + std::to_string(res.bound) + ")");
    return kExitOk;
}

int cmd_gen_monoid_multiply(const GlobalOpts& g, const std::string& map_arg, const std::string& f_text,
                            const std::string& g_text) {
    RationalMap F = load_map(map_arg, g);
    Form f = parse_form(f_text, F.ring);
    RingPtr ext = extend_ring(F.ring, "x" + std::to_string(F.ring->nvars()));
    Form gform = parse_form(g_text, ext);
    const std::size_t priv = ext->nvars() - 1;
    std::int64_t D = gform.degree();
    Poly a(F.ring), b(F.ring);
    for (const auto& [m, c] : gform.poly().terms()) {
        Monomial mb = Monomial::one(F.ring->nvars());
        for (std::size_t i = 0; i < F.ring->nvars(); ++i) mb.e[i] = m.e[i];
        if (m.e[priv] == 1)
            a.add_term(mb, c);
        else if (m.e[priv] == 0)
            b.add_term(mb, c);
        else
            throw DomainError("g must be linear in the new variable " + ext->vars[priv]);
    }
    MonoidForm monoid = monoid_from_coeffs(F.ring, D, {Form::from_poly(a, D - 1), Form::from_poly(b, D)});
    MultiplyResult res = monoid_multiply(F, f, monoid, degree_options(g));
    if (!res.accepted) {
        emit(g, json{{"accepted", false}, {"rejection", res.rejection}}, "rejected: " + res.rejection);
        return kExitRefusal;
    }
    json payload{{"map", map_to_json(res.map)},
                 {"degree_certificate", degree_certificate_to_json(res.degree)},
                 {"cm_certificate", cm_certificate_to_json(res.cm)},
                 {"psi", graded_matrix_to_json(res.cone.psi)},
                 {"psi_columns_are_syzygies", res.cone.columns_are_syzygies}};
    std::string human = "monoid-multiply map:";
    for (const auto& fm : res.map.forms) human += "\n  " + fm.str();
    emit(g, payload, human);
    return kExitOk;
}

int cmd_bench(const GlobalOpts& g) {
    struct Row {
        std::string name;
        double ms;
    };
    std::vector<Row> rows;
    auto time_it = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        rows.push_back({name, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    };
    time_it("newton_dual (500 random maps, n<=4)", [&] {
        Rng rng(g.seed);
        for (int t = 0; t < 500; ++t) {
            auto ring = make_ring_x(3 + rng.below(2));
            auto map = random_canonical_map(rng, ring, 3, 1 + rng.below(4), 5);
            (void)newton_dual(map);
        }
    });
    time_it("invert-monomial (quadratic P^2 corpus)", [&] {
        for (const auto& m : monomial_quadratic_cremona_p2()) (void)is_monomial_cremona(m);
    });
    time_it("fiber degree (Magnus P^2, 2 primes)", [&] {
        (void)topological_degree(map_from_strings(make_ring({"x", "y", "z"}), {"y*z", "x*z", "x*y"}),
                                 degree_options(g));
    });
    time_it("groebner (twisted cubic quadrics)", [&] {
        auto ring = make_ring({"x", "y", "z", "w"});
        std::vector<Poly> gens{parse_poly("y^2-x*z", ring), parse_poly("y*z-x*w", ring),
                               parse_poly("z^2-y*w", ring)};
        (void)buchberger(Ideal{ring, gens});
    });
    time_it("cm-check (sub-Hankel n=3 ideal)", [&] {
        auto ring = make_ring({"x1", "x2", "x3"});
        std::vector<Poly> gens{parse_poly("x3^2", ring), parse_poly("x2*x3", ring),
                               parse_poly("2*x1*x3-x2^2", ring)};
        (void)cm_certify_modular(Ideal{ring, gens}, 2, g.budget);
    });
    json payload = json::array();
    std::printf("%-44s %12s\n", "operation", "time (ms)");
    for (const auto& r : rows) {
        std::printf("%-44s %12.2f\n", r.name.c_str(), r.ms);
        payload.push_back({{"name", r.name}, {"ms", r.ms}});
    }
    if (g.json_out) std::cout << payload.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cremona-map constructions and certificates"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "emit JSON on stdout");
    app.add_option("--seed", g.seed, "seed for randomized certificates and generators");
    app.add_option("--prime", g.primes, "comma-separated prime list for modular runs");
    app.add_option("--budget", g.budget, "S-pair reduction cap per Groebner run");
    app.add_option("--field", g.field, "coefficient field: q | fp")->check(CLI::IsMember({"q", "fp"}));

    std::string map_arg, ideal_arg, f_text, g_text, gs, hs, f0s, f1s;
    long n = 3, r = 2, d = 2, q = 1;
    long expect_codim = -1;
    int trials = 0;
    bool want_cm = false;

    auto* dual = app.add_subcommand("dual", "Newton complementary dual of a map");
    dual->add_option("--map", map_arg, "map JSON (inline or @file)")->required();

    auto* inv = app.add_subcommand("invert-monomial", "certificate or refusal for a monomial map");
    inv->add_option("--map", map_arg)->required();

    auto* deg = app.add_subcommand("degree", "topological (field) degree certificate");
    deg->add_option("--map", map_arg)->required();
    deg->add_option("--trials", trials, "trial count (default 2)");

    auto* img = app.add_subcommand("image-ideal", "defining ideal of the image");
    img->add_option("--map", map_arg)->required();

    auto* cm = app.add_subcommand("cm-check", "codimension / Cohen-Macaulay certification");
    cm->add_option("--ideal", ideal_arg, "ideal JSON {vars, gens}")->required();
    cm->add_option("--expect-codim", expect_codim, "expected codimension (default: measured)");

    auto* gen = app.add_subcommand("gen", "generators");
    gen->require_subcommand(1);
    auto* gdj = gen->add_subcommand("dejonquieres", "plane de Jonquieres map");
    gdj->set_help_flag("--help", "print help");
    gdj->add_option("-d,--degree", d)->required();
    gdj->add_option("--g", gs, "binary form g (degree d-1)");
    gdj->add_option("--h", hs, "binary form h (degree d-2)");
    gdj->add_option("--f0", f0s, "binary form f0 (degree d)");
    gdj->add_option("--f1", f1s, "binary form f1 (degree d-1)");
    auto* gfam = gen->add_subcommand("family", "prescribed (n, r, d) Cremona map");
    gfam->add_option("-n", n)->required();
    gfam->add_option("-r", r)->required();
    gfam->add_option("-d", d)->required();
    gfam->add_flag("--cm", want_cm, "request a Cohen-Macaulay base ideal");
    auto* gsub = gen->add_subcommand("subhankel", "sub-Hankel determinantal family");
    gsub->add_option("-n", n)->required();
    gsub->add_option("-q", q)->required();
    auto* git = gen->add_subcommand("iterate", "monoid append in a new variable");
    git->add_option("--map", map_arg)->required();
    git->add_option("--g", g_text, "form of the map degree in the new variable x<n+1>")->required();
    auto* gmm = gen->add_subcommand("monoid-multiply", "perfect codim-2 multiply step");
    gmm->add_option("--map", map_arg)->required();
    gmm->add_option("--f", f_text, "multiplier form in the source ring")->required();
    gmm->add_option("--g", g_text, "x_n-monoid in I R[x_n]")->required();

    auto* verify = app.add_subcommand("verify", "reproduction suites");
    verify->add_subcommand("paper-examples", "run every golden example");

    app.add_subcommand("bench", "timing table of representative operations");

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough(true);
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough(true);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (dual->parsed()) return cmd_dual(g, map_arg);
        if (inv->parsed()) return cmd_invert_monomial(g, map_arg);
        if (deg->parsed()) return cmd_degree(g, map_arg, trials);
        if (img->parsed()) return cmd_image_ideal(g, map_arg);
        if (cm->parsed()) return cmd_cm_check(g, ideal_arg, expect_codim);
        if (gen->parsed()) {
            if (gdj->parsed()) return cmd_gen_dejonquieres(g, d, gs, hs, f0s, f1s);
            if (gfam->parsed()) return cmd_gen_family(g, n, r, d, want_cm);
            if (gsub->parsed()) return cmd_gen_subhankel(g, n, q);
            if (git->parsed()) return cmd_gen_iterate(g, map_arg, g_text);
            if (gmm->parsed()) return cmd_gen_monoid_multiply(g, map_arg, f_text, g_text);
        }
        if (verify->parsed()) {
            int failures = run_paper_examples(std::cout);
            return failures == 0 ? kExitOk : kExitRefusal;
        }
        if (app.get_subcommand("bench")->parsed()) return cmd_bench(g);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
