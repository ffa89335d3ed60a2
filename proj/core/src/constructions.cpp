#include "cremona/constructions.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cremona/modvec.hpp"
#include "cremona/rng.hpp"

namespace cremona {

// ---------------------------------------------------------------- de Jonquieres

void DeJonquieresData::validate() const {
    if (!ring_xy || ring_xy->nvars() != 2) throw DomainError("de Jonquieres data lives in k[x,y]");
    if (d < 2) throw DomainError("de Jonquieres degree must be >= 2");
    auto check_deg = [&](const Form& w, std::int64_t expect, const char* name) {
        if (!same_ring(w.ring(), ring_xy)) throw DomainError(std::string(name) + " in the wrong ring");
        if (!w.is_zero() && w.degree() != expect)
            throw DomainError(std::string(name) + " must have degree " + std::to_string(expect));
    };
    check_deg(g, d - 1, "g");
    check_deg(h, d - 2, "h");
    check_deg(f0, d, "f0");
    check_deg(f1, d - 1, "f1");
    if (g.is_zero() && h.is_zero()) throw DomainError("q = g + z h vanishes");
    if (f0.is_zero() || f1.is_zero())
        throw DomainError("f = f0 + z f1 needs nonzero f0 and f1 (gcd(f0,f1)=1 fails otherwise)");
    Form gc = gcd_pair(f0, f1);
    if (gc.degree() != 0)
        throw DomainError("gcd(f0,f1) = " + gc.str() + " != 1: f is not irreducible");
}

BinaryIndices binary_indices(const Form& w) {
    BinaryIndices idx;
    if (w.is_zero()) return idx;
    idx.present = true;
    bool first = true;
    for (const auto& [m, c] : w.poly().terms()) {
        std::int64_t i = m.e[1]; // y-exponent
        if (first) {
            idx.i = idx.j = i;
            first = false;
        } else {
            idx.i = std::min(idx.i, i);
            idx.j = std::max(idx.j, i);
        }
    }
    return idx;
}

namespace {

RingPtr xyz_ring(const DeJonquieresData& data) {
    return make_ring({data.ring_xy->vars[0], data.ring_xy->vars[1], "z"}, data.ring_xy->dom);
}

RationalMap assemble_dejonquieres(const DeJonquieresData& data) {
    RingPtr ring = xyz_ring(data);
    std::vector<std::size_t> emb{0, 1};
    Poly z = Poly::variable(ring, 2);
    Poly q = data.g.poly().map_vars(ring, emb) + z * data.h.poly().map_vars(ring, emb);
    Poly f = data.f0.poly().map_vars(ring, emb) + z * data.f1.poly().map_vars(ring, emb);
    Poly x = Poly::variable(ring, 0);
    Poly y = Poly::variable(ring, 1);
    return make_map({Form::from_poly(x * q), Form::from_poly(y * q), Form::from_poly(f)});
}

} // namespace

DeJonquieresResult dejonquieres(const DeJonquieresData& data, const DegreeOptions& opt) {
    data.validate();
    RationalMap map = assemble_dejonquieres(data);
    DegreeCertificate cert = topological_degree(map, opt);
    if (cert.degree != 1)
        throw Error("de Jonquieres map measured degree " + std::to_string(cert.degree) + ", expected 1");
    return DeJonquieresResult{std::move(map), std::move(cert)};
}

DualDegreeReport dejonquieres_dual_degree(const DeJonquieresData& data) {
    data.validate();
    DualDegreeReport rep;

    BinaryIndices ig = binary_indices(data.g), ih = binary_indices(data.h);
    BinaryIndices if0 = binary_indices(data.f0), if1 = binary_indices(data.f1);
    std::vector<std::int64_t> maxs, mins;
    if (ig.present) {
        maxs.push_back(ig.j + 1);
        mins.push_back(ig.i);
    }
    if (ih.present) {
        maxs.push_back(ih.j + 1);
        mins.push_back(ih.i + 1);
    }
    maxs.push_back(if0.j);
    mins.push_back(if0.i);
    maxs.push_back(if1.j);
    mins.push_back(if1.i + 1);
    rep.formula = *std::max_element(maxs.begin(), maxs.end()) -
                  *std::min_element(mins.begin(), mins.end()) + 1;

    RationalMap map = assemble_dejonquieres(data);
    DirectrixVector dx = directrix(map);
    rep.alpha_route = dx.dual_degree;

    RationalMap dual = newton_dual(map);
    rep.measured = dual.degree;

    // dual shape {x Q, y Q, F}: dual of yq divisible by x, dual of xq by y,
    // equal quotients, and everything a z-monoid
    const std::size_t varx = 0, vary = 1, varz = 2;
    auto qx = dual.forms[1].poly().divide_by_monomial(Monomial::var(3, varx));
    auto qy = dual.forms[0].poly().divide_by_monomial(Monomial::var(3, vary));
    rep.shape_ok = qx && qy && *qx == *qy && qx->degree_in(varz) <= 1 &&
                   dual.forms[2].poly().degree_in(varz) <= 1;
    return rep;
}

// ---------------------------------------------------------------- monoids

void MonoidForm::validate() const {
    if (!base) throw DomainError("monoid needs a base ring");
    if (coeffs.empty() || ell > d || ell < 0) throw DomainError("monoid coefficient range is empty");
    if (static_cast<std::int64_t>(coeffs.size()) != d - ell + 1)
        throw DomainError("monoid needs coefficients g_ell..g_d");
    if (coeffs.front().is_zero()) throw DomainError("monoid top coefficient g_ell vanishes");
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Form& gj = coeffs[k];
        std::int64_t j = ell + static_cast<std::int64_t>(k);
        if (!same_ring(gj.ring(), base)) throw DomainError("monoid coefficient ring mismatch");
        if (!gj.is_zero() && gj.degree() != j)
            throw DomainError("monoid coefficient g_" + std::to_string(j) + " must have degree " +
                              std::to_string(j));
    }
}

Form MonoidForm::assemble(const RingPtr& ext, std::size_t priv_var) const {
    std::vector<std::size_t> emb(base->nvars());
    for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i;
    Poly acc = Poly::zero(ext);
    Poly xn = Poly::variable(ext, priv_var);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::int64_t j = ell + static_cast<std::int64_t>(k);
        if (coeffs[k].is_zero()) continue;
        acc = acc + coeffs[k].poly().map_vars(ext, emb) * xn.pow(static_cast<std::uint32_t>(d - j));
    }
    return Form::from_poly(acc, d);
}

MonoidForm monoid_from_coeffs(RingPtr base, std::int64_t d, std::vector<Form> coeffs_from_ell) {
    MonoidForm m;
    m.base = std::move(base);
    m.d = d;
    m.ell = d - static_cast<std::int64_t>(coeffs_from_ell.size()) + 1;
    m.coeffs = std::move(coeffs_from_ell);
    m.validate();
    return m;
}

namespace {

std::string fresh_var_name(const RingPtr& ring) {
    std::string name = "x" + std::to_string(ring->nvars());
    while (ring->var_index(name)) name = "@" + name;
    return name;
}

std::vector<Poly> lift_polys(const std::vector<Form>& forms, const RingPtr& ext) {
    std::vector<std::size_t> emb(ext->nvars() - 1);
    for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i;
    std::vector<Poly> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.poly().map_vars(ext, emb));
    return out;
}

} // namespace

AppendResult iterate_append(const RationalMap& F, const MonoidForm& g, const DegreeOptions& opt,
                            bool with_supplement) {
    g.validate();
    if (!same_ring(g.base, F.ring)) throw DomainError("iterate_append: monoid base ring mismatch");
    if (g.d != F.degree)
        throw DomainError("iterate_append: monoid degree " + std::to_string(g.d) +
                          " != map degree " + std::to_string(F.degree));

    DegreeCertificate fcert = certify_degree(F, opt);
    if (fcert.degree != 1)
        throw DomainError("iterate_append: input map has degree " + std::to_string(fcert.degree) +
                          ", not certified birational onto its image");

    RingPtr ext = extend_ring(F.ring, fresh_var_name(F.ring));
    const std::size_t priv = ext->nvars() - 1;

    std::vector<Form> forms;
    for (auto& p : lift_polys(F.forms, ext)) forms.push_back(Form::from_poly(p, F.degree));
    forms.push_back(g.assemble(ext, priv));
    AppendResult out;
    out.map = make_map(std::move(forms));
    out.bound = g.d - g.ell;
    out.degree = certify_degree(out.map, opt);
    if (out.degree.degree > out.bound)
        throw Error("iterate_append: measured degree " + std::to_string(out.degree.degree) +
                    " exceeds the bound d-ell = " + std::to_string(out.bound));
    if (out.bound == 1 && out.degree.degree != 1)
        throw Error("iterate_append: monoid case must be birational, measured " +
                    std::to_string(out.degree.degree));

    if (with_supplement && out.bound == 1) {
        SupplementReport rep;
        Ideal I = Ideal::from_forms(F.forms);
        GroebnerBasis gbI = buchberger(I, GroebnerOptions{TermOrder::degrevlex(), opt.budget});
        rep.gd_in_ideal = g.tail().is_zero() || contains(gbI, g.tail().poly());
        rep.applicable = rep.gd_in_ideal;
        if (rep.applicable) {
            Ideal quot = colon(I, g.top().poly(), opt.budget);
            rep.top_coeff_nzd = ideal_equal(quot, I, GroebnerOptions{TermOrder::degrevlex(), opt.budget});
            auto c0 = codimension(I, opt.budget);
            Ideal Inew = Ideal::from_forms(out.map.forms);
            auto c1 = codimension(Inew, opt.budget);
            rep.codim_before = c0.value_or(-1);
            rep.codim_after = c1.value_or(-1);
            rep.codim_plus_one = c0 && c1 && *c1 == *c0 + 1;
            CmCertificate cm0 = cm_certify_modular(I, rep.codim_before, opt.budget);
            CmCertificate cm1 = cm_certify_modular(Inew, rep.codim_after, opt.budget);
            rep.cm_before = cm0.accepted && cm0.cm;
            rep.cm_after = cm1.accepted && cm1.cm;
        }
        out.supplement = rep;
    }
    return out;
}

// ---------------------------------------------------------------- monoid multiply

MultiplyResult monoid_multiply(const RationalMap& F, const Form& f, const MonoidForm& g,
                               const DegreeOptions& opt) {
    MultiplyResult out;
    auto reject = [&](std::string why) {
        out.rejection = std::move(why);
        return out;
    };

    g.validate();
    if (!same_ring(g.base, F.ring) || !same_ring(f.ring(), F.ring))
        return reject("ring mismatch between F, f and g");
    if (g.ell != g.d - 1) return reject("g is not an x_n-monoid: deg_xn(g) = " + std::to_string(g.d - g.ell));
    if (f.is_zero()) return reject("multiplier f is zero");
    if (g.d != f.degree() + F.degree)
        return reject("degree mismatch: deg g = " + std::to_string(g.d) + " != deg f + d = " +
                      std::to_string(f.degree() + F.degree));

    DegreeCertificate fcert = certify_degree(F, opt);
    if (fcert.degree != 1) return reject("F is not birational onto its image (measured degree " +
                                         std::to_string(fcert.degree) + ")");

    Ideal I = Ideal::from_forms(F.forms);
    CmCertificate base_cm = cm_certify_modular(I, 2, opt.budget);
    if (!base_cm.accepted || !base_cm.cm)
        return reject("base ideal is not perfect of codimension 2: " +
                      (base_cm.refusal.empty() ? std::string("pd != codim") : base_cm.refusal));

    // membership g in I R[x_n]: both monoid coefficients lie in I
    GroebnerBasis gbI = buchberger(I, GroebnerOptions{TermOrder::degrevlex(), opt.budget});
    const Form& a = g.top();  // coefficient of x_n
    const Form& b = g.tail(); // constant coefficient
    if (!contains(gbI, a.poly()) || (!b.is_zero() && !contains(gbI, b.poly())))
        return reject("g does not lie in I R[x_n]");

    RingPtr ext = extend_ring(F.ring, fresh_var_name(F.ring));
    const std::size_t priv = ext->nvars() - 1;
    Form g_ext = g.assemble(ext, priv);
    std::vector<std::size_t> emb(F.ring->nvars());
    for (std::size_t i = 0; i < emb.size(); ++i) emb[i] = i;
    Form f_ext = Form::from_poly(f.poly().map_vars(ext, emb), f.degree());
    Form gc = gcd_pair(f_ext, g_ext);
    if (gc.degree() != 0) return reject("gcd(f,g) = " + gc.str() + " != 1");

    // resolution of I over its own field for the mapping cone
    FreeResolution res = free_resolution(I, F.ring->nvars() + 2, opt.budget);
    if (res.maps.size() != 2) return reject("base ideal resolution is not Hilbert-Burch shaped");
    if (res.maps[0].ncols() != F.forms.size())
        return reject("the defining forms are not minimal generators of the base ideal");

    const GradedMatrix& phi = res.maps[1];
    const std::size_t m = F.forms.size();

    // content column: g = x_n * A + B over the generators
    auto A = express_in(I.gens, a.poly(), opt.budget);
    std::optional<std::vector<Poly>> B;
    if (b.is_zero()) {
        B = std::vector<Poly>(m, Poly::zero(F.ring));
    } else {
        B = express_in(I.gens, b.poly(), opt.budget);
    }
    if (!A || !B) return reject("content column computation failed despite membership");

    MappingConeData cone;
    cone.phi = phi;
    cone.multiplier = f_ext.poly();
    Poly xn = Poly::variable(ext, priv);
    for (std::size_t i = 0; i < m; ++i)
        cone.content.push_back(xn * (*A)[i].map_vars(ext, emb) + (*B)[i].map_vars(ext, emb));

    // psi = [[phi, c(g)], [0, -f]] over R[x_n]
    GradedMatrix psi;
    psi.ring = ext;
    const std::int64_t D = g.d;
    const std::int64_t e = f.degree();
    psi.row_deg.assign(m + 1, D);
    for (auto cd : phi.col_deg) psi.col_deg.push_back(cd + e);
    psi.col_deg.push_back(D + e);
    psi.ent.assign(m + 1, std::vector<Poly>(phi.ncols() + 1, Poly::zero(ext)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < phi.ncols(); ++j)
            psi.ent[i][j] = phi.ent[i][j].map_vars(ext, emb);
    for (std::size_t i = 0; i < m; ++i) psi.ent[i][phi.ncols()] = cone.content[i];
    psi.ent[m][phi.ncols()] = -f_ext.poly();

    // the new map
    std::vector<Form> forms;
    for (auto& p : lift_polys(F.forms, ext)) forms.push_back(Form::from_poly(p * f_ext.poly()));
    forms.push_back(g_ext);
    out.map = make_map(std::move(forms));

    // psi columns kill the generator row, symbolically
    cone.columns_are_syzygies = true;
    for (std::size_t j = 0; j < psi.ncols() && cone.columns_are_syzygies; ++j) {
        Poly acc = Poly::zero(ext);
        for (std::size_t i = 0; i <= m; ++i) acc = acc + out.map.forms[i].poly() * psi.ent[i][j];
        if (!acc.is_zero()) cone.columns_are_syzygies = false;
    }
    cone.psi = std::move(psi);
    out.cone = std::move(cone);
    if (!out.cone.columns_are_syzygies) throw Error("monoid_multiply: mapping cone failed the syzygy check");

    out.degree = certify_degree(out.map, opt);
    if (out.degree.degree != 1)
        throw Error("monoid_multiply: output measured degree " + std::to_string(out.degree.degree));
    out.cm = cm_certify_modular(Ideal::from_forms(out.map.forms), 2, opt.budget);
    if (!out.cm.accepted || !out.cm.cm || !out.cm.hilbert_burch || !out.cm.hilbert_burch->minors_match)
        throw Error("monoid_multiply: output base ideal failed the perfect codim-2 certificate");
    out.accepted = true;
    return out;
}

// ---------------------------------------------------------------- families

bool family_cm_feasible(long n, long r, long d) {
    if (r == n) return d >= 2;
    return d >= n + 2 - r;
}

namespace {

RationalMap plane_base(long d, const Domain& dom) {
    RingPtr ring = make_ring_x(3, dom);
    Poly x0 = Poly::variable(ring, 0), x1 = Poly::variable(ring, 1), x2 = Poly::variable(ring, 2);
    return make_map({Form::from_poly(x0.pow(static_cast<std::uint32_t>(d))),
                     Form::from_poly(x0.pow(static_cast<std::uint32_t>(d - 1)) * x1),
                     Form::from_poly(x1.pow(static_cast<std::uint32_t>(d - 1)) * x2)});
}

// random element of I of the given degree (k-combination of monomial
// multiples of the generators); may return zero
Poly random_ideal_element(Rng& rng, const Ideal& I, std::int64_t degree) {
    Poly acc = Poly::zero(I.ring);
    for (const auto& gen : I.gens) {
        if (gen.is_zero() || gen.degree() > degree) continue;
        if (rng.below(2) == 0) continue;
        Monomial m = random_monomial(rng, I.ring->nvars(), degree - gen.degree());
        acc = acc + gen.mul_term(m, c_from_int(I.ring->dom, rng.nonzero_range(-2, 2)));
    }
    return acc;
}

struct StepTrace {
    nlohmann::json j;
};

constexpr int kRedrawCap = 50;

// raise codimension by one with a supplement-style monoid append
RationalMap append_raise(const RationalMap& F, bool want_cm, Rng& rng, const DegreeOptions& opt,
                         nlohmann::json& trace) {
    Ideal I = Ideal::from_forms(F.forms);
    auto c0 = codimension(I, opt.budget);
    if (!c0) throw Error("append_raise: unit base ideal");
    for (int attempt = 0; attempt < kRedrawCap; ++attempt) {
        // dense: a sparse top coefficient too easily vanishes on a minimal
        // component of V(I), which would keep the codimension down
        Form top = random_dense_form(rng, F.ring, F.degree - 1);
        if (want_cm) {
            Ideal quot = colon(I, top.poly(), opt.budget);
            if (!ideal_equal(quot, I, GroebnerOptions{TermOrder::degrevlex(), opt.budget})) continue;
        }
        MonoidForm g = monoid_from_coeffs(F.ring, F.degree, {top, Form::zero(F.ring, F.degree)});
        AppendResult res = iterate_append(F, g, opt);
        auto c1 = codimension(Ideal::from_forms(res.map.forms), opt.budget);
        if (!c1 || *c1 != *c0 + 1) continue;
        if (want_cm) {
            CmCertificate cm = cm_certify_modular(Ideal::from_forms(res.map.forms), *c1, opt.budget);
            if (!cm.accepted || !cm.cm) continue;
        }
        trace.push_back({{"step", "append-raise"},
                         {"monoid_top", top.str()},
                         {"attempts", attempt + 1},
                         {"codim", *c1},
                         {"cm_checked", want_cm}});
        return res.map;
    }
    throw CertificationError("append_raise: no admissible monoid after " + std::to_string(kRedrawCap) +
                             " draws");
}

// keep codimension: the top coefficient vanishes on V(I) through x0
RationalMap append_keep(const RationalMap& F, Rng& rng, const DegreeOptions& opt, nlohmann::json& trace) {
    Ideal I = Ideal::from_forms(F.forms);
    auto c0 = codimension(I, opt.budget);
    if (!c0) throw Error("append_keep: unit base ideal");
    for (int attempt = 0; attempt < kRedrawCap; ++attempt) {
        Form h = random_form(rng, F.ring, F.degree - 2, 2);
        Form top = Form::from_poly(Poly::variable(F.ring, 0) * h.poly());
        MonoidForm g = monoid_from_coeffs(F.ring, F.degree, {top, Form::zero(F.ring, F.degree)});
        AppendResult res = iterate_append(F, g, opt);
        auto c1 = codimension(Ideal::from_forms(res.map.forms), opt.budget);
        if (!c1 || *c1 != *c0) continue;
        trace.push_back({{"step", "append-keep"},
                         {"monoid_top", top.str()},
                         {"attempts", attempt + 1},
                         {"codim", *c1}});
        return res.map;
    }
    throw CertificationError("append_keep: no admissible monoid after " + std::to_string(kRedrawCap) +
                             " draws");
}

// one monoid-multiply step to the next dimension with a linear multiplier
RationalMap multiply_step(const RationalMap& F, Rng& rng, const DegreeOptions& opt, nlohmann::json& trace) {
    Ideal I = Ideal::from_forms(F.forms);
    const std::int64_t D = F.degree + 1;
    for (int attempt = 0; attempt < kRedrawCap; ++attempt) {
        Form f = random_form(rng, F.ring, 1, 2);
        Poly a = random_ideal_element(rng, I, D - 1);
        if (a.is_zero()) continue;
        Poly b = random_ideal_element(rng, I, D);
        MonoidForm g = monoid_from_coeffs(F.ring, D,
                                          {Form::from_poly(a, D - 1), Form::from_poly(b, D)});
        MultiplyResult res = monoid_multiply(F, f, g, opt);
        if (!res.accepted) continue;
        trace.push_back({{"step", "monoid-multiply"},
                         {"f", f.str()},
                         {"g_top", a.str()},
                         {"g_tail", b.str()},
                         {"attempts", attempt + 1}});
        return res.map;
    }
    throw CertificationError("multiply_step: no admissible (f, g) after " + std::to_string(kRedrawCap) +
                             " draws");
}

RationalMap build_family_map(long n, long r, long d, bool want_cm, Rng& rng, const DegreeOptions& opt,
                             nlohmann::json& trace) {
    if (n == 2) {
        trace.push_back({{"step", "plane-base"}, {"degree", d}});
        return plane_base(d, Domain::rational());
    }
    if (want_cm) {
        if (r == 2) {
            // multiply chain from a plane map of degree d-(n-2)
            RationalMap cur = build_family_map(2, 2, d - (n - 2), true, rng, opt, trace);
            for (long k = 3; k <= n; ++k) cur = multiply_step(cur, rng, opt, trace);
            return cur;
        }
        RationalMap cur = build_family_map(n - (r - 2), 2, d, true, rng, opt, trace);
        for (long k = 0; k < r - 2; ++k) cur = append_raise(cur, true, rng, opt, trace);
        return cur;
    }
    RationalMap cur = plane_base(d, Domain::rational());
    trace.push_back({{"step", "plane-base"}, {"degree", d}});
    for (long k = 0; k < r - 2; ++k) cur = append_raise(cur, false, rng, opt, trace);
    for (long k = 0; k < n - r; ++k) cur = append_keep(cur, rng, opt, trace);
    return cur;
}

} // namespace

FamilyResult family(long n, long r, long d, bool want_cm, std::uint64_t seed, const DegreeOptions& opt) {
    if (n < 2) throw DomainError("family: n >= 2 required");
    if (r < 2 || r > n) throw DomainError("family: r must lie in [2, n]");
    if (d < 2) throw DomainError("family: d >= 2 required");
    if (want_cm && d < n + 1 - r)
        throw DomainError("family: the CM branch needs d >= n+1-r");

    FamilyResult out;
    if (want_cm && !family_cm_feasible(n, r, d)) {
        out.feasible = false;
        if (r == 2) {
            out.infeasible_reason =
                "no Cohen-Macaulay codimension-2 Cremona map of P^" + std::to_string(n) + " has degree " +
                std::to_string(d) + ": Hilbert-Burch forces degree >= n (the " + std::to_string(n + 1) +
                " independent forms need an (n+1) x n syzygy matrix with column degrees >= 1)";
        } else {
            out.infeasible_reason =
                "degree " + std::to_string(d) + " = n+1-r is not reached by the monoid construction " +
                "(it attains d >= n+2-r for codimension " + std::to_string(r) +
                " < n); whether the bound n+1-r is attained there is open";
        }
        return out;
    }

    nlohmann::json trace = nlohmann::json::array();
    Rng rng = Rng(seed).fork(0xfa);
    DegreeOptions dopt = opt;
    dopt.seed = seed;

    out.map = build_family_map(n, r, d, want_cm, rng, dopt, trace);
    out.feasible = true;
    out.degree = certify_degree(out.map, dopt);
    if (out.degree.degree != 1) throw Error("family: output failed the degree-1 certificate");
    if (out.map.degree != d) throw Error("family: output degree drifted");
    if (static_cast<long>(out.map.ring->nvars()) != n + 1) throw Error("family: output dimension drifted");
    auto c = codimension(Ideal::from_forms(out.map.forms), dopt.budget);
    if (!c || *c != r) throw Error("family: output codimension is not the prescribed r");
    out.codim = *c;
    if (want_cm) {
        CmCertificate cm = cm_certify_modular(Ideal::from_forms(out.map.forms), r, dopt.budget);
        if (!cm.accepted || !cm.cm) throw Error("family: CM certification failed on the output");
        out.cm = std::move(cm);
    }

    nlohmann::json meta{{"n", n},          {"r", r},          {"d", d},
                        {"want_cm", want_cm}, {"seed", seed}, {"steps", trace}};
    out.trace_json = meta.dump();
    return out;
}

// ---------------------------------------------------------------- sub-Hankel

std::vector<std::vector<Poly>> subhankel_matrix(const RingPtr& ring, long n) {
    std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n),
                                     std::vector<Poly>(static_cast<std::size_t>(n), Poly::zero(ring)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (i + j <= n) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Poly::variable(ring, static_cast<std::size_t>(i + j));
    return m;
}

SubHankelResult subhankel_family(long n, long q, const DegreeOptions& opt) {
    if (n < 3) throw DomainError("subhankel_family: n >= 3 required");
    if (q < 1) throw DomainError("subhankel_family: q >= 1 required");

    SubHankelResult out;
    out.n = n;
    out.q = q;
    RingPtr big = make_ring_x(static_cast<std::size_t>(n + 1));
    const std::size_t xn = static_cast<std::size_t>(n);
    const std::size_t xn1 = static_cast<std::size_t>(n - 1);

    out.determinant = Form::from_poly(poly_det(big, subhankel_matrix(big, n)));
    for (long i = 0; i <= n; ++i)
        out.partials.push_back(out.determinant.derivative(static_cast<std::size_t>(i)));

    // x_n divides the first n-1 partials
    out.divisibility_ok = true;
    std::vector<Poly> reduced; // F_{x_i} / x_n for i <= n-2
    for (long i = 0; i <= n - 2; ++i) {
        auto quot = out.partials[static_cast<std::size_t>(i)].poly().divide_by_monomial(
            Monomial::var(big->nvars(), xn));
        if (!quot) {
            out.divisibility_ok = false;
            return out;
        }
        reduced.push_back(*quot);
    }

    Poly xnq = Poly::variable(big, xn).pow(static_cast<std::uint32_t>(q));
    Poly xn1q = Poly::variable(big, xn1).pow(static_cast<std::uint32_t>(q));
    std::vector<Poly> listed;
    for (auto& rp : reduced) listed.push_back(rp * xnq);
    Poly gpoly = out.partials[xn1].poly() * Poly::variable(big, xn).pow(static_cast<std::uint32_t>(q - 1)) +
                 reduced[static_cast<std::size_t>(n - 2)] * xn1q;
    listed.push_back(gpoly);

    // everything lives in k[x1..xn]
    out.forms_in_subring = true;
    for (const auto& p : listed)
        if (p.support()[0]) out.forms_in_subring = false;
    if (!out.forms_in_subring) return out;

    std::vector<std::string> subvars(big->vars.begin() + 1, big->vars.end());
    RingPtr sub = make_ring(subvars, big->dom);
    std::vector<std::size_t> proj(big->nvars(), 0);
    for (std::size_t i = 1; i < big->nvars(); ++i) proj[i] = i - 1;

    std::vector<Form> forms;
    for (const auto& p : listed) forms.push_back(Form::from_poly(p.map_vars(sub, proj)));
    out.map = make_map(forms);

    // theorem ingredients for g
    const Poly& g_sub = forms.back().poly();
    const std::size_t x1_sub = 0;                  // x1 in the subring
    const std::size_t xn_sub = sub->nvars() - 1;   // xn in the subring
    out.g_is_x1_monoid = g_sub.degree_in(x1_sub) == 1;
    bool term_without_xn = false;
    for (const auto& [m, c] : g_sub.terms())
        if (m.e[xn_sub] == 0) term_without_xn = true;
    out.g_not_divisible_by_xn = term_without_xn;

    std::vector<Poly> reduced_sub;
    for (const auto& rp : reduced) reduced_sub.push_back(rp.map_vars(sub, proj));
    GroebnerBasis gb = buchberger(Ideal{sub, reduced_sub}, GroebnerOptions{TermOrder::degrevlex(), opt.budget});
    out.g_in_reduced_partials = contains(gb, g_sub);

    out.degree = certify_degree(out.map, opt);
    out.cm = cm_certify_modular(Ideal::from_forms(out.map.forms), 2, opt.budget);
    return out;
}

} // namespace cremona
