#include "cremona/groebner.hpp"

#include <algorithm>
#include <set>

namespace cremona {

Ideal Ideal::of(RingPtr ring, std::vector<Poly> gens) {
    for (const auto& g : gens)
        if (!same_ring(g.ring(), ring)) throw DomainError("ideal generator ring mismatch");
    return Ideal{std::move(ring), std::move(gens)};
}

Ideal Ideal::from_forms(const std::vector<Form>& forms) {
    if (forms.empty()) throw DomainError("ideal needs at least one generator");
    std::vector<Poly> gens;
    RingPtr ring = forms.front().ring();
    for (const auto& f : forms) {
        if (!same_ring(f.ring(), ring)) throw DomainError("ideal generator ring mismatch");
        gens.push_back(f.poly());
    }
    return Ideal{ring, std::move(gens)};
}

bool Ideal::is_zero() const {
    return std::all_of(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); });
}

bool GroebnerBasis::is_trivial() const {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

namespace {

// Engine-side polynomial: terms sorted descending under the active order.
struct OPoly {
    std::vector<std::pair<Monomial, Coeff>> t;
    std::int64_t sugar = 0;

    bool empty() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const Coeff& lc() const { return t.front().second; }
};

OPoly to_opoly(const Poly& p, const TermOrder& ord) {
    OPoly r;
    r.t.assign(p.terms().begin(), p.terms().end());
    std::sort(r.t.begin(), r.t.end(),
              [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
    r.sugar = p.degree();
    return r;
}

Poly to_poly(const OPoly& p, const RingPtr& ring) {
    Poly r(ring);
    for (const auto& [m, c] : p.t) r.add_term(m, c);
    return r;
}

// a - (c * x^m) * b, all term lists sorted; linear merge
OPoly merge_sub(const Domain& dom, const OPoly& a, const Monomial& m, const Coeff& c, const OPoly& b,
                const TermOrder& ord) {
    OPoly r;
    r.sugar = a.sugar;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = b.t[j].first.mul(m);
        int cmp = ord.cmp(a.t[i].first, bm);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.emplace_back(std::move(bm), c_neg(dom, c_mul(dom, b.t[j].second, c)));
            ++j;
        } else {
            Coeff v = c_sub(dom, a.t[i].second, c_mul(dom, b.t[j].second, c));
            if (!c_is_zero(v)) r.t.emplace_back(a.t[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j)
        r.t.emplace_back(b.t[j].first.mul(m), c_neg(dom, c_mul(dom, b.t[j].second, c)));
    return r;
}

void make_monic(const Domain& dom, OPoly& p) {
    if (p.empty()) return;
    Coeff inv = c_inv(dom, p.lc());
    if (c_eq(inv, c_one(dom))) return;
    for (auto& [m, c] : p.t) c = c_mul(dom, c, inv);
}

// rescale rational coefficients to a primitive integer vector; keeps
// Buchberger intermediates from swelling
void primitive_scale(const Domain& dom, OPoly& p) {
    if (!dom.is_rational() || p.empty()) return;
    mpz_class g(0), l(1);
    for (const auto& [m, c] : p.t) {
        const mpq_class& q = std::get<mpq_class>(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (g == 0) return;
    mpq_class scale(l, g);
    scale.canonicalize();
    if (scale == 1) return;
    for (auto& [m, c] : p.t) {
        mpq_class v = std::get<mpq_class>(c) * scale;
        v.canonicalize();
        c = v;
    }
}

// full normal form of f against `reducers` (skipping index `skip`);
// updates sugar through the reduction trace
OPoly reduce_full(const Domain& dom, const TermOrder& ord, const std::vector<OPoly>& reducers,
                  OPoly f, std::size_t skip = static_cast<std::size_t>(-1)) {
    OPoly out;
    out.sugar = f.sugar;
    while (!f.empty()) {
        bool reduced = false;
        for (std::size_t k = 0; k < reducers.size(); ++k) {
            if (k == skip || reducers[k].empty()) continue;
            const OPoly& g = reducers[k];
            auto q = f.lm().div(g.lm());
            if (!q) continue;
            Coeff c = c_div(dom, f.lc(), g.lc());
            out.sugar = std::max(out.sugar, g.sugar + q->degree());
            f = merge_sub(dom, f, *q, c, g, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.t.push_back(std::move(f.t.front()));
            f.t.erase(f.t.begin());
        }
    }
    return out;
}

struct Pair {
    std::int64_t sugar;
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    TermOrder ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct Engine {
    RingPtr ring;
    Domain dom;
    TermOrder ord;
    std::uint64_t budget;
    std::uint64_t used = 0;

    std::vector<OPoly> basis;
    std::set<Pair, PairLess> pairs;

    Engine(RingPtr r, TermOrder o, std::uint64_t b)
        : ring(std::move(r)), dom(ring->dom), ord(o), budget(b), pairs(PairLess{o}) {}

    void charge() {
        if (++used > budget) throw BudgetExceeded(budget);
    }

    Pair make_pair(std::size_t i, std::size_t j) const {
        Monomial l = basis[i].lm().lcm(basis[j].lm());
        std::int64_t sug = std::max(basis[i].sugar + l.degree() - basis[i].lm().degree(),
                                    basis[j].sugar + l.degree() - basis[j].lm().degree());
        return Pair{sug, l, std::min(i, j), std::max(i, j)};
    }

    // Gebauer-Moller update after appending basis element t
    void update_pairs(std::size_t t) {
        std::vector<Pair> cand;
        std::vector<bool> coprime;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].empty()) continue;
            cand.push_back(make_pair(i, t));
            coprime.push_back(basis[i].lm().coprime(basis[t].lm()));
        }

        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (coprime[a]) continue; // retained as a dropper, discarded at insert
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[b]) continue;
                bool equal = cand[a].lcm == cand[b].lcm;
                if (cand[a].lcm.divisible_by(cand[b].lcm) && (!equal || b < a)) {
                    drop[a] = true;
                    break;
                }
            }
        }

        // old pairs whose lcm is strictly past the new lead (criterion B)
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Pair& p = *it;
            if (p.lcm.divisible_by(basis[t].lm()) &&
                !(basis[p.i].lm().lcm(basis[t].lm()) == p.lcm) &&
                !(basis[p.j].lm().lcm(basis[t].lm()) == p.lcm)) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }

        for (std::size_t a = 0; a < cand.size(); ++a)
            if (!drop[a] && !coprime[a]) pairs.insert(cand[a]);
    }

    void add_generator(OPoly g) {
        if (g.empty()) return;
        primitive_scale(dom, g);
        make_monic(dom, g);
        basis.push_back(std::move(g));
        update_pairs(basis.size() - 1);
    }

    void run() {
        while (!pairs.empty()) {
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            charge();
            const OPoly& f = basis[p.i];
            const OPoly& g = basis[p.j];
            Monomial mf = *p.lcm.div(f.lm());
            Monomial mg = *p.lcm.div(g.lm());
            OPoly s; // both monic: spoly = x^mf * f - x^mg * g
            s.t.reserve(f.t.size());
            for (const auto& [m, c] : f.t) s.t.emplace_back(m.mul(mf), c);
            s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
            s = merge_sub(dom, s, mg, c_one(dom), g, ord);
            OPoly nf = reduce_full(dom, ord, basis, std::move(s));
            if (!nf.empty()) {
                primitive_scale(dom, nf);
                make_monic(dom, nf);
                basis.push_back(std::move(nf));
                update_pairs(basis.size() - 1);
            }
        }
    }

    std::vector<OPoly> reduced_basis() const {
        std::vector<OPoly> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) continue;
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || basis[j].empty()) continue;
                bool equal = basis[i].lm() == basis[j].lm();
                if (basis[i].lm().divisible_by(basis[j].lm()) && (!equal || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        std::vector<OPoly> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            OPoly r = reduce_full(dom, ord, minimal, minimal[i], i);
            primitive_scale(dom, r);
            make_monic(dom, r);
            if (!r.empty()) out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [&](const OPoly& a, const OPoly& b) { return ord.cmp(a.lm(), b.lm()) > 0; });
        return out;
    }
};

} // namespace

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opt) {
    Engine e(I.ring, opt.order, opt.budget);
    for (const auto& g : I.gens)
        if (!g.is_zero()) e.add_generator(to_opoly(g, opt.order));
    GroebnerBasis gb{I.ring, opt.order, {}, {}};
    if (e.basis.empty()) return gb;
    e.run();
    for (auto& p : e.reduced_basis()) {
        gb.leads.push_back(p.lm());
        gb.basis.push_back(to_poly(p, I.ring));
    }
    return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (gb.basis.empty() || f.is_zero()) return f;
    std::vector<OPoly> reducers;
    reducers.reserve(gb.basis.size());
    for (const auto& g : gb.basis) reducers.push_back(to_opoly(g, gb.order));
    OPoly r = reduce_full(gb.ring->dom, gb.order, reducers, to_opoly(f, gb.order));
    return to_poly(r, gb.ring);
}

bool contains(const GroebnerBasis& gb, const Poly& f) { return normal_form(f, gb).is_zero(); }

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opt) {
    if (!same_ring(a.ring, b.ring)) throw DomainError("ideal_equal: ring mismatch");
    GroebnerBasis ga = buchberger(a, opt);
    for (const auto& g : b.gens)
        if (!contains(ga, g)) return false;
    GroebnerBasis gb = buchberger(b, opt);
    for (const auto& g : a.gens)
        if (!contains(gb, g)) return false;
    return true;
}

namespace {

// move the dropped variables to the front; returns (permuted ring, old->new map)
std::pair<RingPtr, std::vector<std::size_t>> front_permutation(const RingPtr& ring,
                                                               const std::vector<std::size_t>& drop) {
    std::vector<bool> dropped(ring->nvars(), false);
    for (auto v : drop) {
        if (v >= ring->nvars()) throw DomainError("eliminate: bad variable index");
        dropped[v] = true;
    }
    std::vector<std::string> vars;
    std::vector<std::size_t> old_to_new(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (dropped[i]) {
            old_to_new[i] = vars.size();
            vars.push_back(ring->vars[i]);
        }
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!dropped[i]) {
            old_to_new[i] = vars.size();
            vars.push_back(ring->vars[i]);
        }
    return {make_ring(std::move(vars), ring->dom), old_to_new};
}

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars, std::uint64_t budget) {
    if (drop_vars.empty()) return I;
    auto [pring, old_to_new] = front_permutation(I.ring, drop_vars);
    const std::size_t k = drop_vars.size();
    if (k >= I.ring->nvars()) throw DomainError("eliminate: cannot drop every variable");

    std::vector<Poly> pgens;
    for (const auto& g : I.gens)
        if (!g.is_zero()) pgens.push_back(g.map_vars(pring, old_to_new));

    GroebnerBasis gb = buchberger(Ideal{pring, std::move(pgens)}, GroebnerOptions{TermOrder::elim(k), budget});

    std::vector<bool> dropped(I.ring->nvars(), false);
    for (auto v : drop_vars) dropped[v] = true;
    std::vector<std::string> keep_vars;
    for (std::size_t i = 0; i < I.ring->nvars(); ++i)
        if (!dropped[i]) keep_vars.push_back(I.ring->vars[i]);
    RingPtr sub = make_ring(std::move(keep_vars), I.ring->dom);

    // permuted ring layout is [dropped block | kept block]
    std::vector<std::size_t> proj(pring->nvars(), 0);
    for (std::size_t i = k; i < pring->nvars(); ++i) proj[i] = i - k;

    std::vector<Poly> out;
    for (const auto& g : gb.basis) {
        bool free_of_dropped = true;
        for (const auto& [m, c] : g.terms()) {
            for (std::size_t i = 0; i < k && free_of_dropped; ++i)
                if (m.e[i] > 0) free_of_dropped = false;
            if (!free_of_dropped) break;
        }
        if (free_of_dropped) out.push_back(g.map_vars(sub, proj));
    }
    if (out.empty()) out.push_back(Poly::zero(sub));
    return Ideal{sub, std::move(out)};
}

Ideal intersect(const Ideal& a, const Ideal& b, std::uint64_t budget) {
    if (!same_ring(a.ring, b.ring)) throw DomainError("intersect: ring mismatch");
    RingPtr ext = extend_ring(a.ring, "@t");
    auto lift = identity_map(a.ring->nvars());
    const std::size_t tvar = ext->nvars() - 1;
    Poly t = Poly::variable(ext, tvar);
    Poly one_minus_t = Poly::from_int(ext, 1) - t;

    std::vector<Poly> gens;
    for (const auto& g : a.gens)
        if (!g.is_zero()) gens.push_back(t * g.map_vars(ext, lift));
    for (const auto& g : b.gens)
        if (!g.is_zero()) gens.push_back(one_minus_t * g.map_vars(ext, lift));

    Ideal K = eliminate(Ideal{ext, std::move(gens)}, {tvar}, budget);
    auto back = identity_map(K.ring->nvars());
    std::vector<Poly> out;
    for (const auto& g : K.gens) out.push_back(g.map_vars(a.ring, back));
    return Ideal{a.ring, std::move(out)};
}

Ideal saturate_single(const Ideal& I, const Poly& g, std::uint64_t budget) {
    if (g.is_zero()) throw DomainError("saturation by zero");
    RingPtr ext = extend_ring(I.ring, "@t");
    auto lift = identity_map(I.ring->nvars());
    const std::size_t tvar = ext->nvars() - 1;

    std::vector<Poly> gens;
    for (const auto& h : I.gens)
        if (!h.is_zero()) gens.push_back(h.map_vars(ext, lift));
    gens.push_back(Poly::from_int(ext, 1) - Poly::variable(ext, tvar) * g.map_vars(ext, lift));

    Ideal K = eliminate(Ideal{ext, std::move(gens)}, {tvar}, budget);
    auto back = identity_map(K.ring->nvars());
    std::vector<Poly> out;
    for (const auto& h : K.gens) out.push_back(h.map_vars(I.ring, back));
    if (out.empty()) out.push_back(Poly::zero(I.ring));
    return Ideal{I.ring, std::move(out)};
}

Ideal saturate(const Ideal& I, const Ideal& by, std::uint64_t budget) {
    std::optional<Ideal> acc;
    for (const auto& g : by.gens) {
        if (g.is_zero()) continue;
        Ideal s = saturate_single(I, g, budget);
        acc = acc ? intersect(*acc, s, budget) : s;
    }
    if (!acc) throw DomainError("saturation by the zero ideal");
    return *acc;
}

Ideal colon(const Ideal& I, const Poly& g, std::uint64_t budget) {
    if (g.is_zero()) throw DomainError("colon by zero");
    Ideal meet = intersect(I, Ideal{I.ring, {g}}, budget);
    std::vector<Poly> out;
    for (const auto& h : meet.gens) {
        if (h.is_zero()) continue;
        auto q = h.divide_exact(g);
        if (!q) throw Error("colon: inexact division (internal)");
        out.push_back(*q);
    }
    if (out.empty()) out.push_back(Poly::zero(I.ring));
    return Ideal{I.ring, std::move(out)};
}

long krull_dimension(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring->nvars();
    if (gb.basis.empty()) return static_cast<long>(n);
    if (gb.is_trivial()) return -1;
    long best = -1;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        long size = static_cast<long>(__builtin_popcountll(mask));
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lm : gb.leads) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v)
                if (lm.e[v] > 0 && !(mask & (1ull << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

long krull_dimension(const Ideal& I, std::uint64_t budget) {
    if (I.ring->nvars() > 24) throw DomainError("dimension: too many variables");
    return krull_dimension(buchberger(I, GroebnerOptions{TermOrder::degrevlex(), budget}));
}

std::optional<long> codimension(const Ideal& I, std::uint64_t budget) {
    long dim = krull_dimension(I, budget);
    if (dim < 0) return std::nullopt; // unit ideal: codim = infinity
    return static_cast<long>(I.ring->nvars()) - dim;
}

std::optional<long> quotient_k_dimension(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring->nvars();
    if (gb.basis.empty()) return std::nullopt;
    if (gb.is_trivial()) return 0;
    std::vector<std::int32_t> bound(n, -1);
    for (const auto& lm : gb.leads) {
        for (std::size_t v = 0; v < n; ++v) {
            if (lm.e[v] == 0) continue;
            bool pure = true;
            for (std::size_t w = 0; pure && w < n; ++w)
                if (w != v && lm.e[w] > 0) pure = false;
            if (pure && (bound[v] < 0 || lm.e[v] - 1 < bound[v])) bound[v] = lm.e[v] - 1;
        }
    }
    for (auto b : bound)
        if (b < 0) return std::nullopt; // some variable has no pure power in LT(I)

    long total = 0;
    std::vector<std::int32_t> idx(n, 0);
    while (true) {
        Monomial m{idx};
        bool divisible = false;
        for (const auto& lm : gb.leads)
            if (m.divisible_by(lm)) {
                divisible = true;
                break;
            }
        if (!divisible) ++total;
        std::size_t v = 0;
        while (v < n) {
            if (++idx[v] <= bound[v]) break;
            idx[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return total;
}

} // namespace cremona
