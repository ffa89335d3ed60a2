#include "cremona/modvec.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cremona {

bool modvec_is_zero(const ModVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<std::int64_t> modvec_degree(const ModVec& v, const std::vector<std::int64_t>& twists) {
    std::optional<std::int64_t> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_homogeneous()) return std::nullopt;
        std::int64_t d = v[i].degree() + twists[i];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<std::int64_t>(0);
}

namespace {

struct MTerm {
    std::uint32_t pos;
    Monomial m;
    Coeff c;
};

// position-over-term order, lower position dominating
int mcmp(const TermOrder& ord, std::uint32_t pa, const Monomial& ma, std::uint32_t pb, const Monomial& mb) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return ord.cmp(ma, mb);
}

struct OMod {
    std::vector<MTerm> t; // sorted descending under mcmp
    std::int64_t sugar = 0;

    bool empty() const { return t.empty(); }
    const MTerm& lead() const { return t.front(); }
};

OMod to_omod(const ModVec& v, const TermOrder& ord) {
    OMod r;
    for (std::size_t p = 0; p < v.size(); ++p)
        for (const auto& [m, c] : v[p].terms()) {
            r.t.push_back(MTerm{static_cast<std::uint32_t>(p), m, c});
            r.sugar = std::max(r.sugar, m.degree());
        }
    std::sort(r.t.begin(), r.t.end(),
              [&](const MTerm& a, const MTerm& b) { return mcmp(ord, a.pos, a.m, b.pos, b.m) > 0; });
    return r;
}

ModVec to_modvec(const OMod& v, const RingPtr& ring, std::size_t rank) {
    ModVec r(rank, Poly::zero(ring));
    for (const auto& t : v.t) r[t.pos].add_term(t.m, t.c);
    return r;
}

// a - (c * x^m) * b
OMod mmerge_sub(const Domain& dom, const TermOrder& ord, const OMod& a, const Monomial& m, const Coeff& c,
                const OMod& b) {
    OMod r;
    r.sugar = a.sugar;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = b.t[j].m.mul(m);
        int cmp = mcmp(ord, a.t[i].pos, a.t[i].m, b.t[j].pos, bm);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back(MTerm{b.t[j].pos, std::move(bm), c_neg(dom, c_mul(dom, b.t[j].c, c))});
            ++j;
        } else {
            Coeff v = c_sub(dom, a.t[i].c, c_mul(dom, b.t[j].c, c));
            if (!c_is_zero(v)) r.t.push_back(MTerm{a.t[i].pos, a.t[i].m, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j)
        r.t.push_back(MTerm{b.t[j].pos, b.t[j].m.mul(m), c_neg(dom, c_mul(dom, b.t[j].c, c))});
    return r;
}

void mmake_monic(const Domain& dom, OMod& p) {
    if (p.empty()) return;
    Coeff inv = c_inv(dom, p.lead().c);
    if (c_eq(inv, c_one(dom))) return;
    for (auto& t : p.t) t.c = c_mul(dom, t.c, inv);
}

void mprimitive_scale(const Domain& dom, OMod& p) {
    if (!dom.is_rational() || p.empty()) return;
    mpz_class g(0), l(1);
    for (const auto& t : p.t) {
        const mpq_class& q = std::get<mpq_class>(t.c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (g == 0) return;
    mpq_class scale(l, g);
    scale.canonicalize();
    if (scale == 1) return;
    for (auto& t : p.t) {
        mpq_class v = std::get<mpq_class>(t.c) * scale;
        v.canonicalize();
        t.c = v;
    }
}

OMod mreduce_full(const Domain& dom, const TermOrder& ord, const std::vector<OMod>& reducers, OMod f,
                  std::size_t skip = static_cast<std::size_t>(-1)) {
    OMod out;
    out.sugar = f.sugar;
    while (!f.empty()) {
        bool reduced = false;
        for (std::size_t k = 0; k < reducers.size(); ++k) {
            if (k == skip || reducers[k].empty()) continue;
            const OMod& g = reducers[k];
            if (g.lead().pos != f.lead().pos) continue;
            auto q = f.lead().m.div(g.lead().m);
            if (!q) continue;
            Coeff c = c_div(dom, f.lead().c, g.lead().c);
            out.sugar = std::max(out.sugar, g.sugar + q->degree());
            f = mmerge_sub(dom, ord, f, *q, c, g);
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

struct MPair {
    std::int64_t sugar;
    Monomial lcm;
    std::uint32_t pos;
    std::size_t i, j;
};

struct MPairLess {
    TermOrder ord;
    bool operator()(const MPair& a, const MPair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.pos != b.pos) return a.pos < b.pos;
        int c = ord.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct MEngine {
    RingPtr ring;
    Domain dom;
    TermOrder ord;
    std::uint64_t budget;
    std::uint64_t used = 0;

    std::vector<OMod> basis;
    std::set<MPair, MPairLess> pairs;

    MEngine(RingPtr r, TermOrder o, std::uint64_t b)
        : ring(std::move(r)), dom(ring->dom), ord(o), budget(b), pairs(MPairLess{o}) {}

    void charge() {
        if (++used > budget) throw BudgetExceeded(budget);
    }

    MPair make_pair(std::size_t i, std::size_t j) const {
        Monomial l = basis[i].lead().m.lcm(basis[j].lead().m);
        std::int64_t sug = std::max(basis[i].sugar + l.degree() - basis[i].lead().m.degree(),
                                    basis[j].sugar + l.degree() - basis[j].lead().m.degree());
        return MPair{sug, l, basis[i].lead().pos, std::min(i, j), std::max(i, j)};
    }

    // chain criteria as in the scalar engine; no product criterion for modules
    void update_pairs(std::size_t t) {
        std::vector<MPair> cand;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].empty()) continue;
            if (basis[i].lead().pos != basis[t].lead().pos) continue;
            cand.push_back(make_pair(i, t));
        }
        std::vector<bool> drop(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[b]) continue;
                bool equal = cand[a].lcm == cand[b].lcm;
                if (cand[a].lcm.divisible_by(cand[b].lcm) && (!equal || b < a)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        for (auto it = pairs.begin(); it != pairs.end();) {
            const MPair& p = *it;
            if (p.pos == basis[t].lead().pos && p.lcm.divisible_by(basis[t].lead().m) &&
                !(basis[p.i].lead().m.lcm(basis[t].lead().m) == p.lcm) &&
                !(basis[p.j].lead().m.lcm(basis[t].lead().m) == p.lcm)) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        for (std::size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs.insert(cand[a]);
    }

    void add_generator(OMod g) {
        if (g.empty()) return;
        mprimitive_scale(dom, g);
        mmake_monic(dom, g);
        basis.push_back(std::move(g));
        update_pairs(basis.size() - 1);
    }

    void run() {
        while (!pairs.empty()) {
            MPair p = *pairs.begin();
            pairs.erase(pairs.begin());
            charge();
            const OMod& f = basis[p.i];
            const OMod& g = basis[p.j];
            Monomial mf = *p.lcm.div(f.lead().m);
            Monomial mg = *p.lcm.div(g.lead().m);
            OMod s;
            s.t.reserve(f.t.size());
            for (const auto& t : f.t) s.t.push_back(MTerm{t.pos, t.m.mul(mf), t.c});
            s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
            s = mmerge_sub(dom, ord, s, mg, c_one(dom), g);
            OMod nf = mreduce_full(dom, ord, basis, std::move(s));
            if (!nf.empty()) {
                mprimitive_scale(dom, nf);
                mmake_monic(dom, nf);
                basis.push_back(std::move(nf));
                update_pairs(basis.size() - 1);
            }
        }
    }

    std::vector<OMod> reduced_basis() const {
        std::vector<OMod> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) continue;
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || basis[j].empty()) continue;
                if (basis[i].lead().pos != basis[j].lead().pos) continue;
                bool equal = basis[i].lead().m == basis[j].lead().m;
                if (basis[i].lead().m.divisible_by(basis[j].lead().m) && (!equal || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        std::vector<OMod> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            OMod r = mreduce_full(dom, ord, minimal, minimal[i], i);
            mprimitive_scale(dom, r);
            mmake_monic(dom, r);
            if (!r.empty()) out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(), [&](const OMod& a, const OMod& b) {
            return mcmp(ord, a.lead().pos, a.lead().m, b.lead().pos, b.lead().m) > 0;
        });
        return out;
    }
};

} // namespace

std::vector<ModVec> module_groebner(const RingPtr& ring, std::size_t rank,
                                    const std::vector<ModVec>& gens, const TermOrder& base,
                                    std::uint64_t budget) {
    MEngine e(ring, base, budget);
    for (const auto& g : gens) {
        if (g.size() != rank) throw DomainError("module element rank mismatch");
        if (!modvec_is_zero(g)) e.add_generator(to_omod(g, base));
    }
    if (e.basis.empty()) return {};
    e.run();
    std::vector<ModVec> out;
    for (const auto& p : e.reduced_basis()) out.push_back(to_modvec(p, ring, rank));
    return out;
}

ModVec module_normal_form(const RingPtr& ring, std::size_t rank, const ModVec& f,
                          const std::vector<ModVec>& gb, const TermOrder& base) {
    std::vector<OMod> reducers;
    reducers.reserve(gb.size());
    for (const auto& g : gb) reducers.push_back(to_omod(g, base));
    OMod r = mreduce_full(ring->dom, base, reducers, to_omod(f, base));
    return to_modvec(r, ring, rank);
}

std::vector<ModVec> syzygy_module(const RingPtr& ring, std::size_t rank,
                                  const std::vector<ModVec>& columns, const TermOrder& base,
                                  std::uint64_t budget) {
    const std::size_t s = columns.size();
    std::vector<ModVec> gens;
    gens.reserve(s);
    for (std::size_t j = 0; j < s; ++j) {
        if (columns[j].size() != rank) throw DomainError("syzygy: column rank mismatch");
        ModVec h(rank + s, Poly::zero(ring));
        for (std::size_t i = 0; i < rank; ++i) h[i] = columns[j][i];
        h[rank + j] = Poly::from_int(ring, 1);
        gens.push_back(std::move(h));
    }
    std::vector<ModVec> gb = module_groebner(ring, rank + s, gens, base, budget);
    std::vector<ModVec> syz;
    for (const auto& g : gb) {
        bool first_block_zero = true;
        for (std::size_t i = 0; i < rank && first_block_zero; ++i)
            if (!g[i].is_zero()) first_block_zero = false;
        if (!first_block_zero) continue;
        syz.push_back(ModVec(g.begin() + static_cast<std::ptrdiff_t>(rank), g.end()));
    }
    return syz;
}

std::optional<std::vector<Poly>> express_in(const std::vector<Poly>& gens, const Poly& f,
                                            std::uint64_t budget) {
    if (gens.empty()) throw DomainError("express_in: no generators");
    const RingPtr& ring = f.ring();
    const std::size_t s = gens.size();
    std::vector<ModVec> mg;
    for (std::size_t j = 0; j < s; ++j) {
        ModVec h(1 + s, Poly::zero(ring));
        h[0] = gens[j];
        h[1 + j] = Poly::from_int(ring, 1);
        mg.push_back(std::move(h));
    }
    std::vector<ModVec> gb = module_groebner(ring, 1 + s, mg, TermOrder::degrevlex(), budget);
    ModVec probe(1 + s, Poly::zero(ring));
    probe[0] = f;
    ModVec nf = module_normal_form(ring, 1 + s, probe, gb, TermOrder::degrevlex());
    if (!nf[0].is_zero()) return std::nullopt;
    std::vector<Poly> q;
    q.reserve(s);
    for (std::size_t j = 0; j < s; ++j) q.push_back(-nf[1 + j]);
    return q;
}

namespace {

// sparse echelon space over the field, keyed by (position, exponents)
struct LinSpace {
    using Key = std::pair<std::size_t, std::vector<std::int32_t>>;
    using Row = std::map<Key, Coeff>;
    Domain dom;
    std::map<Key, Row> rows; // pivot -> normalized row

    explicit LinSpace(Domain d) : dom(d) {}

    Row reduce(Row v) const {
        while (!v.empty()) {
            auto it = rows.find(v.begin()->first);
            if (it == rows.end()) return v;
            Coeff c = v.begin()->second;
            for (const auto& [k, rc] : it->second) {
                auto vt = v.find(k);
                Coeff delta = c_mul(dom, rc, c);
                if (vt == v.end()) {
                    v.emplace(k, c_neg(dom, delta));
                } else {
                    Coeff nv = c_sub(dom, vt->second, delta);
                    if (c_is_zero(nv))
                        v.erase(vt);
                    else
                        vt->second = nv;
                }
            }
        }
        return v;
    }

    // returns true when v was independent (and inserts it)
    bool insert(Row v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Coeff inv = c_inv(dom, v.begin()->second);
        for (auto& [k, c] : v) c = c_mul(dom, c, inv);
        Key pivot = v.begin()->first;
        rows.emplace(std::move(pivot), std::move(v));
        return true;
    }
};

LinSpace::Row flatten(const ModVec& v) {
    LinSpace::Row row;
    for (std::size_t p = 0; p < v.size(); ++p)
        for (const auto& [m, c] : v[p].terms()) row.emplace(LinSpace::Key{p, m.e}, c);
    return row;
}

void enumerate_monomials(std::size_t nvars, std::int64_t deg, Monomial& cur, std::size_t var,
                         std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur.e[var] = static_cast<std::int32_t>(deg);
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (std::int64_t k = 0; k <= deg; ++k) {
        cur.e[var] = static_cast<std::int32_t>(k);
        enumerate_monomials(nvars, deg - k, cur, var + 1, out);
    }
    cur.e[var] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    Monomial cur = Monomial::one(nvars);
    enumerate_monomials(nvars, deg, cur, 0, out);
    return out;
}

} // namespace

std::vector<std::size_t> minimal_generator_indices(const RingPtr& ring, std::size_t rank,
                                                   const std::vector<ModVec>& gens,
                                                   const std::vector<std::int64_t>& twists) {
    if (twists.size() != rank) throw DomainError("minimal_generator_indices: twist count mismatch");
    struct Item {
        std::size_t idx;
        std::int64_t deg;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (modvec_is_zero(gens[i])) continue;
        auto d = modvec_degree(gens[i], twists);
        if (!d) throw DomainError("minimal_generator_indices: inhomogeneous generator");
        items.push_back(Item{i, *d});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.deg < b.deg; });

    std::vector<std::size_t> kept;
    std::size_t pos = 0;
    while (pos < items.size()) {
        std::int64_t D = items[pos].deg;
        std::size_t end = pos;
        while (end < items.size() && items[end].deg == D) ++end;

        // span of multiples of already-kept generators in degree D
        LinSpace space(ring->dom);
        for (auto k : kept) {
            auto dk = *modvec_degree(gens[k], twists);
            for (const auto& m : monomials_of_degree(ring->nvars(), D - dk)) {
                ModVec mult(rank, Poly::zero(ring));
                for (std::size_t p = 0; p < rank; ++p) mult[p] = gens[k][p].mul_term(m, c_one(ring->dom));
                space.insert(flatten(mult));
            }
        }
        for (std::size_t t = pos; t < end; ++t) {
            if (space.insert(flatten(gens[items[t].idx]))) kept.push_back(items[t].idx);
        }
        pos = end;
    }
    return kept;
}

} // namespace cremona
