#include "cremona/maps.hpp"

#include <sstream>

#include "cremona/text.hpp"

namespace cremona {

RationalMap make_map(std::vector<Form> forms) {
    if (forms.empty()) throw DomainError("a rational map needs at least one form");
    RingPtr ring = forms.front().ring();
    std::int64_t d = forms.front().degree();
    for (const auto& f : forms) {
        if (f.is_zero()) throw DomainError("rational map forms must be nonzero");
        if (!same_ring(f.ring(), ring)) throw DomainError("rational map forms live in different rings");
        if (f.degree() != d)
            throw DomainError("rational map forms must share a degree: " + std::to_string(d) + " vs " +
                              std::to_string(f.degree()));
    }
    return RationalMap{ring, std::move(forms), d};
}

RationalMap map_from_strings(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Form> forms;
    forms.reserve(texts.size());
    for (const auto& t : texts) forms.push_back(parse_form(t, ring));
    return make_map(std::move(forms));
}

bool maps_equal(const RationalMap& a, const RationalMap& b) {
    if (!same_ring(a.ring, b.ring) || a.forms.size() != b.forms.size()) return false;
    for (std::size_t i = 0; i < a.forms.size(); ++i)
        if (!(a.forms[i] == b.forms[i])) return false;
    return true;
}

bool maps_equal_up_to_scalars(const RationalMap& a, const RationalMap& b) {
    if (!same_ring(a.ring, b.ring) || a.forms.size() != b.forms.size()) return false;
    const Domain& dom = a.ring->dom;
    for (std::size_t i = 0; i < a.forms.size(); ++i) {
        const Poly& pa = a.forms[i].poly();
        const Poly& pb = b.forms[i].poly();
        if (pa.nterms() != pb.nterms()) return false;
        if (pa.is_zero()) continue;
        // scalar fixed by the lex-leading terms
        const auto& [ma, ca] = *pa.terms().begin();
        const auto& [mb, cb] = *pb.terms().begin();
        if (!(ma == mb)) return false;
        Coeff lambda = c_div(dom, ca, cb);
        if (!(pa == pb.scalar_mul(lambda))) return false;
    }
    return true;
}

std::string CanonicalReport::describe(const RingPtr& ring) const {
    std::ostringstream os;
    if (gcd_is_one)
        os << "no fixed part";
    else
        os << "fixed part gcd = " << gcd.str();
    os << "; ";
    if (all_vars_used) {
        os << "every variable occurs";
    } else {
        os << "missing variables:";
        for (auto v : missing_vars) os << " " << ring->vars[v];
    }
    return os.str();
}

CanonicalReport check_canonical(const RationalMap& map) {
    CanonicalReport rep;
    rep.gcd = gcd_set(map.forms);
    rep.gcd_is_one = !rep.gcd.is_zero() && rep.gcd.degree() == 0;

    std::vector<bool> used(map.ring->nvars(), false);
    for (const auto& f : map.forms) {
        auto s = f.poly().support();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i]) used[i] = true;
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) rep.missing_vars.push_back(i);
    rep.all_vars_used = rep.missing_vars.empty();
    return rep;
}

NewtonMatrix newton_matrix(const RationalMap& map) {
    const std::size_t n1 = map.ring->nvars();
    NewtonMatrix nm;
    nm.ring = map.ring;
    nm.degree = map.degree;
    nm.entries.assign(n1, {});
    for (const auto& f : map.forms) {
        std::size_t start = nm.ncols();
        std::vector<Coeff> frame;
        // Poly stores terms in descending lex order already
        for (const auto& [m, c] : f.poly().terms()) {
            for (std::size_t i = 0; i < n1; ++i) nm.entries[i].push_back(m.e[i]);
            frame.push_back(c);
        }
        nm.blocks.emplace_back(start, f.poly().nterms());
        nm.frames.push_back(std::move(frame));
    }
    return nm;
}

DirectrixVector directrix(const NewtonMatrix& nm) {
    DirectrixVector d;
    d.alpha.assign(nm.entries.size(), 0);
    for (std::size_t i = 0; i < nm.entries.size(); ++i)
        for (auto v : nm.entries[i]) d.alpha[i] = std::max(d.alpha[i], v);
    d.dual_degree = d.weight() - nm.degree;
    return d;
}

DirectrixVector directrix(const RationalMap& map) { return directrix(newton_matrix(map)); }

RationalMap newton_dual(const RationalMap& map) {
    CanonicalReport rep = check_canonical(map);
    if (!rep.ok())
        throw CanonicalViolation("newton_dual rejected: " + rep.describe(map.ring), rep);

    NewtonMatrix nm = newton_matrix(map);
    DirectrixVector dx = directrix(nm);
    const std::size_t n1 = map.ring->nvars();
    const std::int64_t n = static_cast<std::int64_t>(n1) - 1;

    std::vector<Form> dual_forms;
    for (std::size_t j = 0; j < map.forms.size(); ++j) {
        auto [start, len] = nm.blocks[j];
        Poly p(map.ring);
        for (std::size_t col = 0; col < len; ++col) {
            Monomial m = Monomial::one(n1);
            for (std::size_t i = 0; i < n1; ++i)
                m.e[i] = static_cast<std::int32_t>(dx.alpha[i] - nm.entries[i][start + col]);
            p.add_term(m, nm.frames[j][col]);
        }
        dual_forms.push_back(Form::from_poly(p, dx.dual_degree));
    }
    RationalMap dual = make_map(std::move(dual_forms));
    if (dual.degree != dx.dual_degree) throw Error("newton_dual: degree bookkeeping failed");
    if (dx.dual_degree < n + 1 - map.degree || dx.dual_degree > n * map.degree)
        throw Error("newton_dual: dual degree " + std::to_string(dx.dual_degree) +
                    " violates the n+1-d <= d^ <= nd bounds");
    return dual;
}

} // namespace cremona
