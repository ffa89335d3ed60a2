#include "cremona/monomial_cremona.hpp"

#include <sstream>

namespace cremona {

std::vector<std::int64_t> LogMatrix::row_maxima() const {
    std::vector<std::int64_t> beta(size(), 0);
    for (std::size_t i = 0; i < size(); ++i)
        for (auto v : a[i]) beta[i] = std::max(beta[i], v);
    return beta;
}

LogMatrix LogMatrix::complementary_dual() const {
    auto beta = row_maxima();
    LogMatrix d = *this;
    std::int64_t bsum = 0;
    for (auto b : beta) bsum += b;
    d.degree = bsum - degree;
    for (std::size_t i = 0; i < size(); ++i)
        for (auto& v : d.a[i]) v = beta[i] - v;
    return d;
}

LogMatrix log_matrix(const RationalMap& map) {
    const std::size_t n1 = map.ring->nvars();
    if (map.forms.size() != n1)
        throw DomainError("log matrix needs n+1 monomials in n+1 variables");
    LogMatrix L;
    L.degree = map.degree;
    L.a.assign(n1, std::vector<std::int64_t>(n1, 0));
    for (std::size_t j = 0; j < n1; ++j) {
        const Poly& p = map.forms[j].poly();
        if (!p.is_monomial()) throw DomainError("log matrix needs monomial forms");
        const Monomial& m = p.terms().begin()->first;
        for (std::size_t i = 0; i < n1; ++i) L.a[i][j] = m.e[i];
    }
    return L;
}

RationalMap map_from_log_matrix(const RingPtr& ring, const LogMatrix& L) {
    std::vector<Form> forms;
    for (std::size_t j = 0; j < L.size(); ++j) {
        Monomial m = Monomial::one(ring->nvars());
        for (std::size_t i = 0; i < L.size(); ++i) m.e[i] = static_cast<std::int32_t>(L.a[i][j]);
        forms.push_back(Form::from_poly(Poly::term(ring, m, c_one(ring->dom))));
    }
    return make_map(std::move(forms));
}

const char* MonomialRefusal::reason_name(Reason r) {
    switch (r) {
        case Reason::NotMonomial: return "not-monomial";
        case Reason::WrongShape: return "wrong-shape";
        case Reason::CanonicalViolation: return "canonical-violation";
        case Reason::SingularLogMatrix: return "singular-log-matrix";
        case Reason::FractionalRowObstruction: return "fractional-row-obstruction";
        case Reason::InfeasibleGamma: return "infeasible-gamma";
        case Reason::SubstitutionFailure: return "substitution-failure";
    }
    return "?";
}

bool certified(const MonomialInvertResult& r) {
    return std::holds_alternative<MonomialCremonaCertificate>(r);
}
const MonomialCremonaCertificate& certificate(const MonomialInvertResult& r) {
    return std::get<MonomialCremonaCertificate>(r);
}
const MonomialRefusal& refusal(const MonomialInvertResult& r) { return std::get<MonomialRefusal>(r); }

namespace {

MonomialRefusal refuse(MonomialRefusal::Reason reason, std::string detail) {
    return MonomialRefusal{reason, std::move(detail)};
}

} // namespace

MonomialInvertResult is_monomial_cremona(const RationalMap& map) {
    const std::size_t n1 = map.ring->nvars();
    if (map.forms.size() != n1)
        return refuse(MonomialRefusal::Reason::WrongShape,
                      "expected " + std::to_string(n1) + " forms, got " + std::to_string(map.forms.size()));
    for (const auto& f : map.forms)
        if (!f.is_monomial())
            return refuse(MonomialRefusal::Reason::NotMonomial, "form " + f.str() + " is not a monomial");

    CanonicalReport rep = check_canonical(map);
    if (!rep.ok())
        return refuse(MonomialRefusal::Reason::CanonicalViolation, rep.describe(map.ring));

    LogMatrix L = log_matrix(map);
    ExactMatrix Lm(n1, n1);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) Lm.at(i, j) = static_cast<long>(L.a[i][j]);

    if (Lm.det() == 0)
        return refuse(MonomialRefusal::Reason::SingularLogMatrix, "det L = 0");
    ExactMatrix Linv = Lm.inverse();

    // B = L^-1 + u 1^T with u_i the minimal shift making row i of L^-1
    // integral and nonnegative; all entries of a row must share one
    // fractional class for an integral fix to exist
    std::vector<mpq_class> u(n1);
    for (std::size_t i = 0; i < n1; ++i) {
        mpq_class umin = -Linv.at(i, 0);
        for (std::size_t j = 0; j < n1; ++j) {
            mpq_class diff = Linv.at(i, j) - Linv.at(i, 0);
            diff.canonicalize();
            if (diff.get_den() != 1)
                return refuse(MonomialRefusal::Reason::FractionalRowObstruction,
                              "row " + std::to_string(i) + " of L^-1 mixes fractional classes");
            umin = std::max(umin, mpq_class(-Linv.at(i, j)));
        }
        u[i] = umin;
    }

    // gamma = L u must be a nonnegative integer vector
    std::vector<std::int64_t> gamma(n1, 0);
    for (std::size_t i = 0; i < n1; ++i) {
        mpq_class gi(0);
        for (std::size_t j = 0; j < n1; ++j) gi += mpq_class(static_cast<long>(L.a[i][j])) * u[j];
        gi.canonicalize();
        if (gi.get_den() != 1 || gi < 0)
            return refuse(MonomialRefusal::Reason::InfeasibleGamma,
                          "gamma_" + std::to_string(i) + " = " + gi.get_str() + " is not a nonnegative integer");
        gamma[i] = static_cast<std::int64_t>(gi.get_num().get_si());
    }

    LogMatrix B;
    B.a.assign(n1, std::vector<std::int64_t>(n1, 0));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            mpq_class v = Linv.at(i, j) + u[i];
            v.canonicalize();
            if (v.get_den() != 1 || v < 0)
                return refuse(MonomialRefusal::Reason::InfeasibleGamma,
                              "B entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + v.get_str() +
                                  " is not a nonnegative integer");
            B.a[i][j] = static_cast<std::int64_t>(v.get_num().get_si());
        }
    std::int64_t dp = 0;
    for (std::size_t i = 0; i < n1; ++i) dp += B.a[i][0];
    for (std::size_t j = 1; j < n1; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n1; ++i) s += B.a[i][j];
        if (s != dp)
            return refuse(MonomialRefusal::Reason::InfeasibleGamma, "B columns have unequal degrees");
    }
    B.degree = dp;

    // authoritative check: composing the tuples gives x^gamma * (x_0 : ... : x_n)
    RationalMap inverse = map_from_log_matrix(map.ring, B);
    std::vector<Poly> fpolys;
    for (const auto& f : map.forms) fpolys.push_back(f.poly());
    Monomial xg = Monomial::one(n1);
    for (std::size_t i = 0; i < n1; ++i) xg.e[i] = static_cast<std::int32_t>(gamma[i]);
    for (std::size_t j = 0; j < n1; ++j) {
        Poly composed = inverse.forms[j].poly().subst(fpolys);
        Poly expected = Poly::term(map.ring, xg.mul(Monomial::var(n1, j)), c_one(map.ring->dom));
        // the composed coordinate is a monomial with coefficient 1 here since
        // all forms are monic monomials
        if (!(composed == expected))
            return refuse(MonomialRefusal::Reason::SubstitutionFailure,
                          "composition coordinate " + std::to_string(j) + " is " + composed.str() +
                              ", expected " + expected.str());
    }

    // d d' = |gamma| + 1
    std::int64_t gsum = 0;
    for (auto g : gamma) gsum += g;
    if (map.degree * dp != gsum + 1)
        return refuse(MonomialRefusal::Reason::SubstitutionFailure, "d d' != |gamma| + 1");

    MonomialCremonaCertificate cert;
    cert.B = B;
    cert.gamma = gamma;
    cert.d_prime = dp;
    cert.beta = B.row_maxima();
    return cert;
}

RationalMap inverse_from_certificate(const RingPtr& ring, const MonomialCremonaCertificate& cert) {
    return map_from_log_matrix(ring, cert.B);
}

CommuteReport dual_inverse_commutes(const RationalMap& map) {
    MonomialInvertResult base = is_monomial_cremona(map);
    if (!certified(base))
        throw CertificationError(std::string("dual_inverse_commutes: input not certified (") +
                                 MonomialRefusal::reason_name(refusal(base).reason) + ": " +
                                 refusal(base).detail + ")");
    const auto& cert = certificate(base);

    RationalMap dual = newton_dual(map);
    MonomialInvertResult dual_res = is_monomial_cremona(dual);
    if (!certified(dual_res))
        throw CertificationError(std::string("dual_inverse_commutes: dual not certified (") +
                                 MonomialRefusal::reason_name(refusal(dual_res).reason) + ": " +
                                 refusal(dual_res).detail + ")");
    const auto& dual_cert = certificate(dual_res);

    CommuteReport rep;
    rep.via_dual_then_invert = dual_cert.B;
    rep.via_invert_then_dual = cert.B.complementary_dual();
    rep.equal = rep.via_dual_then_invert == rep.via_invert_then_dual;

    // gamma_hat_i = gamma_i + alpha_i (|beta| - d') - (L(f) beta)_i
    LogMatrix L = log_matrix(map);
    auto alpha = L.row_maxima();
    const auto& beta = cert.beta;
    std::int64_t bsum = 0;
    for (auto b : beta) bsum += b;
    rep.gamma_hat_formula.resize(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
        std::int64_t lb = 0;
        for (std::size_t l = 0; l < L.size(); ++l) lb += L.a[i][l] * beta[l];
        rep.gamma_hat_formula[i] = cert.gamma[i] + alpha[i] * (bsum - cert.d_prime) - lb;
    }
    rep.gamma_hat_measured = dual_cert.gamma;
    rep.gamma_formula_matches = rep.gamma_hat_measured == rep.gamma_hat_formula;
    return rep;
}

} // namespace cremona
