#include <doctest.h>

#include "cremona/corpus.hpp"
#include "cremona/monomial_cremona.hpp"
#include "cremona/text.hpp"

using namespace cremona;

namespace {

RingPtr rxyz() { return make_ring({"x", "y", "z"}); }

// substitution oracle, independent of the certificate construction: the
// composed tuple must be x^gamma * (x_0 : ... : x_n)
bool substitution_oracle(const RationalMap& map, const MonomialCremonaCertificate& cert) {
    RationalMap inv = inverse_from_certificate(map.ring, cert);
    std::vector<Poly> fp;
    for (const auto& f : map.forms) fp.push_back(f.poly());
    const std::size_t n1 = map.ring->nvars();
    Monomial xg = Monomial::one(n1);
    for (std::size_t i = 0; i < n1; ++i) xg.e[i] = static_cast<std::int32_t>(cert.gamma[i]);
    for (std::size_t j = 0; j < n1; ++j) {
        Poly lhs = inv.forms[j].poly().subst(fp);
        Poly rhs = Poly::term(map.ring, xg.mul(Monomial::var(n1, j)), c_one(map.ring->dom));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("Magnus is self-inverse with gamma = (1,1,1)") {
    auto res = is_monomial_cremona(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}));
    REQUIRE(certified(res));
    const auto& cert = certificate(res);
    CHECK(cert.B.a == std::vector<std::vector<std::int64_t>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(cert.gamma == std::vector<std::int64_t>{1, 1, 1});
    CHECK(cert.d_prime == 2);
    CHECK(substitution_oracle(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}), cert));
}

TEST_CASE("worked inversion: {x0^2, x0x1, x1x2}") {
    auto ring = make_ring_x(3);
    auto map = map_from_strings(ring, {"x0^2", "x0*x1", "x1*x2"});
    auto res = is_monomial_cremona(map);
    REQUIRE(certified(res));
    const auto& cert = certificate(res);
    // inverse (y0 y1, y1^2, y0 y2): columns (1,1,0), (0,2,0), (1,0,1)
    CHECK(cert.B.a == std::vector<std::vector<std::int64_t>>{{1, 0, 1}, {1, 2, 0}, {0, 0, 1}});
    CHECK(cert.gamma == std::vector<std::int64_t>{2, 1, 0});
    CHECK(cert.d_prime == 2);
    CHECK(cert.beta == std::vector<std::int64_t>{1, 2, 1});
    CHECK(substitution_oracle(map, cert));
}

TEST_CASE("the squaring map is refused on the fractional-row obstruction") {
    auto res = is_monomial_cremona(map_from_strings(make_ring_x(3), {"x0^2", "x1^2", "x2^2"}));
    REQUIRE(!certified(res));
    CHECK(refusal(res).reason == MonomialRefusal::Reason::FractionalRowObstruction);
}

TEST_CASE("refusals carry machine-readable reasons") {
    auto ring = make_ring_x(3);
    auto wrong_count = is_monomial_cremona(map_from_strings(ring, {"x0*x1", "x1*x2"}));
    REQUIRE(!certified(wrong_count));
    CHECK(refusal(wrong_count).reason == MonomialRefusal::Reason::WrongShape);

    auto not_mono = is_monomial_cremona(map_from_strings(ring, {"x0^2+x1^2", "x0*x1", "x1*x2"}));
    REQUIRE(!certified(not_mono));
    CHECK(refusal(not_mono).reason == MonomialRefusal::Reason::NotMonomial);

    auto fixed_part = is_monomial_cremona(map_from_strings(ring, {"x0^2", "x0*x1", "x0*x2"}));
    REQUIRE(!certified(fixed_part));
    CHECK(refusal(fixed_part).reason == MonomialRefusal::Reason::CanonicalViolation);

    auto singular = is_monomial_cremona(
        map_from_strings(make_ring_x(4), {"x0*x1", "x1*x2", "x2*x3", "x3*x0"}));
    REQUIRE(!certified(singular));
    CHECK(refusal(singular).reason == MonomialRefusal::Reason::SingularLogMatrix);
}

TEST_CASE("certificate invariants hold on the quadratic P^2 corpus") {
    auto corpus = monomial_quadratic_cremona_p2();
    // the Magnus set plus the six relabelings of {x^2, xy, yz}
    CHECK(corpus.size() == 7);
    for (const auto& map : corpus) {
        auto res = is_monomial_cremona(map);
        REQUIRE(certified(res));
        const auto& cert = certificate(res);
        // L B = Gamma + I exactly
        LogMatrix L = log_matrix(map);
        const std::size_t n1 = L.size();
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) {
                std::int64_t lb = 0;
                for (std::size_t k = 0; k < n1; ++k) lb += L.a[i][k] * cert.B.a[k][j];
                CHECK(lb == cert.gamma[i] + (i == j ? 1 : 0));
            }
        // d d' = |gamma| + 1
        std::int64_t gsum = 0;
        for (auto g : cert.gamma) gsum += g;
        CHECK(map.degree * cert.d_prime == gsum + 1);
        CHECK(substitution_oracle(map, cert));
        // observed cross-check, not assumed: |det L| = d
        ExactMatrix Lm(n1, n1);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) Lm.at(i, j) = static_cast<long>(L.a[i][j]);
        CHECK(abs(Lm.det()) == map.degree);
    }
}

TEST_CASE("dual-inverse commutation on the worked example") {
    auto ring = make_ring_x(3);
    auto rep = dual_inverse_commutes(map_from_strings(ring, {"x0^2", "x0*x1", "x1*x2"}));
    CHECK(rep.equal);
    CHECK(rep.via_dual_then_invert.a ==
          std::vector<std::vector<std::int64_t>>{{0, 1, 0}, {1, 0, 2}, {1, 1, 0}});
    CHECK(rep.gamma_formula_matches);
    CHECK(rep.gamma_hat_measured == std::vector<std::int64_t>{2, 0, 1});
}

TEST_CASE("dual-inverse commutation on Magnus (both sides the identity pattern)") {
    auto rep = dual_inverse_commutes(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}));
    CHECK(rep.equal);
    CHECK(rep.gamma_formula_matches);
}

TEST_CASE("commutation and dual-certification across the quadratic corpus") {
    for (const auto& map : monomial_quadratic_cremona_p2()) {
        // the Newton dual of a certified monomial Cremona map is again certified
        auto dual_res = is_monomial_cremona(newton_dual(map));
        CHECK(certified(dual_res));
        auto rep = dual_inverse_commutes(map);
        CHECK(rep.equal);
        CHECK(rep.gamma_formula_matches);
    }
}

TEST_CASE("seeded P^3 monomial Cremona maps are reproducible and certified") {
    auto a = seeded_monomial_cremona(4, 3, 25, 99);
    auto b = seeded_monomial_cremona(4, 3, 25, 99);
    REQUIRE(a.size() == 25);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(maps_equal(a[i], b[i]));
    for (const auto& map : a) {
        auto rep = dual_inverse_commutes(map);
        CHECK(rep.equal);
        CHECK(rep.gamma_formula_matches);
    }
}
