#include <doctest.h>

#include "cremona/birational.hpp"
#include "cremona/corpus.hpp"
#include "cremona/text.hpp"

using namespace cremona;

namespace {

RingPtr rxyz() { return make_ring({"x", "y", "z"}); }

Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Poly> gens;
    for (const auto& t : texts) gens.push_back(parse_poly(t, ring));
    return Ideal{ring, gens};
}

} // namespace

TEST_CASE("image_ideal: Magnus is dominant") {
    auto img = image_ideal(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}));
    CHECK(img.is_zero());
    // oracle: k[yz, xz, xy] has transcendence degree 3, so there is no relation
    CHECK(krull_dimension(img) == 3);
}

TEST_CASE("image_ideal: conic parametrization") {
    auto ring = make_ring_x(2);
    auto img = image_ideal(map_from_strings(ring, {"x0^2", "x0*x1", "x1^2"}));
    REQUIRE(img.gens.size() == 1);
    // oracle: substitute the parametrization into the relation
    std::vector<Poly> par{parse_poly("x0^2", ring), parse_poly("x0*x1", ring), parse_poly("x1^2", ring)};
    CHECK(img.gens[0].subst(par).is_zero());
    CHECK(img.gens[0].degree() == 2);
}

TEST_CASE("image_ideal: linear relation") {
    auto img = image_ideal(map_from_strings(rxyz(), {"x", "y", "x+y"}));
    REQUIRE(img.gens.size() == 1);
    bool plus = img.gens[0] == parse_poly("y0+y1-y2", img.ring);
    bool minus = img.gens[0] == parse_poly("-y0-y1+y2", img.ring);
    CHECK((plus || minus));
}

TEST_CASE("dual preserves image relations") {
    CHECK(dual_preserves_image_relations(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"})));
    CHECK(dual_preserves_image_relations(map_from_strings(make_ring_x(2), {"x0^2", "x0*x1", "x1^2"})));
    // binomial relation transfer on a monomial map with a genuine relation
    CHECK(dual_preserves_image_relations(
        map_from_strings(rxyz(), {"x^2*y", "x*y*z", "x*z^2", "y^2*z"})));
}

TEST_CASE("topological degree: Magnus involution is birational") {
    auto cert = topological_degree(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}), DegreeOptions{});
    CHECK(cert.degree == 1);
    CHECK(cert.birational());
    REQUIRE(cert.trials.size() >= 2);
    for (const auto& t : cert.trials) CHECK(t.fiber_degree == cert.trials.front().fiber_degree);
    // the monomial-exact leg agrees
    auto exact = certify_degree(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}));
    CHECK(exact.method == "monomial-exact");
    CHECK(exact.degree == 1);
}

TEST_CASE("topological degree: the squaring map has degree 4") {
    // oracle: over the algebraic closure the fiber over (a^2 : b^2 : c^2)
    // consists of the sign choices (+-a : +-b : +-c), projectively 4 points
    auto cert = topological_degree(map_from_strings(make_ring_x(3), {"x0^2", "x1^2", "x2^2"}),
                                   DegreeOptions{});
    CHECK(cert.degree == 4);
    CHECK(!cert.birational());
}

TEST_CASE("topological degree: conic parametrization is birational onto the image") {
    auto cert = topological_degree(map_from_strings(make_ring_x(2), {"x0^2", "x0*x1", "x1^2"}),
                                   DegreeOptions{});
    CHECK(cert.degree == 1);
}

TEST_CASE("topological degree: deterministic given the seed") {
    DegreeOptions opt;
    opt.seed = 42;
    auto a = topological_degree(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}), opt);
    auto b = topological_degree(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}), opt);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].prime == b.trials[i].prime);
        CHECK(a.trials[i].point == b.trials[i].point);
    }
}

TEST_CASE("topological degree requires canonical restrictions") {
    CHECK_THROWS_AS(topological_degree(map_from_strings(rxyz(), {"x*y", "x*z"}), DegreeOptions{}),
                    CanonicalViolation);
}

TEST_CASE("cm_certify: the sub-Hankel style ideal is perfect of codim 2") {
    auto ring = make_ring({"x1", "x2", "x3"});
    auto cert = cm_certify(ideal_of(ring, {"x3^2", "x2*x3", "2*x1*x3-x2^2"}), 2);
    CHECK(cert.accepted);
    CHECK(cert.measured_codim == 2);
    CHECK(cert.pd == 2);
    CHECK(cert.cm);
    CHECK(cert.betti == std::vector<long>{1, 3, 2});
    REQUIRE(cert.hilbert_burch.has_value());
    CHECK(cert.hilbert_burch->syz.nrows() == 3);
    CHECK(cert.hilbert_burch->syz.ncols() == 2);
    CHECK(cert.hilbert_burch->minors_match);
}

TEST_CASE("cm_certify: Koszul case has full codimension") {
    auto ring = make_ring_x(3);
    auto cert = cm_certify(ideal_of(ring, {"x0", "x1", "x2"}), 3);
    CHECK(cert.accepted);
    CHECK(cert.cm);
    CHECK(cert.pd == 3);
}

TEST_CASE("cm_certify: refused when the codimension differs") {
    auto ring = make_ring_x(3);
    auto cert = cm_certify(ideal_of(ring, {"x0*x1", "x0*x2"}), 2);
    CHECK(!cert.accepted);
    CHECK(cert.measured_codim == 1);
    CHECK(!cert.refusal.empty());
}

TEST_CASE("cm_certify_modular agrees with the exact run on the HB example") {
    auto ring = make_ring({"x1", "x2", "x3"});
    auto I = ideal_of(ring, {"x3^2", "x2*x3", "2*x1*x3-x2^2"});
    auto exact = cm_certify(I, 2);
    auto modular = cm_certify_modular(I, 2);
    CHECK(modular.accepted == exact.accepted);
    CHECK(modular.cm == exact.cm);
    CHECK(modular.betti == exact.betti);
    CHECK(modular.field_prime == 32003);
}

TEST_CASE("monomial-exact and fiber-sampling agree on certified monomial maps") {
    for (const auto& map : monomial_quadratic_cremona_p2()) {
        auto exact = certify_degree(map);
        CHECK(exact.method == "monomial-exact");
        CHECK(exact.degree == 1);
        auto sampled = topological_degree(map, DegreeOptions{});
        CHECK(sampled.degree == 1);
    }
}
