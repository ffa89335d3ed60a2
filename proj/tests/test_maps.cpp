#include <doctest.h>
#include <algorithm>


#include "cremona/corpus.hpp"
#include "cremona/json_io.hpp"
#include "cremona/maps.hpp"
#include "cremona/text.hpp"

using namespace cremona;

namespace {

RingPtr rxyz() { return make_ring({"x", "y", "z"}); }

RationalMap magnus(std::size_t n_plus_1) {
    RingPtr ring = make_ring_x(n_plus_1);
    std::vector<Form> forms;
    for (std::size_t j = 0; j < n_plus_1; ++j) {
        Monomial m = Monomial::one(n_plus_1);
        for (std::size_t i = 0; i < n_plus_1; ++i)
            if (i != j) m.e[i] = 1;
        forms.push_back(Form::from_poly(Poly::term(ring, m, c_one(ring->dom))));
    }
    return make_map(std::move(forms));
}

RationalMap identity_map(std::size_t n_plus_1) {
    RingPtr ring = make_ring_x(n_plus_1);
    std::vector<Form> forms;
    for (std::size_t j = 0; j < n_plus_1; ++j) forms.push_back(Form::from_poly(Poly::variable(ring, j)));
    return make_map(std::move(forms));
}

RationalMap polar_cubic_partials() {
    auto ring = rxyz();
    auto f = parse_form("x*(x*z-y^2)", ring);
    return make_map({f.derivative(0), f.derivative(1), f.derivative(2)});
}

} // namespace

TEST_CASE("check_canonical: Magnus passes both conditions") {
    auto rep = check_canonical(map_from_strings(rxyz(), {"y*z", "x*z", "x*y"}));
    CHECK(rep.gcd_is_one);
    CHECK(rep.all_vars_used);
    CHECK(rep.ok());
}

TEST_CASE("check_canonical: fixed part is reported with a witness") {
    auto rep = check_canonical(map_from_strings(rxyz(), {"x*y", "x*z"}));
    CHECK(!rep.gcd_is_one);
    CHECK(rep.gcd == parse_form("x", rxyz()));
    CHECK(rep.all_vars_used);
}

TEST_CASE("check_canonical: missing variable is reported") {
    auto rep = check_canonical(map_from_strings(rxyz(), {"x^2", "x*y"}));
    CHECK(!rep.ok());
    CHECK(!rep.gcd_is_one); // the fixed part x is also present here
    REQUIRE(rep.missing_vars.size() == 1);
    CHECK(rep.missing_vars[0] == 2);
}

TEST_CASE("newton_matrix: identity map has the identity pattern") {
    auto nm = newton_matrix(identity_map(4));
    CHECK(nm.ncols() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(nm.entries[i][j] == (i == j ? 1 : 0));
    for (const auto& frame : nm.frames) {
        REQUIRE(frame.size() == 1);
        CHECK(c_eq(frame[0], c_one(Domain::rational())));
    }
}

TEST_CASE("newton_matrix: polar cubic partials have blocks 2,1,1") {
    auto nm = newton_matrix(polar_cubic_partials());
    REQUIRE(nm.blocks.size() == 3);
    CHECK(nm.blocks[0].second == 2);
    CHECK(nm.blocks[1].second == 1);
    CHECK(nm.blocks[2].second == 1);
    CHECK(nm.ncols() == 4);
    for (std::size_t c = 0; c < nm.ncols(); ++c) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += nm.entries[i][c];
        CHECK(s == 2);
    }
    // columns strictly decrease lexicographically inside each block
    for (auto [start, len] : nm.blocks)
        for (std::size_t c = start + 1; c < start + len; ++c) {
            Monomial a = Monomial::one(3), b = Monomial::one(3);
            for (std::size_t i = 0; i < 3; ++i) {
                a.e[i] = static_cast<std::int32_t>(nm.entries[i][c - 1]);
                b.e[i] = static_cast<std::int32_t>(nm.entries[i][c]);
            }
            CHECK(lex_cmp(a, b) > 0);
        }
}

TEST_CASE("newton_matrix: de Jonquieres blocks match the displayed sub-block shape") {
    auto ring = rxyz();
    auto map = map_from_strings(
        ring, {"x*(x^2+x*y+y^2+x*z+y*z)", "y*(x^2+x*y+y^2+x*z+y*z)", "x^3+y^3+x^2*z+y^2*z"});
    auto nm = newton_matrix(map);
    // z-exponents are 0 or 1; within each z-level of a block the first row
    // strictly decreases and the second strictly increases
    for (auto [start, len] : nm.blocks) {
        for (std::int64_t level = 0; level <= 1; ++level) {
            std::int64_t prev_x = -1, prev_y = -1;
            for (std::size_t c = start; c < start + len; ++c) {
                CHECK(nm.entries[2][c] <= 1);
                if (nm.entries[2][c] != level) continue;
                if (prev_x >= 0) {
                    CHECK(nm.entries[0][c] < prev_x);
                    CHECK(nm.entries[1][c] > prev_y);
                }
                prev_x = nm.entries[0][c];
                prev_y = nm.entries[1][c];
            }
        }
    }
}

TEST_CASE("directrix: identity map") {
    for (std::size_t n1 : {3u, 4u, 5u}) {
        auto d = directrix(identity_map(n1));
        CHECK(d.alpha == std::vector<std::int64_t>(n1, 1));
        CHECK(d.dual_degree == static_cast<std::int64_t>(n1) - 1);
    }
}

TEST_CASE("directrix: polar cubic partials give alpha=(2,2,1), dual degree 3") {
    auto d = directrix(polar_cubic_partials());
    CHECK(d.alpha == std::vector<std::int64_t>{2, 2, 1});
    CHECK(d.dual_degree == 3);
}

TEST_CASE("directrix: the degree-2 de Jonquieres example") {
    auto map = map_from_strings(rxyz(), {"x*y+x*z", "y^2+y*z", "x^2+y*z"});
    auto d = directrix(map);
    CHECK(d.alpha == std::vector<std::int64_t>{2, 2, 1});
    CHECK(d.dual_degree == 3);
}

TEST_CASE("newton_dual: identity goes to the Magnus involution") {
    for (std::size_t n1 : {3u, 4u, 5u}) {
        auto dual = newton_dual(identity_map(n1));
        CHECK(maps_equal(dual, magnus(n1)));
    }
}

TEST_CASE("newton_dual: polar cubic partials, frames carried verbatim") {
    auto dual = newton_dual(polar_cubic_partials());
    auto ring = rxyz();
    // frame-exact: coefficients (2,-1), (-2), (1) ride along
    CHECK(dual.forms[0] == parse_form("2*x*y^2 - x^2*z", ring));
    CHECK(dual.forms[1] == parse_form("-2*x*y*z", ring));
    CHECK(dual.forms[2] == parse_form("y^2*z", ring));
    // and as projective coordinates this is the displayed dual set
    auto displayed = map_from_strings(ring, {"x^2*z-2*x*y^2", "x*y*z", "y^2*z"});
    CHECK(maps_equal_up_to_scalars(dual, displayed));
}

TEST_CASE("newton_dual: worked monomial example") {
    auto ring = make_ring_x(3);
    auto dual = newton_dual(map_from_strings(ring, {"x0^2", "x0*x1", "x1*x2"}));
    CHECK(maps_equal(dual, map_from_strings(ring, {"x1*x2", "x0*x2", "x0^2"})));
}

TEST_CASE("newton_dual rejects maps violating the canonical restrictions") {
    auto r1 = make_ring({"x0"});
    auto single = make_map({parse_form("x0", r1)});
    CHECK_THROWS_AS(newton_dual(single), CanonicalViolation);
    CHECK_THROWS_AS(newton_dual(map_from_strings(rxyz(), {"x*y", "x*z"})), CanonicalViolation);
}

TEST_CASE("every term M pairs with a dual term at alpha - M carrying the same coefficient") {
    Rng rng(31);
    auto ring = make_ring_x(4);
    for (int t = 0; t < 50; ++t) {
        RationalMap map = random_canonical_map(rng, ring, 3 + rng.below(2), 2 + rng.below(3), 4);
        auto dx = directrix(map);
        RationalMap dual = newton_dual(map);
        for (std::size_t j = 0; j < map.forms.size(); ++j)
            for (const auto& [m, c] : map.forms[j].poly().terms()) {
                Monomial md = Monomial::one(4);
                for (std::size_t i = 0; i < 4; ++i)
                    md.e[i] = static_cast<std::int32_t>(dx.alpha[i]) - m.e[i];
                CHECK(c_eq(dual.forms[j].poly().coeff(md), c)); // M * dual(M) = x^alpha
            }
    }
}

TEST_CASE("involution and directrix preservation on random canonical maps") {
    Rng rng(37);
    for (int t = 0; t < 120; ++t) {
        std::size_t n1 = 3 + rng.below(2);
        auto ring = make_ring_x(n1);
        RationalMap map = random_canonical_map(rng, ring, 2 + rng.below(3), 1 + rng.below(4), 5);
        // under the canonical restrictions every alpha_i >= 1 and every row
        // of the Newton matrix attains 0
        auto nm = newton_matrix(map);
        auto dx = directrix(nm);
        for (std::size_t i = 0; i < n1; ++i) {
            CHECK(dx.alpha[i] >= 1);
            CHECK(*std::min_element(nm.entries[i].begin(), nm.entries[i].end()) == 0);
        }
        RationalMap dual = newton_dual(map);
        CHECK(directrix(dual).alpha == directrix(map).alpha);
        RationalMap back = newton_dual(dual);
        CHECK(maps_equal(back, map));
        CHECK(check_canonical(dual).ok());
        std::int64_t n = static_cast<std::int64_t>(n1) - 1;
        CHECK(dual.degree >= n + 1 - map.degree);
        CHECK(dual.degree <= n * map.degree);
    }
}

TEST_CASE("map json round trip") {
    auto map = map_from_strings(rxyz(), {"2*x*z-y^2", "-2*x*y", "x^2"});
    auto j = map_to_json(map);
    CHECK(j["degree"] == 2);
    RationalMap back = map_from_json(j);
    CHECK(maps_equal(map, back));
    CHECK_THROWS_AS(map_from_json(nlohmann::json{{"vars", {"x"}}, {"forms", {"x"}}, {"degree", 7}}),
                    DomainError);
}
