#pragma once

#include <vector>

#include "cremona/constructions.hpp"
#include "cremona/rng.hpp"

namespace cremona {

// random map satisfying the canonical restrictions (gcd 1, all variables)
RationalMap random_canonical_map(Rng& rng, const RingPtr& ring, std::size_t nforms, std::int64_t degree,
                                 std::size_t max_terms);

// every monomial quadratic Cremona map of P^2, by brute force over the
// degree-2 exponent vectors, certified; deterministic order
std::vector<RationalMap> monomial_quadratic_cremona_p2();

// seeded certified monomial Cremona maps of P^n (coordinate permutations,
// Magnus, and random log-matrices that pass certification)
std::vector<RationalMap> seeded_monomial_cremona(std::size_t n_plus_1, std::int64_t max_degree,
                                                 std::size_t count, std::uint64_t seed);

// seeded random de Jonquieres data of degree d
DeJonquieresData random_dejonquieres(Rng& rng, std::int64_t d, bool allow_zero_h = true);

// seeded birational maps built by the generators (de Jonquieres on P^2,
// monoid appends and multiplies at n <= 4, monomial Cremona maps)
std::vector<RationalMap> seeded_birational_maps(std::size_t count, std::uint64_t seed,
                                                const DegreeOptions& opt = {});

} // namespace cremona
