#pragma once

#include <optional>
#include <vector>

#include "cremona/groebner.hpp"

namespace cremona {

// Element of a free module R^r, stored position-wise.
using ModVec = std::vector<Poly>;

bool modvec_is_zero(const ModVec& v);

// Degree of a homogeneous element w.r.t. row twists (deg of entry i plus
// twists[i], uniform over nonzero entries); nullopt when inhomogeneous.
std::optional<std::int64_t> modvec_degree(const ModVec& v, const std::vector<std::int64_t>& twists);

// Reduced Groebner basis of the submodule of R^rank generated by `gens`,
// position-over-term with lower positions dominating (so the basis
// eliminates the leading block of positions). The product criterion is
// not applied; it is invalid for modules.
std::vector<ModVec> module_groebner(const RingPtr& ring, std::size_t rank,
                                    const std::vector<ModVec>& gens, const TermOrder& base,
                                    std::uint64_t budget = 1'000'000);

ModVec module_normal_form(const RingPtr& ring, std::size_t rank, const ModVec& f,
                          const std::vector<ModVec>& gb, const TermOrder& base);

// Generators of the kernel of R^s -> R^rank, e_j -> columns[j].
std::vector<ModVec> syzygy_module(const RingPtr& ring, std::size_t rank,
                                  const std::vector<ModVec>& columns, const TermOrder& base,
                                  std::uint64_t budget = 1'000'000);

// Quotients q with f = q_0 gens_0 + ... ; nullopt when f is not in the ideal.
std::optional<std::vector<Poly>> express_in(const std::vector<Poly>& gens, const Poly& f,
                                            std::uint64_t budget = 1'000'000);

// Indices of a minimal generating subset of homogeneous module elements,
// by linear algebra over k degree by degree (graded Nakayama).
std::vector<std::size_t> minimal_generator_indices(const RingPtr& ring, std::size_t rank,
                                                   const std::vector<ModVec>& gens,
                                                   const std::vector<std::int64_t>& twists);

} // namespace cremona
