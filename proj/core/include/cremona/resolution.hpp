#pragma once

#include <vector>

#include "cremona/modvec.hpp"

namespace cremona {

// Homogeneous matrix between graded free modules; entry (i,j) has degree
// col_deg[j] - row_deg[i] (or is zero).
struct GradedMatrix {
    RingPtr ring;
    std::vector<std::int64_t> row_deg, col_deg;
    std::vector<std::vector<Poly>> ent; // ent[row][col]

    std::size_t nrows() const { return row_deg.size(); }
    std::size_t ncols() const { return col_deg.size(); }

    ModVec col(std::size_t j) const;
    bool has_unit_entry() const;
    bool degrees_consistent() const;
};

// Minimal graded free resolution of R/I:
//   ... -> F_2 --maps[1]--> F_1 --maps[0]--> F_0 = R -> R/I -> 0
// maps[0] is the 1 x mu row of minimal generators.
struct FreeResolution {
    RingPtr ring;
    std::vector<GradedMatrix> maps;
    bool complete = false; // kernel reached zero within max_length

    // projective dimension of R/I (only meaningful when complete)
    long pd() const { return static_cast<long>(maps.size()); }

    // ranks of F_0, F_1, ...: {1, mu, ...}
    std::vector<long> betti() const;

    bool composes_to_zero() const;
    bool is_minimal() const; // no unit entries anywhere
};

// Throws DomainError for the zero or unit ideal; BudgetExceeded per budget.
FreeResolution free_resolution(const Ideal& I, std::size_t max_length, std::uint64_t budget = 1'000'000);

// First syzygy matrix of the minimal generators of I (the spec's
// `syzygies` operation): rows indexed by minimal generators.
GradedMatrix syzygy_matrix(const Ideal& I, std::uint64_t budget = 1'000'000);

} // namespace cremona
