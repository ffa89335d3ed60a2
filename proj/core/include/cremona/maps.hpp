#pragma once

#include <string>
#include <vector>

#include "cremona/form.hpp"

namespace cremona {

// Rational map P^n -> P^m given by an ordered tuple of m+1 nonzero forms
// of a common degree. Ordering is significant (projective coordinates).
struct RationalMap {
    RingPtr ring;
    std::vector<Form> forms;
    std::int64_t degree = 0;

    std::size_t source_dim() const { return ring->nvars() - 1; } // n
    std::size_t target_dim() const { return forms.size() - 1; }  // m
};

RationalMap make_map(std::vector<Form> forms);
RationalMap map_from_strings(const RingPtr& ring, const std::vector<std::string>& texts);

bool maps_equal(const RationalMap& a, const RationalMap& b);
// per-form equality up to one nonzero scalar per form
bool maps_equal_up_to_scalars(const RationalMap& a, const RationalMap& b);

struct CanonicalReport {
    bool gcd_is_one = false;
    Form gcd;                        // witness for a fixed part
    bool all_vars_used = false;
    std::vector<std::size_t> missing_vars;

    bool ok() const { return gcd_is_one && all_vars_used; }
    std::string describe(const RingPtr& ring) const;
};

CanonicalReport check_canonical(const RationalMap& map);

// Columns are exponent vectors of the nonzero terms, per-form blocks in
// descending lex order; all column sums equal the map degree.
struct NewtonMatrix {
    RingPtr ring;
    std::int64_t degree = 0;
    std::vector<std::vector<std::int64_t>> entries;   // (n+1) rows
    std::vector<std::pair<std::size_t, std::size_t>> blocks; // (start, len) per form
    std::vector<std::vector<Coeff>> frames;           // coefficient frame per form

    std::size_t ncols() const { return entries.empty() ? 0 : entries.front().size(); }
};

NewtonMatrix newton_matrix(const RationalMap& map);

struct DirectrixVector {
    std::vector<std::int64_t> alpha; // per-row maxima
    std::int64_t dual_degree = 0;    // |alpha| - d

    std::int64_t weight() const {
        std::int64_t s = 0;
        for (auto a : alpha) s += a;
        return s;
    }
    bool operator==(const DirectrixVector&) const = default;
};

DirectrixVector directrix(const NewtonMatrix& nm);
DirectrixVector directrix(const RationalMap& map);

struct CanonicalViolation : Error {
    CanonicalViolation(std::string msg, CanonicalReport report)
        : Error(std::move(msg)), report(std::move(report)) {}
    CanonicalReport report;
};

// Newton complementary dual: replace every exponent column a by alpha - a,
// alpha taken over the whole set, coefficient frames carried unchanged.
// Rejects maps violating the canonical restrictions.
RationalMap newton_dual(const RationalMap& map);

} // namespace cremona
