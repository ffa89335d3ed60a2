#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/monomial_cremona.hpp"
#include "cremona/resolution.hpp"

namespace cremona {

struct DegreeTrial {
    std::int64_t prime = 0;
    std::vector<std::int64_t> point;
    long fiber_degree = 0;
};

struct DegreeCertificate {
    std::string method;               // "monomial-exact" | "fiber-sampling"
    long degree = 0;
    std::vector<DegreeTrial> trials;  // all agree by construction
    int escalations = 0;

    bool birational() const { return degree == 1; }
};

struct DegreeOptions {
    std::uint64_t seed = 0;
    int trials = 2;
    std::vector<std::int64_t> primes = {32003, 65537};
    int resample_cap = 20;
    int escalation_cap = 3;
    std::uint64_t budget = 1'000'000;
    bool verbose = false; // escalation log to stderr
};

// Fiber degree over a sampled image point: minors of the 2x2 matrix with
// rows (b, f(x)), saturated past the base locus, cut with a random affine
// chart; the quotient k-dimension is the fiber degree. Probabilistic,
// one-sided per Schwartz-Zippel; trials over distinct primes must agree.
DegreeCertificate topological_degree(const RationalMap& map, const DegreeOptions& opt = {});

// monomial-exact shortcut when the map is square monomial and certified;
// falls back to fiber sampling otherwise
DegreeCertificate certify_degree(const RationalMap& map, const DegreeOptions& opt = {});

// Defining ideal of the image: kernel of y_j -> f_j by block elimination.
// Target ring variables are y0..ym (domain copied from the source).
Ideal image_ideal(const RationalMap& map, std::uint64_t budget = 1'000'000);

// Executable content of the algebra-isomorphism statement: the image
// ideals of a map and of its Newton dual coincide under y_j -> y_j.
bool dual_preserves_image_relations(const RationalMap& map, std::uint64_t budget = 1'000'000);

struct PerfectCod2Certificate {
    GradedMatrix syz;       // (m+1) x m minimal syzygy matrix
    bool minors_match = false; // generators = unit * signed maximal minors
};

struct CmCertificate {
    bool accepted = false;
    std::string refusal;            // set when not accepted
    std::optional<long> measured_codim; // nullopt = infinite (unit ideal)
    long pd = -1;
    bool cm = false;
    std::vector<long> betti;        // of R/I
    std::optional<PerfectCod2Certificate> hilbert_burch;
    std::int64_t field_prime = 0;   // 0 when certified over Q
};

// codim by leading-term combinatorics, pd by minimal free resolution,
// CM iff pd == codim; for codim 2 additionally runs the Hilbert-Burch
// maximal-minors comparison.
CmCertificate cm_certify(const Ideal& I, long expected_codim, std::uint64_t budget = 1'000'000);

// policy wrapper for rational ideals: certify mod p1, cross-check mod p2,
// escalate to Q when the modular runs disagree
CmCertificate cm_certify_modular(const Ideal& I, long expected_codim, std::uint64_t budget = 1'000'000,
                                 const std::vector<std::int64_t>& primes = {32003, 65537});

// symbolic determinant by cofactor expansion (small matrices)
Poly poly_det(const RingPtr& ring, const std::vector<std::vector<Poly>>& m);

} // namespace cremona
