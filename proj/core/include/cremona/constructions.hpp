#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/birational.hpp"

namespace cremona {

// ---------------------------------------------------------------- de Jonquieres

// Data for a plane de Jonquieres map {x q, y q, f} in k[x,y,z] with
// q = g + z h and f = f0 + z f1; g, h, f0, f1 binary forms in k[x,y] of
// degrees d-1, d-2, d, d-1 (g and h may be zero, not both).
struct DeJonquieresData {
    RingPtr ring_xy;
    std::int64_t d = 0;
    Form g, h, f0, f1;

    void validate() const; // throws DomainError, incl. gcd(f0,f1) != 1
};

// first/last nonzero coefficient index of a binary form c_i x^(deg-i) y^i
struct BinaryIndices {
    bool present = false;
    std::int64_t i = 0, j = 0;
};
BinaryIndices binary_indices(const Form& w);

struct DeJonquieresResult {
    RationalMap map; // {x q, y q, f} in k[x,y,z]
    DegreeCertificate degree;
};
DeJonquieresResult dejonquieres(const DeJonquieresData& data, const DegreeOptions& opt = {});

struct DualDegreeReport {
    std::int64_t formula = 0;        // index formula value
    std::int64_t alpha_route = 0;    // |alpha| - d
    std::int64_t measured = 0;       // degree of the Newton dual forms
    bool shape_ok = false;           // dual is {x Q, y Q, F} with one z-monoid Q
    bool consistent() const { return formula == alpha_route && alpha_route == measured && shape_ok; }
};
DualDegreeReport dejonquieres_dual_degree(const DeJonquieresData& data);

// ---------------------------------------------------------------- monoids

// g = g_ell x_n^(d-ell) + ... + g_{d-1} x_n + g_d with coefficients in the
// base ring, deg g_j = j, g_ell != 0.
struct MonoidForm {
    RingPtr base;
    std::int64_t d = 0, ell = 0;
    std::vector<Form> coeffs; // g_ell .. g_d

    void validate() const;
    Form assemble(const RingPtr& ext, std::size_t priv_var) const;
    const Form& top() const { return coeffs.front(); }    // g_ell
    const Form& tail() const { return coeffs.back(); }    // g_d
};

MonoidForm monoid_from_coeffs(RingPtr base, std::int64_t d, std::vector<Form> coeffs_from_ell);

struct SupplementReport {
    bool applicable = false; // deg_{x_n} g = 1 and g_d in I
    bool gd_in_ideal = false;
    bool top_coeff_nzd = false; // I : g_{d-1} == I
    long codim_before = 0, codim_after = 0;
    bool codim_plus_one = false;
    bool cm_before = false, cm_after = false;
};

struct AppendResult {
    RationalMap map;          // on P^n, forms (f_0,...,f_{m-1}, g)
    std::int64_t bound = 0;   // d - ell
    DegreeCertificate degree; // measured; must satisfy degree <= bound
    std::optional<SupplementReport> supplement;
};

// Cone recursion: append a degree-d monoid-like form in a new variable to
// a map certified birational onto its image. Measured topological degree
// is asserted <= d - ell, with equality to 1 when ell = d-1.
AppendResult iterate_append(const RationalMap& F, const MonoidForm& g, const DegreeOptions& opt = {},
                            bool with_supplement = false);

// ---------------------------------------------------------------- monoid multiply

struct MappingConeData {
    GradedMatrix phi;          // minimal syzygy matrix of I
    std::vector<Poly> content; // c(g): g = sum content_i * gen_i
    Poly multiplier;           // f
    GradedMatrix psi;          // [[phi, c(g)], [0, -f]]
    bool columns_are_syzygies = false; // (f gens, g) * psi == 0, symbolic
};

struct MultiplyResult {
    bool accepted = false;
    std::string rejection; // the failed hypothesis, named
    RationalMap map;       // {f_0 f, ..., f_{m-1} f, g} on P^n
    MappingConeData cone;
    DegreeCertificate degree;
    CmCertificate cm; // of the new base ideal, expected codim 2
};

// Theorem-style step: multiply a perfect-codimension-2 birational map by f
// and append an x_n-monoid g in I R[x_n] with gcd(f,g)=1 and
// deg g = deg f + d.
MultiplyResult monoid_multiply(const RationalMap& F, const Form& f, const MonoidForm& g,
                               const DegreeOptions& opt = {});

// ---------------------------------------------------------------- families

struct FamilyResult {
    bool feasible = false;
    std::string infeasible_reason;
    RationalMap map;
    DegreeCertificate degree;
    long codim = 0;
    std::optional<CmCertificate> cm;
    std::string trace_json; // construction trace: steps, seeds, redraws
};

// Cremona maps of P^n with prescribed codimension r in [2,n] and degree d,
// by the inductive recipe: plane base {x0^d, x0^(d-1)x1, x1^(d-1)x2},
// codimension raised by supplement appends, codim-2 CM at higher n by
// monoid-multiply chains. The CM branch is feasible for d >= n+2-r when
// r < n (Hilbert-Burch forces d >= n at r = 2) and for all d >= 2 at
// r = n; infeasible requests return a structured refusal.
FamilyResult family(long n, long r, long d, bool want_cm, std::uint64_t seed = 0,
                    const DegreeOptions& opt = {});

// feasibility of the CM branch as delivered by the construction
bool family_cm_feasible(long n, long r, long d);

// ---------------------------------------------------------------- sub-Hankel

struct SubHankelResult {
    long n = 0, q = 0;
    Form determinant;              // F in k[x0..xn]
    std::vector<Form> partials;    // F_{x0} .. F_{xn}
    bool divisibility_ok = false;  // x_n | F_{x_i} for i <= n-2
    bool forms_in_subring = false; // the n listed forms avoid x0
    bool g_is_x1_monoid = false;
    bool g_not_divisible_by_xn = false;
    bool g_in_reduced_partials = false;
    RationalMap map;               // on P^{n-1}, variables x1..xn
    DegreeCertificate degree;
    CmCertificate cm;              // expected codim 2
};

// Forms (F_{x_i}/x_n) x_n^q for i <= n-2 together with
// F_{x_{n-1}} x_n^(q-1) + (F_{x_{n-2}}/x_n) x_{n-1}^q, from the
// sub-Hankel determinant; certified codim-2 Cohen-Macaulay Cremona.
SubHankelResult subhankel_family(long n, long q, const DegreeOptions& opt = {});

// the degenerated Hankel matrix itself (entries x_{i+j} or 0)
std::vector<std::vector<Poly>> subhankel_matrix(const RingPtr& ring, long n);

} // namespace cremona
