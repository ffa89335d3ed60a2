#pragma once

#include <optional>
#include <vector>

#include "cremona/form.hpp"
#include "cremona/poly.hpp"

namespace cremona {

// Finitely generated ideal. The public constructors take homogeneous
// forms; engine-level helpers (saturation tricks, affine charts) build
// ideals from raw polynomials directly.
struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;

    static Ideal of(RingPtr ring, std::vector<Poly> gens);
    static Ideal from_forms(const std::vector<Form>& forms);

    bool is_zero() const;
};

struct GroebnerOptions {
    TermOrder order = TermOrder::degrevlex();
    std::uint64_t budget = 1'000'000; // S-pair reduction cap
};

// Reduced Groebner basis: monic, auto-reduced, sorted descending by lead
// monomial. Deterministic given generator order and term order.
struct GroebnerBasis {
    RingPtr ring;
    TermOrder order;
    std::vector<Poly> basis;
    std::vector<Monomial> leads;

    bool is_trivial() const; // contains a nonzero constant
};

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opt = {});

Poly normal_form(const Poly& f, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const Poly& f);
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opt = {});

// generators of I ∩ k[vars \ drop_vars], in the subring
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars, std::uint64_t budget = 1'000'000);

Ideal intersect(const Ideal& a, const Ideal& b, std::uint64_t budget = 1'000'000);

// I : g^∞ via the Rabinowitsch trick
Ideal saturate_single(const Ideal& I, const Poly& g, std::uint64_t budget = 1'000'000);

// I : J^∞ = ∩_g (I : g^∞) over the generators of J
Ideal saturate(const Ideal& I, const Ideal& by, std::uint64_t budget = 1'000'000);

// I : g = (I ∩ (g)) / g
Ideal colon(const Ideal& I, const Poly& g, std::uint64_t budget = 1'000'000);

// Krull dimension of R/I via independent variable sets modulo the
// leading-term ideal; -1 for the unit ideal
long krull_dimension(const Ideal& I, std::uint64_t budget = 1'000'000);
long krull_dimension(const GroebnerBasis& gb);

// #vars - dim; nullopt encodes codim = ∞ (unit ideal)
std::optional<long> codimension(const Ideal& I, std::uint64_t budget = 1'000'000);

// k-vector-space dimension of R/I when the quotient is finite;
// nullopt when not zero-dimensional
std::optional<long> quotient_k_dimension(const GroebnerBasis& gb);

} // namespace cremona
