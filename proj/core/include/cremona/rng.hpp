#pragma once

#include <cstdint>

#include "cremona/form.hpp"

namespace cremona {

// splitmix64; deterministic across platforms, unlike the std distributions
struct Rng {
    std::uint64_t s;

    explicit Rng(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    std::int64_t nonzero_range(std::int64_t lo, std::int64_t hi) {
        std::int64_t v = 0;
        do {
            v = range(lo, hi);
        } while (v == 0);
        return v;
    }

    Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0xff51afd7ed558ccdull)); }
};

Monomial random_monomial(Rng& rng, std::size_t nvars, std::int64_t degree);

// nonzero homogeneous form with at most max_terms terms and small integer
// coefficients
Form random_form(Rng& rng, const RingPtr& ring, std::int64_t degree, std::size_t max_terms);

// fully dense form: every monomial of the degree, nonzero coefficient;
// in particular never zero at a coordinate point
Form random_dense_form(Rng& rng, const RingPtr& ring, std::int64_t degree);

} // namespace cremona
