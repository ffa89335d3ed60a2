#pragma once

#include <cstdint>
#include <string>

#include "cremona/monomial.hpp"

namespace cremona {

// Term order on monomials. Elim compares the first `elim_block` variables
// as a dominant degrevlex block, so a Groebner basis w.r.t. Elim(k)
// eliminates variables 0..k-1.
struct TermOrder {
    enum class Kind { Lex, DegRevLex, Elim };
    Kind kind = Kind::DegRevLex;
    std::size_t elim_block = 0;

    static TermOrder lex() { return {Kind::Lex, 0}; }
    static TermOrder degrevlex() { return {Kind::DegRevLex, 0}; }
    static TermOrder elim(std::size_t block) { return {Kind::Elim, block}; }

    std::string name() const {
        switch (kind) {
            case Kind::Lex: return "lex";
            case Kind::DegRevLex: return "degrevlex";
            case Kind::Elim: return "elim(" + std::to_string(elim_block) + ")";
        }
        return "?";
    }

    // 1 if a > b, -1 if a < b, 0 if equal
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Lex:
                return lex_cmp(a, b);
            case Kind::DegRevLex:
                return drl_range(a, b, 0, a.e.size());
            case Kind::Elim: {
                int c = drl_range(a, b, 0, elim_block);
                if (c != 0) return c;
                return drl_range(a, b, elim_block, a.e.size());
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const TermOrder&) const = default;

private:
    static int drl_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        std::int64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }
};

} // namespace cremona
