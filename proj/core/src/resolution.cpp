#include "cremona/resolution.hpp"

#include <algorithm>

namespace cremona {

ModVec GradedMatrix::col(std::size_t j) const {
    ModVec v;
    v.reserve(nrows());
    for (std::size_t i = 0; i < nrows(); ++i) v.push_back(ent[i][j]);
    return v;
}

bool GradedMatrix::has_unit_entry() const {
    for (const auto& row : ent)
        for (const auto& p : row)
            if (!p.is_zero() && p.is_constant()) return true;
    return false;
}

bool GradedMatrix::degrees_consistent() const {
    for (std::size_t i = 0; i < nrows(); ++i)
        for (std::size_t j = 0; j < ncols(); ++j) {
            const Poly& p = ent[i][j];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || p.degree() != col_deg[j] - row_deg[i]) return false;
        }
    return true;
}

std::vector<long> FreeResolution::betti() const {
    std::vector<long> b{1};
    for (const auto& m : maps) b.push_back(static_cast<long>(m.ncols()));
    return b;
}

bool FreeResolution::composes_to_zero() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const GradedMatrix& a = maps[k];     // F_{k+1} -> F_k
        const GradedMatrix& b = maps[k + 1]; // F_{k+2} -> F_{k+1}
        for (std::size_t i = 0; i < a.nrows(); ++i)
            for (std::size_t j = 0; j < b.ncols(); ++j) {
                Poly acc = Poly::zero(ring);
                for (std::size_t t = 0; t < a.ncols(); ++t) acc = acc + a.ent[i][t] * b.ent[t][j];
                if (!acc.is_zero()) return false;
            }
    }
    return true;
}

bool FreeResolution::is_minimal() const {
    return std::none_of(maps.begin(), maps.end(),
                        [](const GradedMatrix& m) { return m.has_unit_entry(); });
}

namespace {

GradedMatrix matrix_from_columns(const RingPtr& ring, const std::vector<std::int64_t>& row_deg,
                                 const std::vector<ModVec>& cols,
                                 const std::vector<std::int64_t>& col_deg) {
    GradedMatrix m;
    m.ring = ring;
    m.row_deg = row_deg;
    m.col_deg = col_deg;
    m.ent.assign(row_deg.size(), std::vector<Poly>(cols.size(), Poly::zero(ring)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < row_deg.size(); ++i) m.ent[i][j] = cols[j][i];
    return m;
}

// minimal homogeneous generators of I, with degrees
std::pair<std::vector<Poly>, std::vector<std::int64_t>> minimal_ideal_generators(const Ideal& I) {
    std::vector<ModVec> wrapped;
    for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DomainError("resolution needs homogeneous generators");
        if (g.is_constant()) throw DomainError("resolution of the unit ideal is not defined");
        wrapped.push_back(ModVec{g});
    }
    if (wrapped.empty()) throw DomainError("resolution of the zero ideal is not defined");
    auto kept = minimal_generator_indices(I.ring, 1, wrapped, {0});
    std::vector<Poly> gens;
    std::vector<std::int64_t> degs;
    for (auto k : kept) {
        gens.push_back(wrapped[k][0]);
        degs.push_back(wrapped[k][0].degree());
    }
    return {gens, degs};
}

} // namespace

FreeResolution free_resolution(const Ideal& I, std::size_t max_length, std::uint64_t budget) {
    auto [gens, gdegs] = minimal_ideal_generators(I);

    FreeResolution res;
    res.ring = I.ring;

    GradedMatrix first;
    first.ring = I.ring;
    first.row_deg = {0};
    first.col_deg = gdegs;
    first.ent.assign(1, gens);
    res.maps.push_back(first);

    std::vector<ModVec> columns;
    for (const auto& g : gens) columns.push_back(ModVec{g});
    std::vector<std::int64_t> row_deg{0};
    std::vector<std::int64_t> col_deg = gdegs;

    for (std::size_t step = 1; step < max_length; ++step) {
        std::vector<ModVec> syz =
            syzygy_module(I.ring, row_deg.size(), columns, TermOrder::degrevlex(), budget);
        if (syz.empty()) {
            res.complete = true;
            return res;
        }
        auto kept = minimal_generator_indices(I.ring, col_deg.size(), syz, col_deg);
        std::vector<ModVec> min_syz;
        std::vector<std::int64_t> syz_deg;
        for (auto k : kept) {
            min_syz.push_back(syz[k]);
            syz_deg.push_back(*modvec_degree(syz[k], col_deg));
        }
        if (min_syz.empty()) {
            res.complete = true;
            return res;
        }
        res.maps.push_back(matrix_from_columns(I.ring, col_deg, min_syz, syz_deg));
        columns = min_syz;
        row_deg = col_deg;
        col_deg = syz_deg;
    }
    // one more kernel probe to see whether we stopped exactly at the end
    std::vector<ModVec> probe = syzygy_module(I.ring, row_deg.size(), columns, TermOrder::degrevlex(), budget);
    res.complete = probe.empty() || minimal_generator_indices(I.ring, col_deg.size(), probe, col_deg).empty();
    return res;
}

GradedMatrix syzygy_matrix(const Ideal& I, std::uint64_t budget) {
    FreeResolution res = free_resolution(I, 2, budget);
    if (res.maps.size() < 2) {
        // free module: no syzygies
        GradedMatrix m;
        m.ring = I.ring;
        m.row_deg = res.maps[0].col_deg;
        m.col_deg = {};
        m.ent.assign(m.row_deg.size(), {});
        return m;
    }
    return res.maps[1];
}

} // namespace cremona
