#include "cremona/matrix.hpp"

#include <nlohmann/json.hpp>

namespace cremona {

ExactMatrix::ExactMatrix(std::size_t nrows, std::size_t ncols) : nr_(nrows), nc_(ncols), a_(nrows * ncols, mpq_class(0)) {
    if (nrows == 0 || ncols == 0) throw DomainError("matrix dimensions must be positive");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_int_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DomainError("matrix dimensions must be positive");
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.nc_) throw DomainError("ragged rows");
        for (std::size_t j = 0; j < m.nc_; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& o) const {
    if (nc_ != o.nr_) throw DomainError("dimension mismatch in matrix multiply");
    ExactMatrix r(nr_, o.nc_);
    for (std::size_t i = 0; i < nr_; ++i)
        for (std::size_t k = 0; k < nc_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.nc_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    for (auto& v : r.a_) v.canonicalize();
    return r;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& o) const {
    if (nr_ != o.nr_ || nc_ != o.nc_) throw DomainError("dimension mismatch in matrix add");
    ExactMatrix r(nr_, nc_);
    for (std::size_t i = 0; i < a_.size(); ++i) {
        r.a_[i] = a_[i] + o.a_[i];
        r.a_[i].canonicalize();
    }
    return r;
}

std::vector<mpq_class> ExactMatrix::col_sums() const {
    std::vector<mpq_class> s(nc_, mpq_class(0));
    for (std::size_t i = 0; i < nr_; ++i)
        for (std::size_t j = 0; j < nc_; ++j) s[j] += at(i, j);
    for (auto& v : s) v.canonicalize();
    return s;
}

mpq_class ExactMatrix::det() const {
    if (nr_ != nc_) throw DomainError("determinant of non-square matrix");
    const std::size_t n = nr_;
    // clear denominators row by row, then Bareiss over Z
    std::vector<mpz_class> m(n * n);
    mpz_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = at(i, j) * mpq_class(l);
            v.canonicalize();
            m[i * n + j] = v.get_num();
        }
        scale *= l;
    }
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv * n + k] == 0) ++piv;
            if (piv == n) return mpq_class(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    mpq_class d(sign > 0 ? m[n * n - 1] : mpz_class(-m[n * n - 1]), scale);
    d.canonicalize();
    return d;
}

ExactMatrix ExactMatrix::inverse() const {
    if (nr_ != nc_) throw DomainError("inverse of non-square matrix");
    const std::size_t n = nr_;
    ExactMatrix work = *this;
    ExactMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && work.at(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrixError("matrix is singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(piv, j), work.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        mpq_class p = work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            work.at(col, j).canonicalize();
            inv.at(col, j) /= p;
            inv.at(col, j).canonicalize();
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work.at(i, col) == 0) continue;
            mpq_class f = work.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(col, j);
                work.at(i, j).canonicalize();
                inv.at(i, j) -= f * inv.at(col, j);
                inv.at(i, j).canonicalize();
            }
        }
    }
    // m * inverse(m) = identity, verified
    ExactMatrix check = this->mul(inv);
    if (!(check == identity(n))) throw Error("inverse verification failed");
    return inv;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (nr_ != o.nr_ || nc_ != o.nc_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

std::string ExactMatrix::json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < nr_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < nc_; ++j) {
            const mpq_class& v = at(i, j);
            if (v.get_den() == 1 && v.get_num().fits_slong_p())
                row.push_back(v.get_num().get_si());
            else
                row.push_back(v.get_str());
        }
        rows.push_back(row);
    }
    return rows.dump();
}

ExactMatrix ExactMatrix::from_json(const std::string& text) {
    nlohmann::json rows = nlohmann::json::parse(text);
    if (!rows.is_array() || rows.empty()) throw DomainError("matrix json: expected non-empty array of rows");
    std::size_t nc = rows[0].size();
    ExactMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw DomainError("matrix json: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) {
            const auto& cell = rows[i][j];
            if (cell.is_number_integer()) {
                m.at(i, j) = static_cast<long>(cell.get<std::int64_t>());
            } else if (cell.is_string()) {
                mpq_class v(cell.get<std::string>());
                v.canonicalize();
                m.at(i, j) = v;
            } else {
                throw DomainError("matrix json: entries must be integers or 'p/q' strings");
            }
        }
    }
    return m;
}

} // namespace cremona
