#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cremona/errors.hpp"

namespace cremona {

// Dense exact rational matrix. Determinants run fraction-free (Bareiss)
// after clearing denominators; inverses run Gauss-Jordan over Q.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t nrows, std::size_t ncols);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_int_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t nrows() const { return nr_; }
    std::size_t ncols() const { return nc_; }

    mpq_class& at(std::size_t i, std::size_t j) { return a_[i * nc_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a_[i * nc_ + j]; }

    ExactMatrix mul(const ExactMatrix& o) const;
    ExactMatrix add(const ExactMatrix& o) const;
    std::vector<mpq_class> col_sums() const;

    mpq_class det() const;                 // throws on non-square
    ExactMatrix inverse() const;           // throws SingularMatrixError

    bool operator==(const ExactMatrix& o) const;

    std::string json() const;              // array of rows, ints or "p/q"
    static ExactMatrix from_json(const std::string& text);

private:
    std::size_t nr_ = 0, nc_ = 0;
    std::vector<mpq_class> a_;
};

} // namespace cremona
