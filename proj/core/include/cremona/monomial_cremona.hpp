#pragma once

#include <variant>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/matrix.hpp"

namespace cremona {

// Log-matrix of a monomial map: column j is the exponent vector of the
// j-th monomial; all column sums equal the degree.
struct LogMatrix {
    std::vector<std::vector<std::int64_t>> a; // row-major, (n+1) x (n+1)
    std::int64_t degree = 0;

    std::size_t size() const { return a.size(); }
    std::vector<std::int64_t> row_maxima() const;
    LogMatrix complementary_dual() const; // [beta_i - b_ij] over the whole set
    bool operator==(const LogMatrix&) const = default;
};

// requires a monomial map with n+1 forms in n+1 variables
LogMatrix log_matrix(const RationalMap& map);
RationalMap map_from_log_matrix(const RingPtr& ring, const LogMatrix& L);

struct MonomialCremonaCertificate {
    LogMatrix B;                      // log-matrix of the inverse
    std::vector<std::int64_t> gamma;  // inversion vector
    std::int64_t d_prime = 0;         // degree of the inverse
    std::vector<std::int64_t> beta;   // directrix vector of the inverse
};

struct MonomialRefusal {
    enum class Reason {
        NotMonomial,
        WrongShape,
        CanonicalViolation,
        SingularLogMatrix,
        FractionalRowObstruction,
        InfeasibleGamma,
        SubstitutionFailure,
    };
    Reason reason;
    std::string detail;

    static const char* reason_name(Reason r);
};

using MonomialInvertResult = std::variant<MonomialCremonaCertificate, MonomialRefusal>;

bool certified(const MonomialInvertResult& r);
const MonomialCremonaCertificate& certificate(const MonomialInvertResult& r);
const MonomialRefusal& refusal(const MonomialInvertResult& r);

// Solve L(f) * B = Gamma + I for an integral nonnegative B with minimal
// shift, then verify the certificate by symbolic substitution.
MonomialInvertResult is_monomial_cremona(const RationalMap& map);

// inverse map built from a certificate, in the same source variables
RationalMap inverse_from_certificate(const RingPtr& ring, const MonomialCremonaCertificate& cert);

struct CommuteReport {
    bool equal = false;                           // Eq: L((dual f)^-1) == dual of L(f^-1)
    LogMatrix via_dual_then_invert;               // L((dual f)^-1)
    LogMatrix via_invert_then_dual;               // complementary dual of L(f^-1)
    std::vector<std::int64_t> gamma_hat_measured; // inversion vector of the dual map
    std::vector<std::int64_t> gamma_hat_formula;  // from the row-wise formula
    bool gamma_formula_matches = false;
};

// requires a certified monomial Cremona map; throws CertificationError if
// either certification leg refuses
CommuteReport dual_inverse_commutes(const RationalMap& map);

} // namespace cremona
