#pragma once

#include <nlohmann/json.hpp>

#include "cremona/constructions.hpp"
#include "cremona/corpus.hpp"

namespace cremona {

nlohmann::json map_to_json(const RationalMap& map);
RationalMap map_from_json(const nlohmann::json& j);

nlohmann::json log_matrix_to_json(const LogMatrix& L);
nlohmann::json monomial_certificate_to_json(const MonomialCremonaCertificate& cert);
nlohmann::json monomial_refusal_to_json(const MonomialRefusal& r);
nlohmann::json degree_certificate_to_json(const DegreeCertificate& cert);
nlohmann::json graded_matrix_to_json(const GradedMatrix& m);
nlohmann::json cm_certificate_to_json(const CmCertificate& cert);
nlohmann::json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const nlohmann::json& j);

} // namespace cremona
