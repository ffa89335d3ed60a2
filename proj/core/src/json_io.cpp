#include "cremona/json_io.hpp"

#include "cremona/text.hpp"

namespace cremona {

namespace {

Domain domain_from_json(const nlohmann::json& j) {
    if (!j.contains("field") || j["field"] == "q") return Domain::rational();
    if (j["field"] == "fp") {
        if (!j.contains("p")) throw DomainError("map json: field 'fp' needs a prime 'p'");
        return Domain::prime(j["p"].get<std::int64_t>());
    }
    throw DomainError("map json: field must be 'q' or 'fp'");
}

} // namespace

nlohmann::json map_to_json(const RationalMap& map) {
    nlohmann::json j;
    j["vars"] = map.ring->vars;
    j["degree"] = map.degree;
    nlohmann::json forms = nlohmann::json::array();
    for (const auto& f : map.forms) forms.push_back(f.str());
    j["forms"] = forms;
    if (!map.ring->dom.is_rational()) {
        j["field"] = "fp";
        j["p"] = map.ring->dom.p;
    }
    return j;
}

RationalMap map_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("forms"))
        throw DomainError("map json needs 'vars' and 'forms'");
    RingPtr ring = make_ring(j["vars"].get<std::vector<std::string>>(), domain_from_json(j));
    std::vector<std::string> texts = j["forms"].get<std::vector<std::string>>();
    RationalMap map = map_from_strings(ring, texts);
    if (j.contains("degree") && j["degree"].get<std::int64_t>() != map.degree)
        throw DomainError("map json: declared degree " + j["degree"].dump() + " does not match the forms");
    return map;
}

nlohmann::json log_matrix_to_json(const LogMatrix& L) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : L.a) rows.push_back(r);
    return rows;
}

nlohmann::json monomial_certificate_to_json(const MonomialCremonaCertificate& cert) {
    return nlohmann::json{{"B", log_matrix_to_json(cert.B)},
                          {"gamma", cert.gamma},
                          {"d_prime", cert.d_prime},
                          {"beta", cert.beta}};
}

nlohmann::json monomial_refusal_to_json(const MonomialRefusal& r) {
    return nlohmann::json{{"reason", MonomialRefusal::reason_name(r.reason)}, {"detail", r.detail}};
}

nlohmann::json degree_certificate_to_json(const DegreeCertificate& cert) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : cert.trials)
        trials.push_back({{"prime", t.prime}, {"point", t.point}, {"fiber_degree", t.fiber_degree}});
    return nlohmann::json{{"method", cert.method},
                          {"degree", cert.degree},
                          {"trials", trials},
                          {"escalations", cert.escalations},
                          {"birational", cert.birational()}};
}

nlohmann::json graded_matrix_to_json(const GradedMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.ncols(); ++j) row.push_back(m.ent[i][j].str());
        rows.push_back(row);
    }
    return nlohmann::json{{"row_degrees", m.row_deg}, {"col_degrees", m.col_deg}, {"entries", rows}};
}

nlohmann::json cm_certificate_to_json(const CmCertificate& cert) {
    nlohmann::json j{{"accepted", cert.accepted},
                     {"pd", cert.pd},
                     {"cm", cert.cm},
                     {"betti", cert.betti},
                     {"field", cert.field_prime == 0 ? "q" : "F" + std::to_string(cert.field_prime)}};
    if (cert.measured_codim)
        j["codim"] = *cert.measured_codim;
    else
        j["codim"] = "infinite";
    if (!cert.refusal.empty()) j["refusal"] = cert.refusal;
    if (cert.hilbert_burch) {
        j["hilbert_burch"] = {{"syzygy_matrix", graded_matrix_to_json(cert.hilbert_burch->syz)},
                              {"minors_match", cert.hilbert_burch->minors_match}};
    }
    return j;
}

nlohmann::json ideal_to_json(const Ideal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : I.gens) gens.push_back(g.str());
    nlohmann::json j{{"vars", I.ring->vars}, {"gens", gens}};
    if (!I.ring->dom.is_rational()) {
        j["field"] = "fp";
        j["p"] = I.ring->dom.p;
    }
    return j;
}

Ideal ideal_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("gens"))
        throw DomainError("ideal json needs 'vars' and 'gens'");
    RingPtr ring = make_ring(j["vars"].get<std::vector<std::string>>(), domain_from_json(j));
    std::vector<Poly> gens;
    for (const auto& t : j["gens"]) gens.push_back(parse_poly(t.get<std::string>(), ring));
    return Ideal{ring, std::move(gens)};
}

} // namespace cremona
