#pragma once

#include <json.hpp>

#include "eo/gamma_poly.hpp"
#include "eo/omega_laurent.hpp"
#include "eo/quad_sqrt5.hpp"
#include "eo/relation.hpp"
#include "eo/series.hpp"
#include "eo/verify.hpp"

namespace eo {

// Exact serialization: coefficients are always strings, never floats.
inline nlohmann::json to_json(const Rational& x) { return x.str(); }
inline nlohmann::json to_json(const QuadExtSqrt5& x) { return x.str(); }
inline nlohmann::json to_json(const GammaPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    if (arr.empty()) arr.push_back("0");
    return arr;
}
inline nlohmann::json to_json(const OmegaLaurent& p) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c.str();
    return obj;
}

template <class R>
nlohmann::json series_to_json(const TruncSeries<R>& s, const std::string& var) {
    nlohmann::json j;
    j["var"] = var;
    j["valuation"] = s.valuation();
    j["order"] = s.order();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = s.valuation(); n < s.order(); ++n) coeffs.push_back(to_json(s.coef(n)));
    j["coeffs"] = coeffs;
    return j;
}

inline nlohmann::json report_to_json(const CaseReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    if (rep.case_n != 0) j["case"] = rep.case_n;
    j["gamma"] = rep.gamma_desc;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"identity_name", c.name},
                          {"pass", c.pass},
                          {"residual_valuation", c.residual_valuation},
                          {"checked_order", c.checked_order}});
    }
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    return j;
}

template <class F>
nlohmann::json relation_to_json(const RelationCandidate<F>& rel) {
    nlohmann::json j;
    j["schema"] = 1;
    j["certified_order"] = rel.certified_order;
    nlohmann::json monomials = nlohmann::json::array();
    for (size_t i = 0; i < rel.support.size(); ++i) {
        monomials.push_back({{"r_exp", rel.support[i].first},
                             {"s_exp", rel.support[i].second},
                             {"coeff", rel.coeffs[i].str()}});
    }
    j["monomials"] = monomials;
    return j;
}

}  // namespace eo
