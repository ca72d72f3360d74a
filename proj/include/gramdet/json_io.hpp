#pragma once

#include <string>

#include <json.hpp>

#include "gramdet/closed_forms.hpp"
#include "gramdet/gram.hpp"
#include "gramdet/matrix.hpp"
#include "gramdet/poly.hpp"

namespace gramdet {

using json = nlohmann::json;

// {"var": "n", "coeffs": ["c0", "c1", ...]} with decimal-string big integers
inline json poly_to_json(const int_poly& p) {
    json j;
    j["var"] = p.var();
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline int_poly poly_from_json(const json& j) {
    std::vector<big_int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(big_int::parse(c.get<std::string>()));
    return int_poly(std::move(coeffs), j.value("var", "n"));
}

// factored form: n^monomial_exp * prod poly^exp, factors under their family names
inline json factored_to_json(const factored_poly& f) {
    json j;
    j["monomial_exp"] = f.monomial_exp;
    json factors = json::array();
    for (const auto& t : f.factors) {
        json ft;
        ft["factor"] = t.name;
        ft["poly"] = poly_to_json(t.poly);
        ft["exp"] = t.exp;
        factors.push_back(std::move(ft));
    }
    j["factors"] = std::move(factors);
    return j;
}

inline json int_matrix_to_json(const int_matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

inline json rat_matrix_to_json(const rat_matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

inline json loop_report_to_json(const loop_check_report& rep) {
    json j;
    j["category"] = "o_plus";
    j["k"] = rep.k;
    j["n"] = rep.n.to_string();
    j["ok"] = rep.ok();
    j["det_gram"] = rep.det_gram.to_string();
    j["det_t_squared"] = rep.det_t_squared.to_string();
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back(json{{"kind", f.kind},
                             {"pi", f.pi},
                             {"sigma", f.sigma},
                             {"expected", f.expected},
                             {"actual", f.actual}});
    j["failures"] = std::move(fails);
    return j;
}

}  // namespace gramdet
