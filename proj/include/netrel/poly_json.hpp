#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "netrel/mpoly.hpp"

namespace netrel {

/// {"vars": [...], "terms": [[[exps...], "num/den"], ...]} in canonical order.
inline nlohmann::ordered_json to_json(const MPoly& m) {
  nlohmann::ordered_json j;
  j["vars"] = m.variables();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : m.terms()) terms.push_back({t.exps, t.coeff.to_string()});
  j["terms"] = std::move(terms);
  return j;
}

inline MPoly mpoly_from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<MPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at(0).get<Exponents>();
      if (exps.size() != vars.size()) throw InputError("term exponent length mismatch");
      terms.push_back({exps, Rational::parse(t.at(1).get<std::string>())});
    }
    return MPoly::from_terms(std::move(vars), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad polynomial JSON: ") + e.what());
  }
}

/// Univariate polynomial in `var` as canonical JSON.
inline nlohmann::ordered_json to_json(const UniPoly<Rational>& u, const std::string& var) {
  return to_json(MPoly::from_qpoly(u, var));
}

}  // namespace netrel
