#pragma once

#include <string>

#include <json.hpp>

#include "corequot/polynomial.hpp"
#include "corequot/theorems.hpp"

namespace corequot {

// Canonical polynomial form: a list of {"exps": {"j": e, ...}, "coeff":
// "num/den"} in term order.
inline nlohmann::json polynomial_to_json(const GradedPolynomial& f) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [j, e] : m.powers()) exps[std::to_string(j)] = e;
    list.push_back({{"exps", exps}, {"coeff", to_string(c)}});
  }
  return list;
}

inline GradedPolynomial polynomial_from_json(const nlohmann::json& list) {
  GradedPolynomial f;
  for (const auto& term : list) {
    std::vector<std::pair<int, int>> powers;
    for (const auto& [key, value] : term.at("exps").items()) {
      powers.emplace_back(std::stoi(key), value.get<int>());
    }
    f.add_term(Monomial::from_powers(std::move(powers)),
               parse_rational(term.at("coeff").get<std::string>()));
  }
  return f;
}

inline nlohmann::json report_to_json(const DecompositionReport& report) {
  nlohmann::json basis = nlohmann::json::array();
  for (const Partition& z : report.basis) basis.push_back(z.str());
  nlohmann::json formula = nlohmann::json::array();
  for (long long c : report.formula) formula.push_back(std::to_string(c));
  nlohmann::json solved = nlohmann::json::array();
  for (const Rational& c : report.solved) solved.push_back(to_string(c));
  return {{"subject", report.subject.str()},
          {"basis", basis},
          {"formula", formula},
          {"solved", solved},
          {"match", report.match}};
}

}  // namespace corequot
