#pragma once

#include "delsarte/quasicode.hpp"
#include "delsarte/rational.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace delsarte {

// Rationals travel as "p/q" strings, never as decimals.

inline nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v)
    a.push_back(x.str());
  return a;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& a) {
  if (!a.is_array())
    throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& x : a)
    v.push_back(Rational::parse(x.get<std::string>()));
  return v;
}

inline nlohmann::json to_json(const Quasicode& q) {
  return {{"n", q.n}, {"d", q.d}, {"A", rationals_to_json(q.A)}};
}

inline Quasicode quasicode_from_json(const nlohmann::json& j) {
  Quasicode q{j.at("n").get<long>(), j.at("d").get<long>(),
              rationals_from_json(j.at("A"))};
  validate(q);
  return q;
}

inline nlohmann::json to_json(const Decomposition& dec) {
  return {{"n", dec.n}, {"b", rationals_to_json(dec.b)}};
}

inline Decomposition decomposition_from_json(const nlohmann::json& j) {
  Decomposition dec{j.at("n").get<long>(), rationals_from_json(j.at("b"))};
  validate(dec);
  return dec;
}

inline nlohmann::json to_json(const DualSolution& c) {
  return {{"n", c.n}, {"d", c.d}, {"c", rationals_to_json(c.c)}};
}

inline DualSolution dual_solution_from_json(const nlohmann::json& j) {
  DualSolution c{j.at("n").get<long>(), j.at("d").get<long>(),
                 rationals_from_json(j.at("c"))};
  validate(c);
  return c;
}

}  // namespace delsarte
