#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "avoid321/dyck.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/polynomial.hpp"
#include "avoid321/tableaux.hpp"

// JSON forms:
//   Permutation   [2,5,1,3,4]
//   DescentSet    [1,4]
//   DyckPath      [1,1,-1,-1]
//   tableaux      {"row1":[...],"row2":[...]}, pairs {"P":...,"Q":...}
//   LaurentPoly   {"terms":[{"coeff":C,"exp":{"t1":1,"x":1}}]} in canonical order

namespace avoid321 {

using nlohmann::json;

inline void to_json(json& j, const Permutation& p) { j = json(std::vector<int>(p.values().begin(), p.values().end())); }

inline void to_json(json& j, const DescentSet& d) { j = json(d.members()); }

inline void to_json(json& j, const DyckPath& p) { j = json(p.steps()); }

inline void to_json(json& j, const TwoRowTableau& t) { j = json{{"row1", t.row1()}, {"row2", t.row2()}}; }

inline void to_json(json& j, const RectTableau& t) { j = json{{"row1", t.row1()}, {"row2", t.row2()}}; }

inline void to_json(json& j, const SYTPair& pair) { j = json{{"P", pair.p()}, {"Q", pair.q()}}; }

inline void to_json(json& j, const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exp = json::object();
    for (const auto& [v, e] : m.factors()) exp[v.name()] = e;
    terms.push_back(json{{"coeff", c}, {"exp", exp}});
  }
  j = json{{"terms", terms}};
}

inline LaurentPoly poly_from_json(const json& j) {
  LaurentPoly out;
  try {
    for (const auto& term : j.at("terms")) {
      std::vector<Monomial::Factor> f;
      for (const auto& [name, e] : term.at("exp").items()) {
        const auto v = Variable::parse(name);
        if (!v) throw InvalidArgument("unknown variable '" + name + "' in polynomial JSON");
        f.emplace_back(*v, e.get<int>());
      }
      out.add_term(Monomial::from_factors(std::move(f)), term.at("coeff").get<LaurentPoly::Coeff>());
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
  }
  return out;
}

inline Permutation permutation_from_json(const json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed permutation JSON: ") + e.what());
  }
}

}  // namespace avoid321
