#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bmw/hecke.hpp"
#include "bmw/repmatrix.hpp"
#include "bmw/scalar.hpp"

namespace bmw {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return rational_to_string(r); }

inline Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

template <class Var>
Json to_json(const Laurent<Var>& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({{"lexp", e}, {"num", to_json(c.num())}, {"den", to_json(c.den())}});
  return {{"terms", terms}};
}

// Words are written 1-based.
inline Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (Node j : w) a.push_back(j + 1);
  return a;
}

inline Json to_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [w, c] : h.sorted_terms())
    terms.push_back({{"word", word_to_json(w)}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

// Column-major: element c is column c listed top to bottom; absent entries
// are written as the zero of the entry type.
template <class V, class Fn>
Json matrix_to_json(const RepMatrix<V>& m, const Json& zero, Fn&& entry) {
  Json cols = Json::array();
  for (int c = 0; c < m.size(); ++c) {
    Json col = Json::array();
    for (int r = 0; r < m.size(); ++r) {
      auto v = m.entry(r, c);
      col.push_back(v ? entry(*v) : zero);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

inline Poly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
  return Poly(std::move(c));
}

template <class Var = MVar>
Laurent<Var> scalar_from_json(const Json& j) {
  std::vector<typename Laurent<Var>::Term> t;
  for (const auto& term : j.at("terms"))
    t.emplace_back(term.at("lexp").get<int>(),
                   RatFunc(poly_from_json(term.at("num")), poly_from_json(term.at("den"))));
  return Laurent<Var>::from_terms(std::move(t));
}

inline HeckeElement hecke_from_json(const HeckeAlgebraPtr& alg, const Json& j) {
  HeckeElement acc(alg);
  for (const auto& term : j.at("terms")) {
    Word w;
    for (const auto& x : term.at("word")) w.push_back(x.get<int>() - 1);
    acc += scalar_from_json(term.at("coeff")) *
           HeckeElement::basis(alg, alg->roots().word_element(w));
  }
  return acc;
}

}  // namespace bmw
