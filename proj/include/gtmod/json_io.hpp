#pragma once
// JSON encodings of points, shifts, permutations, vectors, cones and graphs.

#include <string>
#include <vector>

#include "json.hpp"
#include "module.hpp"

namespace gtmod {

using json = nlohmann::json;

inline Affine affine_from_json(const json& j) {
  if (j.is_number_integer()) return Affine(j.get<long>());
  if (j.is_string()) return Affine::parse(j.get<std::string>());
  throw std::invalid_argument("scalar must be an integer or a string: " + j.dump());
}

inline json to_json(const Point& p) {
  json rows = json::array();
  for (int k = 1; k <= p.n(); ++k) {
    json r = json::array();
    for (auto& a : p.row(k)) r.push_back(a.to_string());
    rows.push_back(r);
  }
  return {{"n", p.n()}, {"rows", rows}};
}

inline Point point_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  if (!rows.is_array()) throw std::invalid_argument("point rows must be an array");
  std::vector<std::vector<Affine>> r;
  for (auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("point row must be an array");
    r.emplace_back();
    for (auto& x : row) r.back().push_back(affine_from_json(x));
  }
  if (j.is_object() && j.contains("n") && j.at("n").get<int>() != static_cast<int>(r.size()))
    throw std::invalid_argument("n does not match the number of rows");
  return Point::from_rows(r);
}

inline json to_json(const Shift& z) { return {{"rows", z.inner_rows()}}; }

// rows 1..n-1 (row n optional, must be zero)
inline Shift shift_from_json(int n, const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  return Shift::from_rows(n, rows.get<std::vector<std::vector<long>>>());
}

inline json to_json(const Permutation& s) { return s.rows_one_based(); }
inline Permutation permutation_from_json(const json& j) {
  return Permutation::from_rows(j.get<std::vector<std::vector<int>>>());
}

inline json to_json(const TableauVector& v) {
  json out = json::array();
  for (auto& [k, c] : v.terms())
    out.push_back({{"z", k.z.inner_rows()}, {"sigma", to_json(k.sigma)}, {"coeff", c.to_string()}});
  return out;
}

// rational coefficients only
inline TableauVector tableau_vector_from_json(int n, const json& j) {
  TableauVector v;
  for (auto& t : j) {
    Affine c = affine_from_json(t.contains("coeff") ? t.at("coeff") : json(1));
    if (!c.is_rational()) throw std::invalid_argument("parametric coefficients are not accepted as input");
    v.add(TableauKey{shift_from_json(n, t.at("z")), permutation_from_json(t.at("sigma"))}, Scalar(c.constant()));
  }
  return v;
}

inline json to_json(const Index& x) { return json::array({x.k, x.i}); }

inline json to_json(const Cone& c) {
  json ineq = json::array();
  for (auto& q : c.inequalities) {
    json coef = json::array();
    for (auto& [x, a] : q.coef)
      if (a != 0) coef.push_back({{"index", to_json(x)}, {"coeff", a}});
    ineq.push_back({{"coeffs", coef}, {"rhs", q.rhs}, {"text", q.to_string()}});
  }
  json gens = json::array();
  for (auto& g : c.generators) gens.push_back(g.inner_rows());
  return {{"n", c.n}, {"inequalities", ineq}, {"generators", gens}};
}

inline json to_json(const GtGraph& g) {
  json edges = json::array();
  for (auto& e : g.edges()) edges.push_back(json::array({to_json(e.from), to_json(e.to)}));
  return {{"n", g.n()}, {"oriented", g.oriented()}, {"edges", edges}};
}

inline GtGraph graph_from_json(const json& j) {
  GtGraph g(j.at("n").get<int>(), j.at("oriented").get<bool>());
  for (auto& e : j.at("edges"))
    g.add({e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()}, {e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()});
  return g;
}

}  // namespace gtmod
