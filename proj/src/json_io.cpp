#include "reflact/json_io.hpp"

#include <stdexcept>

namespace reflact {

json cyc_to_json(const Cyc& x) {
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(to_string(q));
  return {{"m", x.conductor()}, {"c", c}};
}

Cyc cyc_from_json(const json& j) {
  if (j.is_string()) return Cyc(parse_rat(j.get<std::string>()));
  if (j.is_number_integer()) return Cyc(j.get<long>());
  if (!j.is_object() || !j.contains("m") || !j.contains("c"))
    throw std::invalid_argument("cyclotomic value must be {\"m\": int, \"c\": [...]}");
  const int m = j.at("m").get<int>();
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  std::vector<Rat> raw;
  for (const auto& c : j.at("c")) {
    if (c.is_string()) raw.push_back(parse_rat(c.get<std::string>()));
    else if (c.is_number_integer()) raw.emplace_back(c.get<long>());
    else throw std::invalid_argument("cyclotomic coefficient must be a string or integer");
  }
  return Cyc::normalize(m, raw);
}

json matrix_to_json(const CycMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(cyc_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

CycMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  CycMatrix m;
  for (const auto& row : j) m.append_row(covector_from_json(row));
  return m;
}

Covector covector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  Covector v;
  for (const auto& x : j) v.push_back(cyc_from_json(x));
  return v;
}

json arrangement_to_json(const Arrangement& a) {
  json hs = json::array();
  for (const auto& h : a.hyperplanes()) {
    json row = json::array();
    for (const auto& x : h.covector) row.push_back(cyc_to_json(x));
    hs.push_back(row);
  }
  return {{"dim", a.dim()}, {"hyperplanes", hs}};
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes"))
    throw std::invalid_argument("arrangement must be {\"dim\": n, \"hyperplanes\": [...]}");
  std::vector<Covector> cov;
  for (const auto& h : j.at("hyperplanes")) cov.push_back(covector_from_json(h));
  return Arrangement(j.at("dim").get<int>(), cov);
}

json flat_to_json(const Flat& f) { return {{"key", f.key}, {"codim", f.codim}}; }

json os_element_to_json(const OSAlgebra& os, const OSElement& x) {
  json terms = json::array();
  const auto& basis = os.nbc_basis(x.k);
  for (const auto& [i, c] : x.coeffs) terms.push_back({{"nbc", basis.at(i)}, {"coeff", to_string(c)}});
  return {{"k", x.k}, {"terms", terms}};
}

OSElement os_element_from_json(const OSAlgebra& os, const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("terms"))
    throw std::invalid_argument("OS element must be {\"k\": k, \"terms\": [...]}");
  OSElement x;
  x.k = j.at("k").get<int>();
  for (const auto& t : j.at("terms")) {
    const auto mono = t.at("nbc").get<std::vector<int>>();
    if (static_cast<int>(mono.size()) != x.k) throw std::invalid_argument("OS term has the wrong degree");
    const int idx = os.nbc_index(x.k, mono);
    if (idx < 0) throw std::invalid_argument("OS term is not an NBC monomial");
    x.add(idx, parse_rat(t.at("coeff").get<std::string>()));
  }
  return x;
}

json invariant_report_to_json(const InvariantReport& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"orbit", o.orbit}, {"codim", o.codim}, {"rep_key", o.rep_key}, {"dim", o.dim}, {"type", o.type}});
  return {{"method", r.method}, {"poincare", r.poincare}, {"orbits", orbits}};
}

InvariantReport invariant_report_from_json(const json& j) {
  InvariantReport r;
  r.method = j.at("method").get<std::string>();
  r.poincare = j.at("poincare").get<std::vector<long>>();
  for (const auto& o : j.at("orbits")) {
    OrbitReport x;
    x.orbit = o.at("orbit").get<std::size_t>();
    x.codim = o.at("codim").get<int>();
    x.rep_key = o.at("rep_key").get<FlatKey>();
    x.dim = o.at("dim").get<long>();
    x.type = o.value("type", "");
    r.orbits.push_back(std::move(x));
  }
  return r;
}

}  // namespace reflact
