#pragma once

// Polynomial file format:
//   {"p":3,"vars":["x","y"],"terms":[{"e":[2,0],"c":1}]}
// Terms sorted lexicographically by exponent, coefficients in [1, p-1].

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fsplit/fpoly.hpp"

namespace fsplit {

using ojson = nlohmann::ordered_json;

inline ojson poly_to_json(const SparsePolynomial& f) {
  ojson j;
  j["p"] = f.p();
  ojson vars = ojson::array();
  for (const auto& v : f.vars()) vars.push_back(v.name);
  j["vars"] = std::move(vars);
  ojson terms = ojson::array();
  for (const auto& [e, c] : f.terms()) {
    ojson t;
    t["e"] = e;
    t["c"] = c;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline std::string poly_to_string(const SparsePolynomial& f) { return poly_to_json(f).dump(); }

inline SparsePolynomial poly_from_json(const ojson& j) {
  try {
    if (!j.is_object() || !j.contains("p") || !j.contains("vars") || !j.contains("terms"))
      throw InputError("polynomial JSON needs p, vars and terms");
    auto p = j.at("p").get<std::int64_t>();
    if (p < 2) throw InputError("p must be prime");
    PrimeField field(static_cast<std::uint64_t>(p));
    VariableTable vars;
    for (const auto& v : j.at("vars")) vars.push_back({v.get<std::string>(), std::nullopt});
    for (std::size_t a = 0; a < vars.size(); ++a)
      for (std::size_t b = a + 1; b < vars.size(); ++b)
        if (vars[a].name == vars[b].name) throw InputError("duplicate variable " + vars[a].name);
    SparsePolynomial f(field, std::move(vars));
    for (const auto& t : j.at("terms")) {
      auto e = t.at("e").get<std::vector<std::int64_t>>();
      auto c = t.at("c").get<std::int64_t>();
      if (e.size() != f.num_vars()) throw InputError("exponent length does not match vars");
      if (c < 1 || c >= p) throw InputError("coefficient outside [1, p-1]");
      Exponent ex;
      for (auto x : e) {
        if (x < 0 || x > 0xFFFFFFFFLL) throw InputError("exponent out of range");
        ex.push_back(static_cast<std::uint32_t>(x));
      }
      if (f.coefficient(ex) != 0) throw InputError("duplicate exponent in terms");
      f.add_term(std::move(ex), static_cast<Coeff>(c));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

inline SparsePolynomial read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  ojson j;
  try {
    j = ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return poly_from_json(j);
}

}  // namespace fsplit
