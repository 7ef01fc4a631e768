#pragma once

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ppt/algebra/polynomial.hpp"
#include "ppt/algebra/rational.hpp"
#include "ppt/algebra/rational_function.hpp"
#include "ppt/error.hpp"
#include "ppt/io/parse.hpp"
#include "ppt/series/solve_tau.hpp"

namespace ppt::io {

using json = nlohmann::ordered_json;

inline json integer_list(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

/// {"variable":"a","numerator":[c0, c1, ...],"denominator":[...]}, ascending
/// degree, coefficients as decimal strings.
inline json to_json(const RationalFunction& r) {
  json j;
  j["variable"] = "a";
  j["numerator"] = integer_list(r.int_numerator());
  j["denominator"] = integer_list(r.int_denominator());
  return j;
}

inline json to_json(const Rational& r) { return r.to_string(); }

namespace detail {

inline Polynomial polynomial_from_json(const json& arr) {
  if (!arr.is_array()) throw domain_error("expected an array of integer strings");
  std::vector<Rational> c;
  for (const auto& v : arr) {
    if (!v.is_string()) throw domain_error("coefficients must be strings");
    const Rational r = parse_rational(v.get<std::string>());
    if (!r.is_integer()) throw domain_error("coefficients must be integers");
    c.push_back(r);
  }
  return Polynomial(std::move(c));
}

}  // namespace detail

inline RationalFunction rational_function_from_json(const json& j) {
  if (!j.is_object() || j.value("variable", "") != "a") throw domain_error("not a rational function in a");
  return RationalFunction(detail::polynomial_from_json(j.at("numerator")),
                          detail::polynomial_from_json(j.at("denominator")));
}

inline json to_json(const SymbolicTau& tau) {
  json j;
  j["mode"] = "symbolic";
  j["order"] = tau.order();
  json m = json::array();
  for (const auto& c : tau.coefficients) m.push_back(to_json(c));
  j["tau"] = std::move(m);
  return j;
}

inline json to_json(const NumericTau& tau) {
  json j;
  j["mode"] = "numeric";
  j["order"] = tau.order();
  j["a"] = tau.a().to_string();
  json m = json::array();
  for (const auto& c : tau.coefficients) m.push_back(c.to_string());
  j["tau"] = std::move(m);
  return j;
}

/// Writes through a sibling temporary file and renames it into place.
inline void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw error("cannot move output into place: " + path.string());
  }
}

}  // namespace ppt::io
