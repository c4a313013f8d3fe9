#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdhg/linalg.hpp"
#include "fdhg/scalar.hpp"

namespace fdhg {

// Serialization conventions: rationals as decimal strings "p/q" (to avoid
// precision loss), complex values as two-element arrays [re, im], doubles
// as plain JSON numbers, matrices row-major.

inline nlohmann::json to_json(const Rational& r) { return to_string(r); }
inline nlohmann::json to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}
inline nlohmann::json to_json(double v) { return v; }

template <class S>
nlohmann::json vec_to_json(const Vec<S>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

template <class S>
nlohmann::json mat_to_json(const Mat<S>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

// "1/2,3,-5/7" -> rationals
inline std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw domain_error("empty list: '" + s + "'");
  return out;
}

inline std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw domain_error("empty list: '" + s + "'");
  return out;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  if (out.empty()) throw domain_error("empty list: '" + s + "'");
  return out;
}

}  // namespace fdhg
