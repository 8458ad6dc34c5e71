#ifndef IHCALC_RECORD_HPP
#define IHCALC_RECORD_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "ihcalc/poly.hpp"

namespace ihcalc {

// One emitted polynomial: dense coefficients indexed by exponent (t) or by
// the power of uv (diagonal Laurent polynomials).
struct OutputRecord {
  std::string name;
  std::string variable;  // "t" or "uv"
  std::vector<long long> coefficients;  // no trailing zero
  long long degree = -1;                // -1 for the zero polynomial
  long long euler = 0;                  // always the coefficient sum
  bool palindromic = false;
  std::map<std::string, nlohmann::json> extras;

  static OutputRecord from_tpoly(std::string name, const TPoly& p);
  static OutputRecord from_bipoly(std::string name, const BiPoly& b);

  nlohmann::json to_json() const;
  static OutputRecord from_json(const nlohmann::json& j);
  std::string to_csv_row() const;
  static std::string csv_header();
  std::string to_text() const;
};

}  // namespace ihcalc

#endif
