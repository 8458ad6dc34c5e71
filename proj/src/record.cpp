#include "ihcalc/record.hpp"

#include <algorithm>

namespace ihcalc {

OutputRecord OutputRecord::from_tpoly(std::string name, const TPoly& p) {
  OutputRecord r;
  r.name = std::move(name);
  r.variable = "t";
  auto d = p.degree();
  r.degree = d ? *d : -1;
  for (long long k = 0; d && k <= *d; ++k) r.coefficients.push_back(p.coeff(k).to_int64());
  r.euler = euler_value(p).to_int64();
  r.palindromic = d ? p.is_palindromic(*d) : false;
  return r;
}

OutputRecord OutputRecord::from_bipoly(std::string name, const BiPoly& b) {
  if (!b.is_diagonal())
    throw CalcError("NotDiagonal", "record output needs a diagonal uv-polynomial");
  OutputRecord r;
  r.name = std::move(name);
  r.variable = "uv";
  long long top = 0;
  for (const auto& [ev, c] : b.terms()) {
    if (ev.first < 0)
      throw CalcError("NotDiagonal", "negative uv-power in record output");
    top = std::max(top, ev.first);
  }
  if (b.is_zero()) {
    r.degree = -1;
  } else {
    r.degree = top;
    BigInt sum;
    for (long long k = 0; k <= top; ++k) {
      BigInt c = b.coeff(k, k);
      r.coefficients.push_back(c.to_int64());
      sum += c;
    }
    r.euler = sum.to_int64();
    TPoly as_t = bi_to_t(b);
    r.palindromic = as_t.is_palindromic(2 * top);
  }
  return r;
}

nlohmann::json OutputRecord::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["variable"] = variable;
  j["coefficients"] = coefficients;
  j["degree"] = degree;
  j["euler"] = euler;
  j["palindromic"] = palindromic;
  for (const auto& [key, value] : extras) j[key] = value;
  return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.name = j.at("name").get<std::string>();
  r.variable = j.at("variable").get<std::string>();
  r.coefficients = j.at("coefficients").get<std::vector<long long>>();
  r.degree = j.at("degree").get<long long>();
  r.euler = j.at("euler").get<long long>();
  r.palindromic = j.at("palindromic").get<bool>();
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "variable" && key != "coefficients" && key != "degree" &&
        key != "euler" && key != "palindromic")
      r.extras[key] = value;
  }
  return r;
}

std::string OutputRecord::csv_header() {
  return "name,variable,degree,palindromic,coefficients,euler";
}

std::string OutputRecord::to_csv_row() const {
  std::string coeffs;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) coeffs += " ";
    coeffs += std::to_string(coefficients[i]);
  }
  return name + "," + variable + "," + std::to_string(degree) + "," +
         (palindromic ? "true" : "false") + "," + coeffs + "," + std::to_string(euler);
}

std::string OutputRecord::to_text() const {
  TPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    p += TPoly::monomial(BigInt(coefficients[k]), static_cast<long long>(k));
  std::string s = name + " = " + p.to_string(variable == "uv" ? "(uv)" : "t");
  s += "  [degree " + std::to_string(degree) + ", euler " + std::to_string(euler);
  if (palindromic) s += ", palindromic";
  s += "]";
  for (const auto& [key, value] : extras) s += "  " + key + "=" + value.dump();
  return s;
}

}  // namespace ihcalc
