#include "ihcalc/strat.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ihcalc::strat {

ConeValue ConeValue::known(TPoly p) {
  if (p.coeff(0) < BigInt(1))
    throw CalcError("InvalidArgument",
                    "cone polynomial must have positive constant term: " + p.to_string());
  if (!p.nonneg_coeffs())
    throw CalcError("InvalidArgument",
                    "cone polynomial must have nonnegative coefficients: " + p.to_string());
  ConeValue cv;
  cv.value_ = std::move(p);
  return cv;
}

ConeValue ConeValue::unknown(std::string id) {
  if (id.empty()) throw CalcError("InvalidArgument", "empty unknown id");
  ConeValue cv;
  cv.id_ = std::move(id);
  return cv;
}

const TPoly& ConeValue::value() const {
  if (!is_known()) throw CalcError("InvalidArgument", "cone " + *id_ + " is unknown");
  return value_;
}

const std::string& ConeValue::id() const {
  if (is_known()) throw CalcError("InvalidArgument", "cone is known, has no id");
  return *id_;
}

Stratification::Stratification(
    std::vector<Stratum> strata,
    std::map<std::pair<std::string, std::string>, ConeValue> cones)
    : strata_(std::move(strata)), cones_(std::move(cones)) {
  if (strata_.empty()) throw CalcError("InvalidArgument", "empty stratification");
  std::set<std::string> names;
  for (const Stratum& s : strata_) {
    if (!names.insert(s.name).second)
      throw CalcError("InvalidArgument", "duplicate stratum name " + s.name);
  }
  // frontier condition on a chain: data for exactly the comparable pairs
  std::size_t expected = strata_.size() * (strata_.size() - 1) / 2;
  if (cones_.size() != expected)
    throw CalcError("InvalidArgument", "expected " + std::to_string(expected) +
                                           " cone entries, got " + std::to_string(cones_.size()));
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    for (std::size_t j = i + 1; j < strata_.size(); ++j) {
      if (!cones_.count({strata_[i].name, strata_[j].name}))
        throw CalcError("InvalidArgument", "missing cone for pair (" + strata_[i].name + ", " +
                                               strata_[j].name + ")");
    }
  }
}

const ConeValue& Stratification::cone(const std::string& lower,
                                      const std::string& upper) const {
  auto it = cones_.find({lower, upper});
  if (it == cones_.end())
    throw CalcError("InvalidArgument", "no cone for pair (" + lower + ", " + upper + ")");
  return it->second;
}

// ---------------------------------------------------------------- LinPoly --

LinPoly::LinPoly(TPoly constant) : constant_(std::move(constant)) {}

LinPoly LinPoly::from_cone(const ConeValue& cv) {
  if (cv.is_known()) return LinPoly(cv.value());
  LinPoly lp;
  lp.coeffs_[cv.id()] = TPoly::one();
  return lp;
}

void LinPoly::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero())
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LinPoly operator+(const LinPoly& a, const LinPoly& b) {
  LinPoly r = a;
  r.constant_ += b.constant_;
  for (const auto& [id, c] : b.coeffs_) {
    auto it = r.coeffs_.find(id);
    if (it == r.coeffs_.end())
      r.coeffs_.emplace(id, c);
    else
      it->second += c;
  }
  r.prune();
  return r;
}

LinPoly LinPoly::operator-() const {
  LinPoly r;
  r.constant_ = -constant_;
  for (const auto& [id, c] : coeffs_) r.coeffs_.emplace(id, -c);
  return r;
}

LinPoly operator-(const LinPoly& a, const LinPoly& b) { return a + (-b); }

LinPoly operator*(const LinPoly& a, const LinPoly& b) {
  if (!a.is_constant() && !b.is_constant())
    throw CalcError("NonlinearProduct",
                    "product of two expressions with unknowns is not linear");
  const LinPoly& scalar = a.is_constant() ? a : b;
  const LinPoly& linear = a.is_constant() ? b : a;
  LinPoly r;
  r.constant_ = scalar.constant_ * linear.constant_;
  for (const auto& [id, c] : linear.coeffs_) r.coeffs_.emplace(id, scalar.constant_ * c);
  r.prune();
  return r;
}

bool operator==(const LinPoly& a, const LinPoly& b) {
  return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
}

std::string LinPoly::to_string() const {
  std::string s = constant_.to_string();
  for (const auto& [id, c] : coeffs_) s += " + (" + c.to_string() + ")*" + id;
  return s;
}

// ------------------------------------------------------------- identities --

namespace {

std::size_t stratum_index(const Stratification& s, const std::string& name) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.strata()[i].name == name) return i;
  }
  throw CalcError("InvalidArgument", "unknown stratum " + name);
}

std::vector<LinPoly> ietilde_chain(const Stratification& s, std::size_t upto) {
  std::vector<LinPoly> tilde;
  tilde.reserve(upto + 1);
  for (std::size_t i = 0; i <= upto; ++i) {
    LinPoly acc(s.strata()[i].ie_closure);
    for (std::size_t j = 0; j < i; ++j) {
      LinPoly cone = LinPoly::from_cone(s.cone(s.strata()[j].name, s.strata()[i].name));
      acc = acc - tilde[j] * cone;
    }
    tilde.push_back(std::move(acc));
  }
  return tilde;
}

}  // namespace

LinPoly ietilde(const Stratification& s, const std::string& stratum) {
  std::size_t idx = stratum_index(s, stratum);
  return ietilde_chain(s, idx)[idx];
}

LinPoly e_from_ie(const Stratification& s, const TPoly& ie_total) {
  LinPoly acc(ie_total);
  if (s.size() < 2) return acc;
  auto tilde = ietilde_chain(s, s.size() - 2);
  const std::string& top = s.top().name;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    LinPoly cone = LinPoly::from_cone(s.cone(s.strata()[i].name, top));
    acc = acc + tilde[i] * (LinPoly(TPoly::one()) - cone);
  }
  return acc;
}

LinPoly pushforward_e(const Stratification& s, const std::map<std::string, TPoly>& fibers,
                      const TPoly& ie_total) {
  auto fiber_of = [&fibers](const std::string& name) -> const TPoly& {
    auto it = fibers.find(name);
    if (it == fibers.end())
      throw CalcError("InvalidArgument", "missing fiber polynomial for stratum " + name);
    return it->second;
  };
  const TPoly& generic_fiber = fiber_of(s.top().name);
  LinPoly acc(ie_total * generic_fiber);
  if (s.size() < 2) return acc;
  auto tilde = ietilde_chain(s, s.size() - 2);
  const std::string& top = s.top().name;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const std::string& name = s.strata()[i].name;
    LinPoly cone = LinPoly::from_cone(s.cone(name, top));
    acc = acc + tilde[i] * (LinPoly(fiber_of(name)) - LinPoly(generic_fiber) * cone);
  }
  return acc;
}

// ----------------------------------------------------------------- solver --

namespace {

// reduced fraction of t-polynomials; denominator has positive lead
struct PolyFrac {
  TPoly num;
  TPoly den = TPoly::one();

  static PolyFrac of(TPoly p) { return {std::move(p), TPoly::one()}; }

  bool is_zero() const { return num.is_zero(); }

  void reduce() {
    if (num.is_zero()) {
      den = TPoly::one();
      return;
    }
    TPoly g = poly_gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
    if (den.lead_coeff().is_negative()) {
      num = -num;
      den = -den;
    }
  }

  friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
    PolyFrac r{a.num * b.den + b.num * a.den, a.den * b.den};
    r.reduce();
    return r;
  }
  friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
    PolyFrac r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.reduce();
    return r;
  }
  friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
    PolyFrac r{a.num * b.num, a.den * b.den};
    r.reduce();
    return r;
  }
  friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b) {
    if (b.is_zero()) throw CalcError("DivisionByZero", "fraction division by zero");
    PolyFrac r{a.num * b.den, a.den * b.num};
    r.reduce();
    return r;
  }
};

}  // namespace

NonPolynomialSolution::NonPolynomialSolution(std::string unknown, TPoly numerator,
                                             TPoly denominator, const std::string& reason)
    : CalcError("NonPolynomialSolution",
                "unknown " + unknown + " = (" + numerator.to_string() + ") / (" +
                    denominator.to_string() + "): " + reason),
      unknown_(std::move(unknown)),
      numerator_(std::move(numerator)),
      denominator_(std::move(denominator)) {}

std::map<std::string, TPoly> solve_cones(
    const std::vector<std::pair<LinPoly, TPoly>>& equations) {
  // collect unknowns in deterministic order
  std::set<std::string> ids;
  for (const auto& [lhs, rhs] : equations) {
    for (const auto& [id, c] : lhs.unknown_coeffs()) ids.insert(id);
  }
  std::vector<std::string> unknowns(ids.begin(), ids.end());
  const std::size_t k = unknowns.size();
  const std::size_t m = equations.size();

  // matrix [A | b] over the fraction field, from  sum A_ij x_j = rhs - const
  std::vector<std::vector<PolyFrac>> mat(m, std::vector<PolyFrac>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [lhs, rhs] = equations[i];
    for (std::size_t j = 0; j < k; ++j) {
      auto it = lhs.unknown_coeffs().find(unknowns[j]);
      mat[i][j] = PolyFrac::of(it == lhs.unknown_coeffs().end() ? TPoly() : it->second);
    }
    mat[i][k] = PolyFrac::of(rhs - lhs.constant_part());
  }

  // Gauss-Jordan elimination
  std::vector<std::optional<std::size_t>> pivot_row(k);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && mat[sel][col].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(mat[sel], mat[row]);
    PolyFrac inv_pivot = PolyFrac::of(TPoly::one()) / mat[row][col];
    for (std::size_t j = col; j <= k; ++j) mat[row][j] = mat[row][j] * inv_pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || mat[i][col].is_zero()) continue;
      PolyFrac factor = mat[i][col];
      for (std::size_t j = col; j <= k; ++j)
        mat[i][j] = mat[i][j] - factor * mat[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }

  // leftover nonzero rhs rows mean the system has no solution
  for (std::size_t i = row; i < m; ++i) {
    if (!mat[i][k].is_zero())
      throw CalcError("Inconsistent", "equation reduces to 0 = (" +
                                          mat[i][k].num.to_string() + ") / (" +
                                          mat[i][k].den.to_string() + ")");
  }
  for (std::size_t col = 0; col < k; ++col) {
    if (!pivot_row[col])
      throw CalcError("Underdetermined", "unknown " + unknowns[col] + " is not determined");
  }

  std::map<std::string, TPoly> solution;
  for (std::size_t col = 0; col < k; ++col) {
    PolyFrac val = mat[*pivot_row[col]][k];
    val.reduce();
    const std::string& id = unknowns[col];
    auto d = val.den.degree();
    if (!d.has_value() || *d > 0)
      throw NonPolynomialSolution(id, val.num, val.den, "denominator is not constant");
    TPoly poly;
    if (val.den == TPoly::one()) {
      poly = val.num;
    } else {
      auto q = try_exact_div(val.num, val.den);
      if (!q)
        throw NonPolynomialSolution(id, val.num, val.den, "integer division is not exact");
      poly = *q;
    }
    if (!poly.nonneg_coeffs())
      throw NonPolynomialSolution(id, poly, TPoly::one(), "negative coefficient in solution");
    if (poly.coeff(0) < BigInt(1))
      throw NonPolynomialSolution(id, poly, TPoly::one(),
                                  "solution constant term is not positive");
    solution.emplace(id, std::move(poly));
  }
  return solution;
}

// ------------------------------------------------------------------- JSON --

namespace {

TPoly poly_from_json_array(const nlohmann::json& arr, const std::string& what) {
  if (!arr.is_array()) throw CalcError("ParseError", what + " must be an array");
  TPoly p;
  long long exp = 0;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw CalcError("ParseError", what + " must contain integers");
    p += TPoly::monomial(BigInt(v.get<long long>()), exp);
    ++exp;
  }
  return p;
}

}  // namespace

StratDocument parse_stratification_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw CalcError("ParseError", "invalid JSON");
  if (!doc.contains("strata")) throw CalcError("ParseError", "missing 'strata'");

  std::vector<Stratum> strata;
  for (const auto& s : doc["strata"]) {
    if (!s.contains("name") || !s.contains("ie"))
      throw CalcError("ParseError", "stratum needs 'name' and 'ie'");
    strata.push_back({s["name"].get<std::string>(),
                      poly_from_json_array(s["ie"], "stratum ie")});
  }

  std::map<std::pair<std::string, std::string>, ConeValue> cones;
  if (doc.contains("cones")) {
    for (const auto& [key, value] : doc["cones"].items()) {
      auto bar = key.find('|');
      if (bar == std::string::npos)
        throw CalcError("ParseError", "cone key must be 'lower|upper': " + key);
      std::pair<std::string, std::string> pair{key.substr(0, bar), key.substr(bar + 1)};
      if (value.is_string()) {
        std::string s = value.get<std::string>();
        const std::string prefix = "unknown:";
        if (s.rfind(prefix, 0) != 0)
          throw CalcError("ParseError", "cone string must be 'unknown:<id>': " + s);
        cones.emplace(pair, ConeValue::unknown(s.substr(prefix.size())));
      } else {
        cones.emplace(pair, ConeValue::known(poly_from_json_array(value, "cone " + key)));
      }
    }
  }

  StratDocument result{Stratification(std::move(strata), std::move(cones)), std::nullopt};
  if (doc.contains("e_total"))
    result.e_total = poly_from_json_array(doc["e_total"], "e_total");
  return result;
}

}  // namespace ihcalc::strat
