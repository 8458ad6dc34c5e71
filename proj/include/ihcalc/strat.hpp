#ifndef IHCALC_STRAT_HPP
#define IHCALC_STRAT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ihcalc/poly.hpp"

namespace ihcalc::strat {

// Intersection polynomial of the open cone of a link: either a known
// polynomial (constant term >= 1) or a named unknown to solve for.
class ConeValue {
public:
  static ConeValue known(TPoly p);
  static ConeValue unknown(std::string id);

  bool is_known() const { return !id_.has_value(); }
  const TPoly& value() const;
  const std::string& id() const;

private:
  ConeValue() = default;
  TPoly value_;
  std::optional<std::string> id_;
};

struct Stratum {
  std::string name;
  TPoly ie_closure;
};

// A chain of strata ordered by closure, deepest first; the last stratum is
// the dense open one. Cone data is required for every comparable pair.
class Stratification {
public:
  Stratification(std::vector<Stratum> strata,
                 std::map<std::pair<std::string, std::string>, ConeValue> cones);

  const std::vector<Stratum>& strata() const { return strata_; }
  std::size_t size() const { return strata_.size(); }
  const Stratum& top() const { return strata_.back(); }
  const ConeValue& cone(const std::string& lower, const std::string& upper) const;

private:
  std::vector<Stratum> strata_;
  std::map<std::pair<std::string, std::string>, ConeValue> cones_;
};

// Polynomial expression that is linear in a set of named unknowns.
class LinPoly {
public:
  LinPoly() = default;
  LinPoly(TPoly constant);  // NOLINT(google-explicit-constructor)
  static LinPoly from_cone(const ConeValue& cv);

  const TPoly& constant_part() const { return constant_; }
  const std::map<std::string, TPoly>& unknown_coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.empty(); }

  friend LinPoly operator+(const LinPoly& a, const LinPoly& b);
  friend LinPoly operator-(const LinPoly& a, const LinPoly& b);
  LinPoly operator-() const;
  // products are defined only when at least one factor is constant
  friend LinPoly operator*(const LinPoly& a, const LinPoly& b);

  friend bool operator==(const LinPoly& a, const LinPoly& b);

  std::string to_string() const;

private:
  TPoly constant_;
  std::map<std::string, TPoly> coeffs_;
  void prune();
};

// Linear-solver failure carrying the offending reduced fraction.
class NonPolynomialSolution : public CalcError {
public:
  NonPolynomialSolution(std::string unknown, TPoly numerator, TPoly denominator,
                        const std::string& reason);

  const std::string& unknown() const { return unknown_; }
  const TPoly& numerator() const { return numerator_; }
  const TPoly& denominator() const { return denominator_; }

private:
  std::string unknown_;
  TPoly numerator_;
  TPoly denominator_;
};

// Inclusion-exclusion class of a stratum closure: the closure's polynomial
// minus the cone-weighted classes of everything below it.
LinPoly ietilde(const Stratification& s, const std::string& stratum);

// E(Y) from IE(Y) over the stratification; linear in any unknown cones.
LinPoly e_from_ie(const Stratification& s, const TPoly& ie_total);

// E(X) for a proper map with given fibre polynomials per stratum.
LinPoly pushforward_e(const Stratification& s,
                      const std::map<std::string, TPoly>& fibers,
                      const TPoly& ie_total);

// Solve a linear system (lhs expression, rhs polynomial) for the unknowns.
// The solution must be polynomial, with nonnegative coefficients and a
// positive constant term; every division is checked exact.
std::map<std::string, TPoly> solve_cones(
    const std::vector<std::pair<LinPoly, TPoly>>& equations);

// JSON document: {"strata":[{"name":..,"ie":[..]},..],
//                 "cones":{"lower|upper":[..] or "unknown:<id>"},
//                 "e_total":[..]}   (e_total optional)
struct StratDocument {
  Stratification stratification;
  std::optional<TPoly> e_total;
};
StratDocument parse_stratification_json(const std::string& text);

}  // namespace ihcalc::strat

#endif
