#ifndef IHCALC_POLY_HPP
#define IHCALC_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ihcalc/bigint.hpp"
#include "ihcalc/error.hpp"

namespace ihcalc {

// Integer-coefficient polynomial in t, stored as a sparse exponent map.
// Canonical form: no zero coefficients are ever stored, so coefficient-wise
// equality is plain map equality. The zero polynomial has no degree.
class TPoly {
public:
  TPoly() = default;

  static TPoly constant(BigInt c);
  static TPoly one() { return constant(BigInt(1)); }
  static TPoly monomial(BigInt c, long long exp);
  // dense construction, coefficients[k] is the t^k coefficient
  static TPoly from_coeffs(const std::vector<long long>& coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<long long> degree() const;
  std::optional<long long> min_degree() const;
  BigInt coeff(long long exp) const;
  BigInt lead_coeff() const;
  const std::map<long long, BigInt>& terms() const { return coeffs_; }

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly operator-() const;
  TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
  TPoly& operator-=(const TPoly& b) { return *this = *this - b; }
  TPoly& operator*=(const TPoly& b) { return *this = *this * b; }
  friend TPoly operator*(const BigInt& c, const TPoly& p);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  TPoly pow(long long k) const;
  // substitute t -> t^k (exponent stretch), k >= 1
  TPoly stretch(long long k) const;
  // multiply by t^k; the result must stay a polynomial (k may be negative)
  TPoly shifted(long long k) const;

  // sum of the terms of degree < k
  TPoly truncate_below(long long k) const;
  // t^N * p(1/t); requires deg p <= N
  TPoly reverse(long long n_top) const;
  bool is_palindromic(long long n_top) const;

  BigInt eval_at_one() const;

  // all coefficients halved; throws HalfNotIntegral on an odd coefficient
  TPoly half() const;
  // divide every coefficient by c exactly
  TPoly scalar_div_exact(const BigInt& c) const;

  bool nonneg_coeffs() const;
  bool even_support() const;

  std::string to_string(const std::string& var = "t") const;

private:
  std::map<long long, BigInt> coeffs_;

  void set(long long exp, BigInt c);
  friend std::optional<TPoly> try_exact_div(const TPoly& a, const TPoly& b);
};

// exact division in Z[t]; NotDivisible when b does not divide a there
TPoly exact_div(const TPoly& a, const TPoly& b);
std::optional<TPoly> try_exact_div(const TPoly& a, const TPoly& b);

BigInt euler_value(const TPoly& p);

// gcd of coefficients (nonnegative), 0 for the zero polynomial
BigInt content(const TPoly& p);
// gcd in Z[t] up to sign, normalized to a positive leading coefficient
TPoly poly_gcd(TPoly a, TPoly b);

// 1 - t^a (the zero polynomial when a == 0)
TPoly one_minus_tpow(long long a);

// Integer Laurent polynomial in u, v; exponents may be negative.
class BiPoly {
public:
  BiPoly() = default;

  static BiPoly constant(BigInt c);
  static BiPoly one() { return constant(BigInt(1)); }
  static BiPoly monomial(BigInt c, long long u_exp, long long v_exp);

  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(long long u_exp, long long v_exp) const;
  const std::map<std::pair<long long, long long>, BigInt>& terms() const { return coeffs_; }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BigInt& c, const BiPoly& p);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // every monomial a power of uv
  bool is_diagonal() const;

  std::string to_string() const;

private:
  std::map<std::pair<long long, long long>, BigInt> coeffs_;

  void set(long long u_exp, long long v_exp, BigInt c);
};

// (uv)^k -> t^(2k); requires the diagonal predicate (NotDiagonal)
TPoly bi_to_t(const BiPoly& b);
// t^(2k) -> (uv)^k; requires even-degree support (OddDegreePresent)
BiPoly t_to_bi(const TPoly& p);

// scalar * t^shift * prod (1 - t^a) / prod (1 - t^a).
// Expansion is exact or rejected; the quotient is re-verified by
// multiplication against the denominator.
struct RationalForm {
  BigInt scalar{1};
  long long shift = 0;
  std::vector<long long> num_factors;
  std::vector<long long> den_factors;

  TPoly expand() const;  // throws NotPolynomial
};

}  // namespace ihcalc

#endif
