#include "ihcalc/poly.hpp"

#include <algorithm>

namespace ihcalc {

namespace {
constexpr long long kMaxExp = 1ll << 42;

void check_exp(long long e) {
  if (e > kMaxExp || e < -kMaxExp)
    throw CalcError("ExponentOverflow", "exponent " + std::to_string(e) + " out of range");
}
}  // namespace

void TPoly::set(long long exp, BigInt c) {
  if (c.is_zero()) return;
  if (exp < 0) throw CalcError("ExponentOverflow", "negative t-exponent");
  check_exp(exp);
  coeffs_[exp] = std::move(c);
}

TPoly TPoly::constant(BigInt c) {
  TPoly p;
  p.set(0, std::move(c));
  return p;
}

TPoly TPoly::monomial(BigInt c, long long exp) {
  TPoly p;
  p.set(exp, std::move(c));
  return p;
}

TPoly TPoly::from_coeffs(const std::vector<long long>& coefficients) {
  TPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    p.set(static_cast<long long>(k), BigInt(coefficients[k]));
  return p;
}

std::optional<long long> TPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::optional<long long> TPoly::min_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

BigInt TPoly::coeff(long long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? BigInt() : it->second;
}

BigInt TPoly::lead_coeff() const {
  return coeffs_.empty() ? BigInt() : coeffs_.rbegin()->second;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly r = a;
  for (const auto& [e, c] : b.coeffs_) {
    auto it = r.coeffs_.find(e);
    if (it == r.coeffs_.end()) {
      r.coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

TPoly TPoly::operator-() const {
  TPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      check_exp(ea + eb);
      auto it = r.coeffs_.find(ea + eb);
      if (it == r.coeffs_.end()) {
        BigInt c = ca * cb;
        if (!c.is_zero()) r.coeffs_.emplace(ea + eb, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

TPoly operator*(const BigInt& c, const TPoly& p) {
  TPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.coeffs_) r.coeffs_.emplace(e, c * pc);
  return r;
}

TPoly TPoly::pow(long long k) const {
  if (k < 0) throw CalcError("InvalidArgument", "negative polynomial power");
  TPoly r = one();
  TPoly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

TPoly TPoly::stretch(long long k) const {
  if (k < 1) throw CalcError("InvalidArgument", "stretch factor must be positive");
  TPoly r;
  for (const auto& [e, c] : coeffs_) r.set(e * k, c);
  return r;
}

TPoly TPoly::shifted(long long k) const {
  TPoly r;
  for (const auto& [e, c] : coeffs_) r.set(e + k, c);
  return r;
}

TPoly TPoly::truncate_below(long long k) const {
  if (k < 0) throw CalcError("InvalidArgument", "truncation bound must be >= 0");
  TPoly r;
  for (const auto& [e, c] : coeffs_) {
    if (e < k) r.coeffs_.emplace(e, c);
  }
  return r;
}

TPoly TPoly::reverse(long long n_top) const {
  if (n_top < 0) throw CalcError("InvalidArgument", "reversal degree must be >= 0");
  auto d = degree();
  if (d && *d > n_top)
    throw CalcError("DegreeExceedsN", "degree " + std::to_string(*d) +
                                          " exceeds reversal degree " + std::to_string(n_top));
  TPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(n_top - e, c);
  return r;
}

bool TPoly::is_palindromic(long long n_top) const {
  auto d = degree();
  if (d && *d > n_top) return false;
  return reverse(n_top) == *this;
}

BigInt TPoly::eval_at_one() const {
  BigInt s;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

TPoly TPoly::half() const {
  TPoly r;
  for (const auto& [e, c] : coeffs_) {
    auto [q, rem] = BigInt::divmod(c, BigInt(2));
    if (!rem.is_zero())
      throw CalcError("HalfNotIntegral",
                      "odd coefficient " + c.to_string() + " at t^" + std::to_string(e));
    r.coeffs_.emplace(e, q);
  }
  return r;
}

TPoly TPoly::scalar_div_exact(const BigInt& c) const {
  if (c.is_zero()) throw CalcError("DivisionByZero", "scalar division by zero");
  TPoly r;
  for (const auto& [e, pc] : coeffs_) {
    auto [q, rem] = BigInt::divmod(pc, c);
    if (!rem.is_zero())
      throw CalcError("NotDivisible", "coefficient " + pc.to_string() +
                                          " not divisible by " + c.to_string());
    r.coeffs_.emplace(e, q);
  }
  return r;
}

bool TPoly::nonneg_coeffs() const {
  for (const auto& [e, c] : coeffs_) {
    if (c.is_negative()) return false;
  }
  return true;
}

bool TPoly::even_support() const {
  for (const auto& [e, c] : coeffs_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

std::string TPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : coeffs_) {
    std::string abs_str = c.abs().to_string();
    if (s.empty()) {
      if (c.is_negative()) s += "-";
    } else {
      s += c.is_negative() ? " - " : " + ";
    }
    if (e == 0) {
      s += abs_str;
    } else {
      if (abs_str != "1") s += abs_str + "*";
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::optional<TPoly> try_exact_div(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw CalcError("DivisionByZero", "polynomial division by zero");
  if (a.is_zero()) return TPoly();
  long long db = *b.degree();
  BigInt lb = b.lead_coeff();
  TPoly rem = a;
  TPoly quot;
  while (!rem.is_zero() && *rem.degree() >= db) {
    auto [qc, qr] = BigInt::divmod(rem.lead_coeff(), lb);
    if (!qr.is_zero()) return std::nullopt;
    TPoly term = TPoly::monomial(qc, *rem.degree() - db);
    quot += term;
    rem -= term * b;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

TPoly exact_div(const TPoly& a, const TPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q)
    throw CalcError("NotDivisible",
                    "(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return *q;
}

BigInt euler_value(const TPoly& p) { return p.eval_at_one(); }

BigInt content(const TPoly& p) {
  BigInt g;
  for (const auto& [e, c] : p.terms()) g = BigInt::gcd(g, c);
  return g;
}

namespace {
// primitive part with positive leading coefficient
TPoly primitive_part(const TPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.lead_coeff().is_negative()) c = -c;
  return p.scalar_div_exact(c);
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
TPoly pseudo_rem(TPoly a, const TPoly& b) {
  long long db = *b.degree();
  const BigInt lb = b.lead_coeff();
  while (!a.is_zero() && *a.degree() >= db) {
    TPoly shift_b = b.shifted(*a.degree() - db);
    a = lb * a - a.lead_coeff() * shift_b;
  }
  return a;
}
}  // namespace

TPoly poly_gcd(TPoly a, TPoly b) {
  if (a.is_zero() && b.is_zero()) return TPoly();
  if (a.is_zero()) return content(b) * primitive_part(b);
  if (b.is_zero()) return content(a) * primitive_part(a);
  BigInt c = BigInt::gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    TPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return c * a;
}

TPoly one_minus_tpow(long long a) {
  if (a < 0) throw CalcError("InvalidArgument", "negative exponent in 1 - t^a");
  return TPoly::one() - TPoly::monomial(BigInt(1), a);
}

// ---------------------------------------------------------------- BiPoly --

void BiPoly::set(long long u_exp, long long v_exp, BigInt c) {
  if (c.is_zero()) return;
  check_exp(u_exp);
  check_exp(v_exp);
  coeffs_[{u_exp, v_exp}] = std::move(c);
}

BiPoly BiPoly::constant(BigInt c) {
  BiPoly p;
  p.set(0, 0, std::move(c));
  return p;
}

BiPoly BiPoly::monomial(BigInt c, long long u_exp, long long v_exp) {
  BiPoly p;
  p.set(u_exp, v_exp, std::move(c));
  return p;
}

BigInt BiPoly::coeff(long long u_exp, long long v_exp) const {
  auto it = coeffs_.find({u_exp, v_exp});
  return it == coeffs_.end() ? BigInt() : it->second;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [ev, c] : b.coeffs_) {
    auto it = r.coeffs_.find(ev);
    if (it == r.coeffs_.end()) {
      r.coeffs_.emplace(ev, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [ev, c] : coeffs_) r.coeffs_.emplace(ev, -c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      std::pair<long long, long long> e{ea.first + eb.first, ea.second + eb.second};
      check_exp(e.first);
      check_exp(e.second);
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        BigInt c = ca * cb;
        if (!c.is_zero()) r.coeffs_.emplace(e, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

BiPoly operator*(const BigInt& c, const BiPoly& p) {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [ev, pc] : p.coeffs_) r.coeffs_.emplace(ev, c * pc);
  return r;
}

bool BiPoly::is_diagonal() const {
  for (const auto& [ev, c] : coeffs_) {
    if (ev.first != ev.second) return false;
  }
  return true;
}

std::string BiPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [ev, c] : coeffs_) {
    std::string abs_str = c.abs().to_string();
    if (s.empty()) {
      if (c.is_negative()) s += "-";
    } else {
      s += c.is_negative() ? " - " : " + ";
    }
    auto [ue, ve] = ev;
    if (ue == 0 && ve == 0) {
      s += abs_str;
      continue;
    }
    if (abs_str != "1") s += abs_str + "*";
    if (ue == ve) {
      s += "(uv)";
      if (ue != 1) s += "^" + std::to_string(ue);
      continue;
    }
    bool first = true;
    if (ue != 0) {
      s += "u";
      if (ue != 1) s += "^" + std::to_string(ue);
      first = false;
    }
    if (ve != 0) {
      if (!first) s += "*";
      s += "v";
      if (ve != 1) s += "^" + std::to_string(ve);
    }
  }
  return s;
}

TPoly bi_to_t(const BiPoly& b) {
  if (!b.is_diagonal())
    throw CalcError("NotDiagonal", "off-diagonal monomial in " + b.to_string());
  TPoly r;
  for (const auto& [ev, c] : b.terms()) {
    if (ev.first < 0)
      throw CalcError("NotDiagonal", "negative diagonal power cannot map to t");
    r += TPoly::monomial(c, 2 * ev.first);
  }
  return r;
}

BiPoly t_to_bi(const TPoly& p) {
  if (!p.even_support())
    throw CalcError("OddDegreePresent", "odd-degree term in " + p.to_string());
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r = r + BiPoly::monomial(c, e / 2, e / 2);
  return r;
}

TPoly RationalForm::expand() const {
  TPoly num = TPoly::monomial(scalar, shift);
  for (long long a : num_factors) num *= one_minus_tpow(a);
  TPoly den = TPoly::one();
  for (long long a : den_factors) den *= one_minus_tpow(a);
  if (den.is_zero())
    throw CalcError("NotPolynomial", "denominator of rational form vanishes");
  auto q = try_exact_div(num, den);
  if (!q)
    throw CalcError("NotPolynomial", "(" + num.to_string() + ") / (" + den.to_string() +
                                         ") is not a polynomial");
  if (*q * den != num)
    throw CalcError("NotPolynomial", "rational form expansion failed re-verification");
  return *q;
}

}  // namespace ihcalc
