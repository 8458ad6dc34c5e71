#include "ihcalc/kirwan.hpp"

#include <algorithm>

#include "ihcalc/catalog.hpp"

namespace ihcalc::kirwan {

namespace {

using catalog::p_of;
using catalog::proj;
using catalog::sym2;

void require_n(long long n, long long min, const char* what) {
  if (n < min)
    throw CalcError("InvalidDimension",
                    std::string(what) + " needs n >= " + std::to_string(min));
}

TPoly expand_quotient(const TPoly& num, const TPoly& den) {
  auto q = try_exact_div(num, den);
  if (!q)
    throw CalcError("NotPolynomial", "(" + num.to_string() + ") / (" + den.to_string() +
                                         ") is not a polynomial");
  return *q;
}

TPoly t_pow(long long e) { return TPoly::monomial(BigInt(1), e); }

}  // namespace

TPoly ip_sym2sl2_closed(long long n) {
  require_n(n, 2, "ip_sym2sl2_closed");
  TPoly inner = one_minus_tpow(2 * n + 2) * one_minus_tpow(2 * n - 2) -
                t_pow(2) * one_minus_tpow(4 * ((n - 1) / 2)) * one_minus_tpow(4 * (n / 2));
  TPoly num = one_minus_tpow(2 * n) * inner;
  TPoly den = one_minus_tpow(2) * one_minus_tpow(2) * one_minus_tpow(4);
  return expand_quotient(num, den);
}

TPoly ip_sym2sl2_pipeline(long long n) {
  require_n(n, 2, "ip_sym2sl2_pipeline");
  // stable maps to P^(n-1): trade the conic Hilbert scheme's P^2-bundle over
  // Gr(3,n) for one over Gr(2,n)
  TPoly p2 = p_of(proj(2));
  TPoly maps = p_of(catalog::hilb_conic_proj(n)) - p2 * catalog::gaussian_binomial(3, n) +
               p2 * catalog::gaussian_binomial(2, n);
  // blow-down correction along the strictly semistable P^(n-1): the below-
  // middle part of the Sym^2 P^(n-2) fibre, shifted up, plus its mirror
  TPoly q = p_of(sym2(proj(n - 2))).truncate_below(2 * n - 4);
  return maps - p_of(proj(n - 1)) * (t_pow(2) * q + q.reverse(4 * n - 8));
}

TPoly p_kn_closed(long long n) {
  require_n(n, 2, "p_kn_closed");
  TPoly bracket = (TPoly::one() + t_pow(2 * n + 2)) * (TPoly::one() + t_pow(6)) -
                  t_pow(2) * (TPoly::one() + t_pow(2)) * (t_pow(4) + t_pow(2 * n - 2));
  TPoly num = bracket * one_minus_tpow(2 * n + 2) * one_minus_tpow(2 * n) *
              one_minus_tpow(2 * n - 2);
  TPoly den = one_minus_tpow(2).pow(3) * one_minus_tpow(4).pow(2);
  return expand_quotient(num, den);
}

TPoly p_kn_pipeline(long long n) {
  require_n(n, 3, "p_kn_pipeline");
  TPoly rel = p_of(catalog::hilb_conic_rel_gr(n));
  TPoly down = p_of(proj(5)) * catalog::gaussian_binomial(3, n + 1) *
               (p_of(proj(n - 3)) - TPoly::one());
  TPoly flip = p_of(catalog::flag13(n + 1)) * (p_of(proj(2)) - p_of(proj(n - 2)));
  return rel - down + flip;
}

TPoly ip_mn_closed(long long n) {
  require_n(n, 2, "ip_mn_closed");
  RationalForm rf;
  rf.num_factors = {4 * n + 4, 4 * (n / 2), 4 * ((n + 1) / 2)};
  rf.den_factors = {2, 4, 4};
  return rf.expand();
}

namespace {

// floor sums of the second blow-down correction
TPoly floor_sum(long long j_lo, long long j_hi, long long offset, long long mirror) {
  TPoly s;
  for (long long j = j_lo; j <= j_hi; ++j) {
    long long v = std::min(j + offset, mirror - j) / 2;
    if (v > 0) s += TPoly::monomial(BigInt(v), 2 * j);
  }
  return s;
}

}  // namespace

KirwanReport ip_mn_pipeline(long long n) {
  require_n(n, 2, "ip_mn_pipeline");
  KirwanReport report;
  report.n = n;
  report.ip_closed = ip_mn_closed(n);

  TPoly pn = p_of(proj(n));
  TPoly kn = p_kn_closed(n);

  // second blow-up center: Sym^2 P^n blown up along the diagonal; the two
  // half-integer brackets collect invariant and anti-invariant classes of
  // the normal C* x Z2 weights. (1 - (-t^2)^(2n+2)) is transcribed with the
  // signed power; 2n+2 is even so it equals 1 - t^(4n+4).
  TPoly signed_pow = TPoly::one() - TPoly::monomial(BigInt(-1), 2).pow(2 * n + 2);
  TPoly ratio = expand_quotient(signed_pow, one_minus_tpow(4));
  TPoly geom = expand_quotient(t_pow(2 * n) - t_pow(2),
                               t_pow(2) - TPoly::one());  // t^2 + ... + t^(2n-2)

  TPoly sum1 = floor_sum(1, 2 * n - 4, 1, 2 * n - 2);
  TPoly sum2 = floor_sum(2, 2 * n - 5, 0, 2 * n - 3);
  TPoly corr1 = ((pn * pn + ratio + BigInt(2) * (pn * geom)) * sum1).half();
  TPoly corr2 = ((pn * pn - ratio) * sum2).half();
  TPoly ip_prime = kn - corr1 - corr2;

  // first blow-up center P^n: below-middle intersection Betti numbers of the
  // exceptional SL(2)-quotient fibre, shifted by t^2, plus the mirror copy
  // inside the degree-(8n-6) palindrome; the single overlap degree 3n-3 is
  // counted once.
  TPoly ips = ip_sym2sl2_closed(n);
  TPoly r = ips.truncate_below(3 * n - 4);
  BigInt ih_mid = ips.coeff(3 * n - 5);
  TPoly bracket = t_pow(2) * r + r.reverse(6 * n - 8) - TPoly::monomial(ih_mid, 3 * n - 3);
  report.ip_pipeline = ip_prime - pn * bracket;

  report.intermediates["p_kn"] = kn;
  report.intermediates["ip_mn_prime"] = ip_prime;
  report.intermediates["r_trunc"] = r;
  report.intermediates["q_trunc"] =
      p_of(sym2(proj(n - 2))).truncate_below(2 * n - 4);
  report.intermediates["floor_sum_1"] = sum1;
  report.intermediates["floor_sum_2"] = sum2;
  report.agree = report.ip_pipeline == report.ip_closed;
  return report;
}

TPoly univrelation_rhs(long long n) {
  require_n(n, 2, "univrelation_rhs");
  TPoly num = (t_pow(2 * n - 2) - TPoly::one()) *
              (BigInt(2) * t_pow(2 * n + 4) - t_pow(4) - TPoly::one());
  if (n % 2 == 0) {
    // ((-1)^n + 1)/2 is 1 for even n and 0 for odd n
    num += (t_pow(2 * n - 2) + t_pow(4 * n)) * (TPoly::one() - t_pow(2)).pow(2);
  }
  TPoly den = (t_pow(2) - TPoly::one()) * (t_pow(4) - TPoly::one());
  return expand_quotient(num, den);
}

strat::LinPoly univrelation_lhs(long long n, const strat::ConeValue& cone_delta,
                                const strat::ConeValue& cone_s) {
  require_n(n, 2, "univrelation_lhs");
  TPoly delta_coeff = t_pow(2) + TPoly::one();
  TPoly s_coeff = t_pow(4) * expand_quotient(one_minus_tpow(2 * n), one_minus_tpow(2));
  return strat::LinPoly(delta_coeff) * strat::LinPoly::from_cone(cone_delta) +
         strat::LinPoly(s_coeff) * strat::LinPoly::from_cone(cone_s);
}

TPoly cone_correction(long long n) {
  require_n(n, 2, "cone_correction");
  TPoly pn = p_of(proj(n));
  TPoly product = pn * univrelation_rhs(n);
  auto q = try_exact_div(product, TPoly::one() + t_pow(2));
  if (!q)
    throw CalcError("NotDivisible",
                    "P(P^n) * rhs(n) is not divisible by 1 + t^2 at n = " + std::to_string(n));
  return p_of(sym2(proj(n))) - *q;
}

}  // namespace ihcalc::kirwan
