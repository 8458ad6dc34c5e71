#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "ihcalc/catalog.hpp"
#include "ihcalc/kirwan.hpp"
#include "ihcalc/strat.hpp"

using namespace ihcalc;
using namespace ihcalc::kirwan;

namespace {

TPoly even_poly(const std::vector<long long>& half) {
  TPoly p;
  for (std::size_t k = 0; k < half.size(); ++k)
    p += TPoly::monomial(BigInt(half[k]), 2 * static_cast<long long>(k));
  return p;
}

}  // namespace

TEST_CASE("SL2-quotient space, closed form") {
  CHECK(ip_sym2sl2_closed(2) == even_poly({1, 1, 1}));
  CHECK(euler_value(ip_sym2sl2_closed(2)) == BigInt(3));
  TPoly n3 = ip_sym2sl2_closed(3);
  CHECK(n3.degree() == 10);  // twice the quotient dimension 3n-4
  CHECK(n3.coeff(0) == BigInt(1));
  CHECK_THROWS_WITH_AS(ip_sym2sl2_closed(1), doctest::Contains("InvalidDimension"), CalcError);
}

TEST_CASE("SL2-quotient space, pipeline equals closed form") {
  for (long long n = 2; n <= 12; ++n) CHECK(ip_sym2sl2_pipeline(n) == ip_sym2sl2_closed(n));
}

TEST_CASE("middle truncation used by the first blow-down") {
  using namespace ihcalc::catalog;
  // the truncated symmetric-square polynomial entering the n=4 pipeline
  TPoly q = p_of(sym2(proj(2))).truncate_below(4);
  CHECK(q == even_poly({1, 1}));
  // the single middle intersection Betti number read off at n=5
  CHECK(ip_sym2sl2_closed(5).coeff(10) == BigInt(2));
  // odd-degree coefficients vanish for even n
  CHECK(ip_sym2sl2_closed(4).coeff(7) == BigInt(0));
}

TEST_CASE("stable-maps space") {
  for (long long n = 3; n <= 12; ++n) CHECK(p_kn_pipeline(n) == p_kn_closed(n));
  for (long long n = 2; n <= 12; ++n) {
    TPoly p = p_kn_closed(n);
    CHECK(p.is_palindromic(2 * (4 * n - 3)));
    CHECK(p.nonneg_coeffs());
  }
  CHECK(euler_value(p_kn_closed(4)) == euler_value(p_kn_pipeline(4)));
  // n=2 is the space of complete conics
  CHECK(p_kn_closed(2) == even_poly({1, 2, 3, 3, 2, 1}));
  CHECK_THROWS_WITH_AS(p_kn_pipeline(2), doctest::Contains("InvalidDimension"), CalcError);
}

TEST_CASE("sheaf-space closed forms") {
  CHECK(ip_mn_closed(2) == even_poly({1, 1, 1, 1, 1, 1}));
  CHECK(ip_mn_closed(3) == even_poly({1, 1, 2, 2, 2, 2, 2, 2, 1, 1}));
  CHECK(ip_mn_closed(5) ==
        even_poly({1, 1, 3, 3, 5, 5, 6, 6, 6, 6, 6, 6, 5, 5, 3, 3, 1, 1}));
}

TEST_CASE("sheaf-space pipeline agrees for n up to 12") {
  for (long long n = 2; n <= 12; ++n) {
    KirwanReport report = ip_mn_pipeline(n);
    CHECK(report.agree);
    CHECK(report.ip_pipeline == report.ip_closed);
    CHECK(report.intermediates.count("p_kn") == 1);
    CHECK(report.intermediates.count("ip_mn_prime") == 1);
    CHECK(report.intermediates.at("ip_mn_prime").nonneg_coeffs());
    // the intermediate space obeys duality too
    CHECK(report.intermediates.at("ip_mn_prime").is_palindromic(8 * n - 6));
  }
}

TEST_CASE("empty floor-sum ranges at small n") {
  KirwanReport r2 = ip_mn_pipeline(2);
  CHECK(r2.intermediates.at("floor_sum_1").is_zero());
  CHECK(r2.intermediates.at("floor_sum_2").is_zero());
  KirwanReport r3 = ip_mn_pipeline(3);
  CHECK_FALSE(r3.intermediates.at("floor_sum_1").is_zero());
  CHECK(r3.intermediates.at("floor_sum_2").is_zero());
}

TEST_CASE("closed forms satisfy duality and positivity") {
  for (long long n = 2; n <= 12; ++n) {
    TPoly p = ip_mn_closed(n);
    long long top = 8 * n - 6;
    CHECK(p.is_palindromic(top));
    CHECK(p.coeff(0) == BigInt(1));
    for (long long e = 0; e <= top; e += 2) CHECK(p.coeff(e) > BigInt(0));
    CHECK(p.even_support());
  }
}

TEST_CASE("open-cone relation right side") {
  CHECK(univrelation_rhs(3) == even_poly({1, 1, 2, 2, 2}));
  CHECK(univrelation_rhs(4) == even_poly({1, 1, 3, 3, 3, 3, 1, 1}));
  CHECK(euler_value(univrelation_rhs(4)) == BigInt(16));
}

TEST_CASE("open-cone relation left side") {
  // the n=4 bookkeeping pair satisfies the relation exactly
  auto x = strat::ConeValue::known(even_poly({1, 0, 1, 0, 1, 0, 1}));
  auto y = strat::ConeValue::known(TPoly::constant(BigInt(2)));
  strat::LinPoly lhs = univrelation_lhs(4, x, y);
  CHECK(lhs.is_constant());
  CHECK(lhs.constant_part() == univrelation_rhs(4));

  // the printed n=3 values do not satisfy it; the gap is t^4 - t^10
  auto one = strat::ConeValue::known(TPoly::one());
  auto quadric = strat::ConeValue::known(even_poly({1, 1}));
  strat::LinPoly lhs3 = univrelation_lhs(3, one, quadric);
  CHECK(lhs3.constant_part() == even_poly({1, 1, 1, 2, 2, 1}));
  CHECK(univrelation_rhs(3) - lhs3.constant_part() ==
        TPoly::monomial(BigInt(1), 4) - TPoly::monomial(BigInt(1), 10));
  CHECK(euler_value(lhs3.constant_part()) == euler_value(univrelation_rhs(3)));

  // fully symbolic form carries the two unknowns linearly
  strat::LinPoly sym =
      univrelation_lhs(3, strat::ConeValue::unknown("a"), strat::ConeValue::unknown("b"));
  CHECK(sym.unknown_coeffs().size() == 2);
  CHECK(sym.unknown_coeffs().at("a") == even_poly({1, 1}));
  CHECK(sym.unknown_coeffs().at("b") == TPoly::from_coeffs({0, 0, 0, 0, 1, 0, 1, 0, 1}));
}

TEST_CASE("n=3 cone solves reproduce the documented discrepancy") {
  auto quadric = strat::ConeValue::known(even_poly({1, 1}));
  // substituting the quadric cone and solving the diagonal cone is not
  // polynomial; the witness is the reduced fraction
  try {
    strat::solve_cones(
        {{univrelation_lhs(3, strat::ConeValue::unknown("delta"), quadric),
          univrelation_rhs(3)}});
    FAIL("expected NonPolynomialSolution");
  } catch (const strat::NonPolynomialSolution& e) {
    CHECK(e.numerator() == TPoly::from_coeffs({1, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1}));
    CHECK(e.denominator() == even_poly({1, 1}));
  }

  // pinning the diagonal cone to 1 forces the other cone to the constant 2
  auto forced = strat::solve_cones(
      {{univrelation_lhs(3, strat::ConeValue::known(TPoly::one()),
                         strat::ConeValue::unknown("s")),
        univrelation_rhs(3)}});
  CHECK(forced.at("s") == TPoly::constant(BigInt(2)));
}

TEST_CASE("correction polynomial") {
  CHECK(cone_correction(4) ==
        -even_poly({0, 0, 2, 2, 4, 4, 5, 3, 3, 1, 1}));
  CHECK(cone_correction(3) == -even_poly({0, 0, 1, 1, 2, 1, 1}));
  for (long long n = 2; n <= 12; ++n) {
    TPoly corr = cone_correction(n);
    CHECK(corr.coeff(0).is_zero());
    CHECK(corr.coeff(2).is_zero());
    CHECK((-corr).nonneg_coeffs());
    CHECK(euler_value(ip_mn_closed(n)) + euler_value(corr) >= BigInt(1));
  }
}

TEST_CASE("proportionality identity behind the correction") {
  using namespace ihcalc::catalog;
  for (long long n = 1; n <= 20; ++n) {
    TPoly lhs = (p_of(sym2(proj(n))) - p_of(proj(n))) * one_minus_tpow(4);
    TPoly rhs = p_of(proj(n)) * TPoly::monomial(BigInt(1), 4) * one_minus_tpow(2 * n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pipeline intermediates stay in even degrees") {
  for (long long n = 2; n <= 8; ++n) {
    KirwanReport report = ip_mn_pipeline(n);
    for (const auto& [name, poly] : report.intermediates) {
      (void)name;
      CHECK(poly.even_support());
    }
    CHECK(report.ip_pipeline.even_support());
  }
}
