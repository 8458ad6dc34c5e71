#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ihcalc/poly.hpp"

using namespace ihcalc;

namespace {

struct Rng {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long long in(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

TPoly random_poly(Rng& rng, long long max_deg = 8, long long max_coeff = 9) {
  TPoly p;
  long long terms = rng.in(0, 5);
  for (long long i = 0; i < terms; ++i)
    p += TPoly::monomial(BigInt(rng.in(-max_coeff, max_coeff)), rng.in(0, max_deg));
  return p;
}

bool kind_is(const CalcError& e, const char* kind) { return e.kind() == kind; }

}  // namespace

TEST_CASE("basic arithmetic") {
  TPoly a = TPoly::from_coeffs({1, 0, 1});  // 1 + t^2
  CHECK((a * a) == TPoly::from_coeffs({1, 0, 2, 0, 1}));
  CHECK((a + TPoly()) == a);
  CHECK((a - a).is_zero());
  CHECK(a.degree() == 2);
  CHECK_FALSE(TPoly().degree().has_value());
  CHECK(TPoly().is_zero());

  BiPoly uv = BiPoly::monomial(BigInt(1), 1, 1);
  BiPoly one = BiPoly::one();
  CHECK((one + uv) * (one - uv) == one - uv * uv);
}

TEST_CASE("canonical form never stores zeros") {
  Rng rng;
  for (int round = 0; round < 300; ++round) {
    TPoly p = random_poly(rng);
    TPoly q = random_poly(rng);
    TPoly cancelled = p - p + q * TPoly();
    for (const auto& [e, c] : cancelled.terms()) {
      (void)e;
      CHECK_FALSE(c.is_zero());
    }
    TPoly sum = p + q;
    for (const auto& [e, c] : sum.terms()) {
      (void)e;
      CHECK_FALSE(c.is_zero());
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng;
  for (int round = 0; round < 200; ++round) {
    TPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("rational form expansion") {
  RationalForm m2;
  m2.num_factors = {12, 4, 4};
  m2.den_factors = {2, 4, 4};
  CHECK(m2.expand() == TPoly::from_coeffs({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));

  RationalForm geometric;
  geometric.num_factors = {4};
  geometric.den_factors = {2};
  CHECK(geometric.expand() == TPoly::from_coeffs({1, 0, 1}));

  RationalForm series;
  series.num_factors = {2};
  series.den_factors = {4};
  CHECK_THROWS_WITH_AS(series.expand(), doctest::Contains("NotPolynomial"), CalcError);
}

TEST_CASE("rational form expansion is verified against its denominator") {
  Rng rng;
  for (int round = 0; round < 100; ++round) {
    RationalForm rf;
    long long factors = rng.in(1, 3);
    for (long long i = 0; i < factors; ++i) rf.den_factors.push_back(2 * rng.in(1, 4));
    // numerator := denominator times a known quotient, in factored shape:
    // num factors are den factors plus extra ones
    rf.num_factors = rf.den_factors;
    long long extra = rng.in(1, 2);
    for (long long i = 0; i < extra; ++i) rf.num_factors.push_back(2 * rng.in(1, 5));
    TPoly expanded = rf.expand();
    TPoly den = TPoly::one();
    for (long long a : rf.den_factors) den *= one_minus_tpow(a);
    TPoly num = TPoly::one();
    for (long long a : rf.num_factors) num *= one_minus_tpow(a);
    CHECK(expanded * den == num);
  }
}

TEST_CASE("truncation") {
  TPoly p = TPoly::from_coeffs({1, 0, 1, 0, 1});
  CHECK(p.truncate_below(4) == TPoly::from_coeffs({1, 0, 1}));
  CHECK(p.truncate_below(0).is_zero());

  Rng rng;
  for (int round = 0; round < 200; ++round) {
    TPoly q = random_poly(rng);
    long long k = rng.in(0, 10);
    TPoly low = q.truncate_below(k);
    TPoly high = q - low;
    CHECK(low + high == q);
    auto mind = high.min_degree();
    if (mind) CHECK(*mind >= k);
  }
}

TEST_CASE("reversal") {
  CHECK(TPoly::from_coeffs({1, 0, 1}).reverse(4) == TPoly::from_coeffs({0, 0, 1, 0, 1}));
  CHECK(TPoly::one().reverse(6) == TPoly::monomial(BigInt(1), 6));
  CHECK_THROWS_WITH_AS(TPoly::from_coeffs({1, 0, 1}).reverse(1),
                       doctest::Contains("DegreeExceedsN"), CalcError);

  Rng rng;
  for (int round = 0; round < 200; ++round) {
    TPoly p = random_poly(rng);
    long long n_top = (p.degree() ? *p.degree() : 0) + rng.in(0, 4);
    CHECK(p.reverse(n_top).reverse(n_top) == p);
  }
}

TEST_CASE("palindromicity and coefficient access") {
  TPoly p = TPoly::from_coeffs({1, 0, 2, 0, 1});
  CHECK(p.is_palindromic(4));
  CHECK(p.coeff(2) == BigInt(2));
  CHECK(TPoly::from_coeffs({1, 0, 3, 0, 1}).coeff(2) == BigInt(3));
  CHECK_FALSE(TPoly::from_coeffs({1, 1, 2}).is_palindromic(2));
}

TEST_CASE("specializations") {
  CHECK(euler_value(TPoly::from_coeffs({1, 0, 2, 0, 1})) == BigInt(4));

  BiPoly b = BiPoly::one() + BiPoly::monomial(BigInt(1), 1, 1);
  CHECK(bi_to_t(b) == TPoly::from_coeffs({1, 0, 1}));
  CHECK_THROWS_WITH_AS(bi_to_t(BiPoly::monomial(BigInt(1), 2, 1)),
                       doctest::Contains("NotDiagonal"), CalcError);
  CHECK_THROWS_WITH_AS(t_to_bi(TPoly::from_coeffs({0, 1})),
                       doctest::Contains("OddDegreePresent"), CalcError);

  Rng rng;
  for (int round = 0; round < 200; ++round) {
    TPoly even;
    long long terms = rng.in(0, 5);
    for (long long i = 0; i < terms; ++i)
      even += TPoly::monomial(BigInt(rng.in(-9, 9)), 2 * rng.in(0, 6));
    CHECK(bi_to_t(t_to_bi(even)) == even);
  }
}

TEST_CASE("exact division") {
  Rng rng;
  for (int round = 0; round < 200; ++round) {
    TPoly a = random_poly(rng);
    TPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_WITH_AS(exact_div(TPoly::from_coeffs({1, 1}), TPoly::from_coeffs({1, 0, 1})),
                       doctest::Contains("NotDivisible"), CalcError);
  // divisible over the rationals but not over the integers
  CHECK_FALSE(try_exact_div(TPoly::from_coeffs({0, 1, 1}), TPoly::from_coeffs({2, 2})));
}

TEST_CASE("halving") {
  CHECK(TPoly::from_coeffs({2, 0, 4}).half() == TPoly::from_coeffs({1, 0, 2}));
  CHECK_THROWS_WITH_AS(TPoly::from_coeffs({3}).half(), doctest::Contains("HalfNotIntegral"),
                       CalcError);
}

TEST_CASE("polynomial gcd") {
  TPoly a = TPoly::from_coeffs({1, 1});      // 1 + t
  TPoly b = TPoly::from_coeffs({1, 0, 1});   // 1 + t^2
  TPoly c = TPoly::from_coeffs({-1, 0, 1});  // t^2 - 1
  CHECK(poly_gcd(a * b, a * c) == a);
  CHECK(poly_gcd(TPoly(), b) == b);
  CHECK(poly_gcd(BigInt(6) * a, BigInt(4) * a) == BigInt(2) * a);

  Rng rng;
  for (int round = 0; round < 100; ++round) {
    TPoly g = random_poly(rng, 4);
    TPoly x = random_poly(rng, 4);
    TPoly y = random_poly(rng, 4);
    if (g.is_zero()) continue;
    TPoly d = poly_gcd(g * x, g * y);
    if ((g * x).is_zero() && (g * y).is_zero()) continue;
    // gcd of multiples of g is divisible by the primitive part of g
    CHECK(try_exact_div(content(g) * d, content(d) * g).has_value());
  }
}

TEST_CASE("signed power constructor transcribes (1 - (-t^2)^(2n+2))") {
  for (long long n = 2; n <= 6; ++n) {
    TPoly lhs = TPoly::one() - TPoly::monomial(BigInt(-1), 2).pow(2 * n + 2);
    CHECK(lhs == one_minus_tpow(4 * n + 4));
  }
  // odd power flips the sign
  TPoly odd = TPoly::one() - TPoly::monomial(BigInt(-1), 2).pow(3);
  CHECK(odd == TPoly::from_coeffs({1, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("coefficients beyond 64 bits survive round trips") {
  TPoly binom = TPoly::from_coeffs({1, 1}).pow(80);
  // middle coefficient equals the Pascal value, computed independently
  BigInt c(1);
  for (int i = 1; i <= 40; ++i) {
    auto [q, r] = BigInt::divmod(c * BigInt(40 + i), BigInt(i));
    REQUIRE(r.is_zero());
    c = q;
  }
  CHECK(binom.coeff(40) == c);
  CHECK(exact_div(binom, TPoly::from_coeffs({1, 1}).pow(39)) ==
        TPoly::from_coeffs({1, 1}).pow(41));
}
