#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "ihcalc/bigint.hpp"
#include "ihcalc/error.hpp"

using ihcalc::BigInt;

namespace {

// deterministic xorshift generator for the property sweeps
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long long small(long long bound) {
    return static_cast<long long>(next() % (2 * bound + 1)) - bound;
  }
};

}  // namespace

TEST_CASE("construction and printing") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(1234567890123456789ll).to_string() == "1234567890123456789");
  CHECK(BigInt(-1000000000).to_string() == "-1000000000");
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(4).is_even());
  CHECK_FALSE(BigInt(-3).is_even());
}

TEST_CASE("arithmetic agrees with 128-bit reference on random values") {
  Rng rng;
  for (int round = 0; round < 3000; ++round) {
    long long a = rng.small(2000000000ll);
    long long b = rng.small(2000000000ll);
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    __int128 prod = static_cast<__int128>(a) * b;
    BigInt big_prod = BigInt(a) * BigInt(b);
    __int128 reconstructed = static_cast<__int128>(big_prod.to_int64());
    CHECK(reconstructed == prod);
    if (b != 0) {
      auto [q, r] = BigInt::divmod(BigInt(a), BigInt(b));
      CHECK(q.to_int64() == a / b);
      CHECK(r.to_int64() == a % b);
      CHECK(q * BigInt(b) + r == BigInt(a));
    }
  }
}

TEST_CASE("multi-limb multiplication and division") {
  BigInt big(1000000000000000000ll);  // 10^18
  BigInt square = big * big;
  CHECK(square.to_string() == "1" + std::string(36, '0'));
  CHECK_FALSE(square.fits_int64());
  CHECK_THROWS_AS(square.to_int64(), ihcalc::CalcError);

  auto [q, r] = BigInt::divmod(square + BigInt(17), big);
  CHECK(q == big);
  CHECK(r == BigInt(17));

  // truncated signs
  auto [q2, r2] = BigInt::divmod(BigInt(-7), BigInt(2));
  CHECK(q2 == BigInt(-3));
  CHECK(r2 == BigInt(-1));
}

TEST_CASE("comparisons and gcd") {
  CHECK(BigInt(-5) < BigInt(3));
  CHECK(BigInt(3) < BigInt(5));
  CHECK(BigInt(-5) < BigInt(-3));
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(7)) == BigInt(7));

  Rng rng;
  for (int round = 0; round < 500; ++round) {
    long long a = rng.small(100000);
    long long b = rng.small(100000);
    BigInt g = BigInt::gcd(BigInt(a), BigInt(b));
    if (a != 0 || b != 0) {
      CHECK((BigInt(a) % g).is_zero());
      CHECK((BigInt(b) % g).is_zero());
    }
  }
}

TEST_CASE("binomial coefficients by Pascal recursion stay exact") {
  // C(80, 40) does not fit in 64 bits; build it additively
  std::vector<BigInt> row{BigInt(1)};
  for (int n = 1; n <= 80; ++n) {
    std::vector<BigInt> next(n + 1, BigInt(0));
    for (int k = 0; k <= n; ++k) {
      if (k < n) next[k] += row[k];
      if (k > 0) next[k] += row[k - 1];
    }
    row = std::move(next);
  }
  // cross-check against the multiplicative formula with exact divisions
  BigInt c(1);
  for (int i = 1; i <= 40; ++i) {
    auto [q, r] = BigInt::divmod(c * BigInt(80 - 40 + i), BigInt(i));
    REQUIRE(r.is_zero());
    c = q;
  }
  CHECK(row[40] == c);
  CHECK_FALSE(row[40].fits_int64());
}
