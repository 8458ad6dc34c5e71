#ifndef IHCALC_BIGINT_HPP
#define IHCALC_BIGINT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ihcalc {

// Arbitrary-precision signed integer, sign-magnitude with base-10^9 limbs.
// Small and exact; all polynomial coefficients in this project go through it.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const;
  int signum() const { return sign_; }

  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // Truncated division: quotient rounds toward zero, remainder has the
  // dividend's sign. Throws on division by zero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  BigInt operator/(const BigInt& b) const { return divmod(*this, b).first; }
  BigInt operator%(const BigInt& b) const { return divmod(*this, b).second; }

  static BigInt gcd(BigInt a, BigInt b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  bool fits_int64() const;
  long long to_int64() const;  // throws IntegerOverflow when out of range

  std::string to_string() const;

private:
  static constexpr std::uint32_t kBase = 1000000000u;

  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_small(const std::vector<std::uint32_t>& a,
                                              std::uint32_t d);
  static void trim(std::vector<std::uint32_t>& v);
  void normalize();
};

}  // namespace ihcalc

#endif
