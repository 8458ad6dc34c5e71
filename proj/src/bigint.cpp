#include "ihcalc/bigint.hpp"

#include <algorithm>
#include <limits>

#include "ihcalc/error.hpp"

namespace ihcalc {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                               : static_cast<unsigned long long>(v);
  while (u > 0) {
    mag_.push_back(static_cast<std::uint32_t>(u % kBase));
    u /= kBase;
  }
}

bool BigInt::is_even() const {
  if (sign_ == 0) return true;
  return mag_[0] % 2 == 0;  // base is even
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

void BigInt::trim(std::vector<std::uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void BigInt::normalize() {
  trim(mag_);
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < a.size() || i < b.size(); ++i) {
    std::uint64_t cur = carry;
    if (i < a.size()) cur += a[i];
    if (i < b.size()) cur += b[i];
    r.push_back(static_cast<std::uint32_t>(cur % kBase));
    carry = static_cast<std::uint32_t>(cur / kBase);
  }
  if (carry) r.push_back(carry);
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(cur);
  }
  trim(r);
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  trim(r);
  return r;
}

std::vector<std::uint32_t> BigInt::mul_small(const std::vector<std::uint32_t>& a,
                                             std::uint32_t d) {
  if (d == 0 || a.empty()) return {};
  std::vector<std::uint32_t> r;
  r.reserve(a.size() + 1);
  std::uint64_t carry = 0;
  for (std::uint32_t limb : a) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * d + carry;
    r.push_back(static_cast<std::uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  while (carry) {
    r.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw CalcError("DivisionByZero", "BigInt division by zero");
  if (a.sign_ == 0) return {BigInt(), BigInt()};
  if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt(), a};

  // schoolbook long division; the trial digit is found by binary search,
  // which is plenty fast at the limb counts seen here
  std::vector<std::uint32_t> quot(a.mag_.size(), 0);
  std::vector<std::uint32_t> rem;
  for (std::size_t i = a.mag_.size(); i-- > 0;) {
    rem.insert(rem.begin(), a.mag_[i]);
    trim(rem);
    std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if (cmp_mag(mul_small(b.mag_, mid), rem) <= 0) {
        digit = mid;
        if (mid == kBase - 1) break;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    quot[i] = digit;
    if (digit) rem = sub_mag(rem, mul_small(b.mag_, digit));
  }

  BigInt q, r;
  trim(quot);
  if (!quot.empty()) {
    q.sign_ = a.sign_ * b.sign_;
    q.mag_ = std::move(quot);
  }
  if (!rem.empty()) {
    r.sign_ = a.sign_;
    r.mag_ = std::move(rem);
  }
  return {q, r};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::fits_int64() const {
  static const BigInt kMin(std::numeric_limits<long long>::min());
  static const BigInt kMax(std::numeric_limits<long long>::max());
  return kMin <= *this && *this <= kMax;
}

long long BigInt::to_int64() const {
  if (!fits_int64())
    throw CalcError("IntegerOverflow", "value " + to_string() + " exceeds 64-bit range");
  long long r = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) r = r * kBase + mag_[i];
  return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string s = sign_ < 0 ? "-" : "";
  s += std::to_string(mag_.back());
  for (std::size_t i = mag_.size() - 1; i-- > 0;) {
    std::string limb = std::to_string(mag_[i]);
    s += std::string(9 - limb.size(), '0') + limb;
  }
  return s;
}

}  // namespace ihcalc
