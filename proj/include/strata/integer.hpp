#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer: int64 fast path, promoted to BigInt when an operation
// overflows and demoted again whenever the value fits.
class Integer {
 public:
  Integer() = default;
  Integer(int v) : small_(v) {}
  Integer(long v) : small_(v) {}
  Integer(long long v) : small_(v) {}
  explicit Integer(const BigInt& v);

  bool is_small() const { return !big_; }
  std::int64_t small() const { return small_; }
  BigInt big() const;

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  bool is_unit() const { return !big_ && (small_ == 1 || small_ == -1); }
  int sign() const;
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;

  // residue in [0, m)
  std::uint32_t mod(std::uint32_t m) const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // truncating division, as for built-in integers
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  std::string str() const;

 private:
  void normalize(BigInt v);

  std::int64_t small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
// floor division (rounds toward -inf)
Integer floor_div(const Integer& a, const Integer& b);

// g = gcd(a, b) = s*a + t*b with g >= 0
struct ExtGcd {
  Integer g, s, t;
};
ExtGcd ext_gcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace strata
