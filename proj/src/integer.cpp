#include "strata/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace strata {

Integer::Integer(const BigInt& v) { normalize(v); }

BigInt Integer::big() const { return big_ ? *big_ : BigInt(small_); }

void Integer::normalize(BigInt v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    small_ = static_cast<std::int64_t>(v);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_shared<const BigInt>(std::move(v));
  }
}

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

std::uint32_t Integer::mod(std::uint32_t m) const {
  if (!big_) {
    std::int64_t r = small_ % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
  }
  BigInt r = *big_ % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(BigInt(-big()));
}

Integer& Integer::operator+=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  normalize(big() + o.big());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  normalize(big() - o.big());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  normalize(big() * o.big());
  return *this;
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1))
    return Integer(a.small_ / b.small_);
  return Integer(BigInt(a.big() / b.big()));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  return Integer(BigInt(a.big() % b.big()));
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (!a.big_ || !b.big_) return false;  // normalized: a big value never fits
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  BigInt x = a.big(), y = b.big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Integer::str() const { return big_ ? big_->str() : std::to_string(small_); }

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small() != std::numeric_limits<std::int64_t>::min() &&
      b.small() != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small() < 0 ? -a.small() : a.small();
    std::int64_t y = b.small() < 0 ? -b.small() : b.small();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  return Integer(BigInt(boost::multiprecision::gcd(a.big(), b.big())));
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Integer s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Integer t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.sign() < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

}  // namespace strata
