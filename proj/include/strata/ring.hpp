#pragma once

#include "strata/integer.hpp"

#include <cstdint>
#include <string>

namespace strata {

enum class RingKind { Integers, Rationals, PrimeField };

// Coefficient ring selector: Z, Q or F_p with p prime, p < 2^31.
struct CoefficientRing {
  RingKind kind = RingKind::Integers;
  std::uint32_t p = 0;

  static CoefficientRing integers() { return {RingKind::Integers, 0}; }
  static CoefficientRing rationals() { return {RingKind::Rationals, 0}; }
  static CoefficientRing prime_field(std::uint32_t p);
  // accepts "Z", "Q", "F2", "F_3", "Z/5", "GF(7)"
  static CoefficientRing parse(const std::string& s);

  bool is_field() const { return kind != RingKind::Integers; }
  std::string name() const;
  bool operator==(const CoefficientRing&) const = default;
};

bool is_prime(std::uint32_t p);

struct IntegerOps {
  using T = Integer;
  static constexpr bool kField = false;

  T zero() const { return T(0); }
  T one() const { return T(1); }
  T from(long long v) const { return T(v); }
  T from(const Integer& v) const { return v; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  bool is_zero(const T& a) const { return a.is_zero(); }
  bool is_unit(const T& a) const { return a.is_unit(); }
  // inverse of a unit
  T inv(const T& a) const { return a; }
  // Euclidean quotient: |a - q*b| < |b|
  T quotient(const T& a, const T& b) const { return a / b; }
  bool less_norm(const T& a, const T& b) const { return abs(a) < abs(b); }
  bool divides(const T& a, const T& b) const { return (b % a).is_zero(); }
  // associate with nonnegative sign
  T normalize(const T& a) const { return abs(a); }
  Integer lift(const T& a) const { return a; }
};

struct PrimeFieldOps {
  using T = std::uint32_t;
  static constexpr bool kField = true;
  std::uint32_t p = 2;

  T zero() const { return 0; }
  T one() const { return 1; }
  T from(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<T>(r < 0 ? r + p : r);
  }
  T from(const Integer& v) const { return v.mod(p); }
  T add(T a, T b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<T>(s >= p ? s - p : s);
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + (p - b); }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t(a) * b % p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  bool is_zero(T a) const { return a == 0; }
  bool is_unit(T a) const { return a != 0; }
  T inv(T a) const;
  T quotient(T a, T b) const { return mul(a, inv(b)); }
  bool less_norm(T, T) const { return false; }
  bool divides(T a, T) const { return a != 0; }
  T normalize(T a) const { return a == 0 ? 0 : 1; }
  // symmetric representative
  Integer lift(T a) const { return a > p / 2 ? Integer(static_cast<long long>(a) - p) : Integer(static_cast<long long>(a)); }
};

}  // namespace strata
