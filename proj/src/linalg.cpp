#include "strata/linalg.hpp"

#include <cctype>

namespace strata {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw Error("InvalidRing", "F_p needs a prime p < 2^31, got " + std::to_string(p));
  return {RingKind::PrimeField, p};
}

CoefficientRing CoefficientRing::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Z" || s == "ZZ") return integers();
  if (s == "Q" || s == "QQ") return rationals();
  std::string digits;
  for (const char* prefix : {"F_", "F", "Z/", "GF(", "Fp"}) {
    std::string pre(prefix);
    if (s.rfind(pre, 0) == 0) {
      digits = s.substr(pre.size());
      if (!digits.empty() && digits.back() == ')') digits.pop_back();
      break;
    }
  }
  if (digits.empty() || digits.size() > 10 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw Error("InvalidRing", "unknown coefficient ring '" + raw + "'");
  return prime_field(static_cast<std::uint32_t>(std::stoull(digits)));
}

std::string CoefficientRing::name() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(p);
  }
  return "?";
}

PrimeFieldOps::T PrimeFieldOps::inv(T a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p;
  return static_cast<T>(t0);
}

}  // namespace strata
