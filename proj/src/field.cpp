#include "lexgb/field.hpp"

#include <cctype>

namespace lexgb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc = one_like(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw DivisionByZero();
  // Extended Euclid on (value, p).
  std::int64_t r0 = modulus_, r1 = value_;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += modulus_;
  return Fp(static_cast<std::uint32_t>(t0), modulus_);
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p > Fp::kMaxModulus) {
    throw InvalidArgument("modulus " + std::to_string(p) + " exceeds 2^31-1");
  }
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

Fp PrimeField::parse(const std::string& digits) const {
  std::size_t i = 0;
  bool negative = false;
  if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) {
    negative = digits[i] == '-';
    ++i;
  }
  if (i == digits.size()) throw ParseError("expected integer", i);
  std::uint64_t r = 0;
  for (; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("expected digit", i);
    }
    r = (r * 10 + static_cast<std::uint64_t>(digits[i] - '0')) % p_;
  }
  Fp v(static_cast<std::uint32_t>(r), p_);
  return negative ? -v : v;
}

}  // namespace lexgb
