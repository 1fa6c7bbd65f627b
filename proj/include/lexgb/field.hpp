#pragma once

#include <cstdint>
#include <string>

#include "lexgb/error.hpp"

namespace lexgb {

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p. The modulus travels with the value so
/// that elements are self-contained and can be shared between threads;
/// mixing moduli in one operation is a programming error and throws.
class Fp {
 public:
  /// Largest supported modulus; products of two residues fit in 64 bits.
  static constexpr std::uint32_t kMaxModulus = 0x7fffffffu;

  Fp() = default;

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  static Fp one_like(const Fp& a) { return Fp(1, a.modulus_); }
  static Fp zero_like(const Fp& a) { return Fp(0, a.modulus_); }

  Fp operator-() const { return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  Fp& operator+=(const Fp& o) {
    check(o);
    std::uint32_t s = value_ + o.value_;
    if (s >= modulus_) s -= modulus_;
    value_ = s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ %
                                        modulus_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  /// Canonical residue in [0, p).
  std::string to_string() const { return std::to_string(value_); }
  /// Symmetric representative in (-p/2, p/2], used for readable output.
  std::int64_t signed_value() const {
    return value_ > modulus_ / 2 ? static_cast<std::int64_t>(value_) - modulus_
                                 : static_cast<std::int64_t>(value_);
  }

 private:
  friend class PrimeField;
  Fp(std::uint32_t v, std::uint32_t p) : value_(v), modulus_(p) {}

  void check(const Fp& o) const {
    if (o.modulus_ != modulus_) throw InvalidArgument("mixed moduli in field operation");
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Factory for elements of F_p. The modulus is validated once here.
class PrimeField {
 public:
  using Element = Fp;
  static constexpr std::uint32_t kDefaultModulus = 101;

  explicit PrimeField(std::uint64_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Fp make(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r), p_);
  }
  /// Parses a decimal integer (optionally signed).
  Fp parse(const std::string& digits) const;

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace lexgb
