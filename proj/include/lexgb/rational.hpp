#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexgb/error.hpp"

namespace lexgb {

/// Exact rational number, always in lowest terms with a positive
/// denominator. Intended for cross-checking small instances.
class Rational {
 public:
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(std::int64_t n) : v_(n) {}
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    v_ = Value(n, d);
  }
  explicit Rational(Value v) : v_(std::move(v)) {}

  const Value& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(Value(1) / v_);
  }

  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational zero_like(const Rational&) { return Rational(0); }

  Rational operator-() const { return Rational(Value(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.str(); }

  bool is_negative() const { return v_ < 0; }

 private:
  Value v_;
};

/// Factory mirroring PrimeField so that parsing code is shared.
class RationalField {
 public:
  using Element = Rational;

  Rational make(std::int64_t v) const { return Rational(v); }
  Rational parse(const std::string& text) const {
    try {
      return Rational(Rational::Value(text));
    } catch (const std::exception&) {
      throw ParseError("invalid rational '" + text + "'");
    }
  }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace lexgb
