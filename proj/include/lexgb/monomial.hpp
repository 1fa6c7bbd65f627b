#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lexgb {

/// Power product x^a y^b z^c.
///
/// The ordering is lex(x,y,z) with x < y < z, so the z exponent is the most
/// significant key, then y, then x.
struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  static constexpr Monomial one() { return {}; }

  constexpr std::uint32_t degree() const { return x + y + z; }
  constexpr bool is_one() const { return x == 0 && y == 0 && z == 0; }

  /// True when this monomial involves only x (so it lies in k[x]).
  constexpr bool in_x() const { return y == 0 && z == 0; }
  /// True when this monomial lies in k[x,y].
  constexpr bool in_xy() const { return z == 0; }

  constexpr bool divides(const Monomial& m) const {
    return x <= m.x && y <= m.y && z <= m.z;
  }

  /// m / *this; requires divides(m).
  constexpr Monomial quotient_of(const Monomial& m) const {
    return {m.x - x, m.y - y, m.z - z};
  }

  friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }

  friend constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
  }

  friend constexpr bool coprime(const Monomial& a, const Monomial& b) {
    return std::min(a.x, b.x) == 0 && std::min(a.y, b.y) == 0 && std::min(a.z, b.z) == 0;
  }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }

  std::string to_string() const;
};

/// Three-way lex comparison under x < y < z.
constexpr std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  return a <=> b;
}

inline std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  auto put = [&out](char var, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  put('x', x);
  put('y', y);
  put('z', z);
  return out;
}

}  // namespace lexgb

template <>
struct std::hash<lexgb::Monomial> {
  std::size_t operator()(const lexgb::Monomial& m) const noexcept {
    std::size_t h = m.x;
    h = h * 1000003u ^ m.y;
    h = h * 1000003u ^ m.z;
    return h;
  }
};
