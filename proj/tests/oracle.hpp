#pragma once

// Independent reference computations for tests. Nothing here calls into the
// engine's arithmetic: coefficients are raw integers mod p and polynomials
// are dense maps, so agreement with the engine is meaningful.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lexgb/groebner.hpp"
#include "lexgb/instances.hpp"

namespace oracle {

using Exp = std::array<std::uint32_t, 3>;
using Dense = std::map<Exp, std::int64_t>;  // exponent -> residue in [0, p)

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t pow_mod(std::int64_t b, std::uint32_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  for (std::uint32_t k = 0; k < e; ++k) r = r * mod(b, p) % p;
  return r;
}

/// Multiplicative inverse by scanning all residues.
inline std::int64_t inverse_by_scan(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b) {
    if (mod(a * b, p) == 1) return b;
  }
  return -1;
}

inline Dense dense(const lexgb::FpPolynomial& f) {
  Dense d;
  for (const auto& t : f.terms()) d[{t.monomial.x, t.monomial.y, t.monomial.z}] = t.coeff.value();
  return d;
}

inline void accumulate(Dense& acc, const Dense& f, std::int64_t p) {
  for (const auto& [e, c] : f) {
    acc[e] = mod(acc[e] + c, p);
    if (acc[e] == 0) acc.erase(e);
  }
}

inline Dense multiply(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out[e] = mod(out[e] + ca * cb, p);
      if (out[e] == 0) out.erase(e);
    }
  }
  return out;
}

inline std::int64_t evaluate(const lexgb::FpPolynomial& f, const lexgb::Point& pt,
                             std::int64_t p) {
  std::int64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::int64_t v = t.coeff.value();
    v = v * pow_mod(pt[0], t.monomial.x, p) % p;
    v = v * pow_mod(pt[1], t.monomial.y, p) % p;
    v = v * pow_mod(pt[2], t.monomial.z, p) % p;
    acc = (acc + v) % p;
  }
  return acc;
}

/// Roots of a polynomial in one variable by plugging every residue into
/// every variable slot.
inline std::vector<std::int64_t> roots_by_scan(const lexgb::FpPolynomial& f, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a < p; ++a) {
    lexgb::Point pt{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(a)};
    if (evaluate(f, pt, p) == 0) out.push_back(a);
  }
  return out;
}

/// Number of monomials in a box large enough to contain the staircase that
/// no leading monomial divides. Returns -1 if the box is not closed (some
/// variable has no pure power among the heads).
inline long staircase_count(const std::vector<lexgb::Monomial>& heads) {
  std::uint32_t bx = 0, by = 0, bz = 0;
  for (const auto& m : heads) {
    if (m.y == 0 && m.z == 0 && m.x > 0) bx = bx == 0 ? m.x : std::min(bx, m.x);
    if (m.x == 0 && m.z == 0 && m.y > 0) by = by == 0 ? m.y : std::min(by, m.y);
    if (m.x == 0 && m.y == 0 && m.z > 0) bz = bz == 0 ? m.z : std::min(bz, m.z);
  }
  if (bx == 0 || by == 0 || bz == 0) return -1;
  long count = 0;
  for (std::uint32_t a = 0; a < bx; ++a) {
    for (std::uint32_t b = 0; b < by; ++b) {
      for (std::uint32_t c = 0; c < bz; ++c) {
        bool divisible = false;
        for (const auto& m : heads) {
          divisible = divisible || (m.x <= a && m.y <= b && m.z <= c);
        }
        if (!divisible) ++count;
      }
    }
  }
  return count;
}

/// Certificate that `g` is a Gröbner basis of the vanishing ideal of `pts`
/// without using S-polynomials: every element vanishes on every point (so
/// <lm(g)> lies inside the leading ideal of I(P)) and the staircase of
/// <lm(g)> has exactly |P| monomials (so the two leading ideals coincide).
inline bool certifies_vanishing_basis(const lexgb::FpBasis& g, const lexgb::PointSet& pts) {
  std::vector<lexgb::Monomial> heads;
  for (const auto& f : g.elements()) {
    for (const auto& pt : pts.points) {
      if (evaluate(f, pt, pts.p) != 0) return false;
    }
    heads.push_back(f.lm());
  }
  return staircase_count(heads) == static_cast<long>(pts.points.size());
}

/// Long division of dense univariate coefficient vectors (index = degree).
/// Returns the remainder.
inline std::vector<std::int64_t> univariate_remainder(std::vector<std::int64_t> e,
                                                      const std::vector<std::int64_t>& d,
                                                      std::int64_t p) {
  const std::int64_t lead_inv = inverse_by_scan(d.back(), p);
  while (e.size() >= d.size()) {
    std::int64_t c = e.back() * lead_inv % p;
    std::size_t shift = e.size() - d.size();
    for (std::size_t k = 0; k < d.size(); ++k) e[shift + k] = mod(e[shift + k] - c * d[k], p);
    while (!e.empty() && e.back() == 0) e.pop_back();
  }
  return e;
}

/// Lex-largest exponent of a nonempty dense polynomial (z, then y, then x).
inline Exp dense_head(const Dense& d) {
  Exp best = d.begin()->first;
  for (const auto& [e, c] : d) {
    if (std::tie(e[2], e[1], e[0]) > std::tie(best[2], best[1], best[0])) best = e;
  }
  return best;
}

/// Checks the division contract for `divide(p, divisors)`: exact
/// reconstruction, no remainder monomial divisible by a divisor head, and
/// lm(q_i d_i) not above lm(p). Returns an empty string or a reason.
inline std::string division_contract_violation(const lexgb::FpPolynomial& p,
                                               const std::vector<lexgb::FpPolynomial>& divisors,
                                               const lexgb::DivisionResult<lexgb::Fp>& result,
                                               std::int64_t modulus) {
  if (result.quotients.size() != divisors.size()) return "wrong number of quotients";
  Dense sum = dense(result.remainder);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    Dense prod = multiply(dense(result.quotients[i]), dense(divisors[i]), modulus);
    if (!prod.empty() && !dense(p).empty()) {
      Exp hq = dense_head(prod), hp = dense_head(dense(p));
      if (std::tie(hq[2], hq[1], hq[0]) > std::tie(hp[2], hp[1], hp[0])) return "lm(q_i d_i) above lm(p)";
    }
    accumulate(sum, prod, modulus);
  }
  if (sum != dense(p)) return "p != sum q_i d_i + r";
  for (const auto& [e, c] : dense(result.remainder)) {
    for (const auto& d : divisors) {
      Exp h = dense_head(dense(d));
      if (h[0] <= e[0] && h[1] <= e[1] && h[2] <= e[2]) return "remainder term divisible by a head";
    }
  }
  return {};
}

}  // namespace oracle
