#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lexgb/error.hpp"
#include "lexgb/field.hpp"
#include "lexgb/monomial.hpp"
#include "lexgb/rational.hpp"

namespace lexgb {

/// Exact coefficient domain: a field whose elements know their own unit.
template <class K>
concept Coefficient = std::regular<K> && requires(K a, K b) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<K>;
  { K::one_like(a) } -> std::same_as<K>;
  { K::zero_like(a) } -> std::same_as<K>;
  { a.to_string() } -> std::same_as<std::string>;
};

inline std::string signed_text(const Fp& c) { return std::to_string(c.signed_value()); }
inline std::string signed_text(const Rational& c) { return c.to_string(); }

template <Coefficient K>
struct Term {
  Monomial monomial;
  K coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exponents of the leading monomial, lm(f) = x^alpha_x y^alpha_y z^alpha_z.
struct AlphaExponents {
  std::uint32_t alpha_x = 0;
  std::uint32_t alpha_y = 0;
  std::uint32_t alpha_z = 0;

  friend bool operator==(const AlphaExponents&, const AlphaExponents&) = default;
};

template <Coefficient K>
class Polynomial;

/// Leading data of p seen in k[x][y,z] (lc1, lm1) and in k[x,y][z] (lc2, lm2).
/// Both factorizations reproduce the leading term: lt(p) = lc1*lm1 = lc2*lm2
/// at the level of leading terms.
template <Coefficient K>
struct StagedLeading {
  Polynomial<K> lc1;  // in k[x]
  Monomial lm1;       // y^b z^c
  Polynomial<K> lc2;  // in k[x,y]
  Monomial lm2;       // z^c
};

/// Sparse polynomial in k[x,y,z]; terms strictly descending in lex order with
/// no zero coefficients. The zero polynomial has no terms.
template <Coefficient K>
class Polynomial {
 public:
  using Coeff = K;
  using TermType = Term<K>;

  Polynomial() = default;

  /// Builds the canonical form of an arbitrary term list.
  static Polynomial from_terms(std::vector<TermType> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const TermType& a, const TermType& b) { return a.monomial > b.monomial; });
    Polynomial out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
        out.terms_.back().coeff += t.coeff;
        if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  static Polynomial term(const K& c, const Monomial& m) {
    Polynomial out;
    if (!c.is_zero()) out.terms_.push_back({m, c});
    return out;
  }
  static Polynomial constant(const K& c) { return term(c, Monomial::one()); }

  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

  bool in_x() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const TermType& t) { return t.monomial.in_x(); });
  }
  bool in_xy() const {
    // Descending lex order puts any z-term first.
    return terms_.empty() || terms_.front().monomial.in_xy();
  }
  bool involves_x() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const TermType& t) { return t.monomial.x > 0; });
  }

  const Monomial& lm() const { return leading("leading monomial").monomial; }
  const K& lc() const { return leading("leading coefficient").coeff; }
  const TermType& lt() const { return leading("leading term"); }

  AlphaExponents alpha() const {
    const Monomial& m = lm();
    return {m.x, m.y, m.z};
  }

  StagedLeading<K> staged_leading() const {
    const Monomial& head = leading("staged leading data").monomial;
    StagedLeading<K> s;
    s.lm1 = {0, head.y, head.z};
    s.lm2 = {0, 0, head.z};
    std::vector<TermType> c1, c2;
    for (const auto& t : terms_) {
      if (t.monomial.z != head.z) break;
      c2.push_back({{t.monomial.x, t.monomial.y, 0}, t.coeff});
      if (t.monomial.y == head.y) c1.push_back({{t.monomial.x, 0, 0}, t.coeff});
    }
    // Sorted prefixes of a sorted list stay sorted and duplicate free.
    s.lc1.terms_ = std::move(c1);
    s.lc2.terms_ = std::move(c2);
    return s;
  }

  /// Largest z exponent present; 0 for the zero polynomial.
  std::uint32_t degree_z() const { return terms_.empty() ? 0 : terms_.front().monomial.z; }
  std::uint32_t degree_x() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.x);
    return d;
  }

  /// The k[x] coefficient attached to the (y,z)-monomial `yz` (whose x
  /// exponent is ignored).
  Polynomial coefficient_in_x(const Monomial& yz) const {
    Polynomial out;
    for (const auto& t : terms_) {
      if (t.monomial.y == yz.y && t.monomial.z == yz.z) {
        out.terms_.push_back({{t.monomial.x, 0, 0}, t.coeff});
      }
    }
    return out;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return *this * lc().inverse();
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const K& c) {
    if (c.is_zero()) return {};
    Polynomial out = a;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend Polynomial operator*(const K& c, const Polynomial& a) { return a * c; }

  /// a * c * m, keeping the order (multiplying by a monomial is monotone).
  Polynomial mul_term(const K& c, const Monomial& m) const {
    if (c.is_zero()) return {};
    Polynomial out = *this;
    for (auto& t : out.terms_) {
      t.monomial = t.monomial * m;
      t.coeff *= c;
    }
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    Polynomial acc;
    for (const auto& t : small.terms_) acc += big.mul_term(t.coeff, t.monomial);
    return acc;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// p^e; `one` supplies the unit when the base is zero and e = 0.
  Polynomial pow(std::uint32_t e, const K& one) const {
    Polynomial base = *this;
    Polynomial acc = constant(one);
    while (e > 0) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return acc;
  }

  K evaluate(const K& x, const K& y, const K& z) const {
    K acc = K::zero_like(x);
    for (const auto& t : terms_) {
      acc += t.coeff * power(x, t.monomial.x) * power(y, t.monomial.y) *
             power(z, t.monomial.z);
    }
    return acc;
  }

  /// Substitutes x = a; the result lies in k[y,z].
  Polynomial specialize_x(const K& a) const {
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      out.push_back({{0, t.monomial.y, t.monomial.z}, t.coeff * power(a, t.monomial.x)});
    }
    return from_terms(std::move(out));
  }

  /// Substitutes x = a, y = b; the result lies in k[z].
  Polynomial specialize_xy(const K& a, const K& b) const {
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      out.push_back({{0, 0, t.monomial.z},
                     t.coeff * power(a, t.monomial.x) * power(b, t.monomial.y)});
    }
    return from_terms(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  const TermType& leading(const char* what) const {
    if (terms_.empty()) throw ZeroPolynomial(what);
    return terms_.front();
  }

  static K power(const K& base, std::uint32_t e) {
    K acc = K::one_like(base);
    K b = base;
    while (e > 0) {
      if (e & 1) acc *= b;
      e >>= 1;
      if (e > 0) b *= b;
    }
    return acc;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->monomial > j->monomial)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->monomial > i->monomial) {
        out.terms_.push_back(subtract ? TermType{j->monomial, -j->coeff} : *j);
        ++j;
      } else {
        K c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!c.is_zero()) out.terms_.push_back({i->monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<TermType> terms_;
};

using FpPolynomial = Polynomial<Fp>;
using QPolynomial = Polynomial<Rational>;

template <Coefficient K>
std::string to_string(const Polynomial<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = signed_text(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c;
    } else if (c == "1") {
      out += t.monomial.to_string();
    } else {
      out += c + '*' + t.monomial.to_string();
    }
  }
  return out;
}

template <Coefficient K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
  return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << m.to_string();
}

template <Coefficient K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

/// Multivariate division of p by an ordered list of divisors under lex.
///
/// Returns quotients and remainder with p = sum q_i d_i + r, where no monomial
/// of r is divisible by any lm(d_i) and lm(q_i d_i) <= lm(p) whenever q_i is
/// nonzero. When several heads divide the current term the lowest index wins.
template <Coefficient K>
DivisionResult<K> divide(const Polynomial<K>& p, std::span<const Polynomial<K>> divisors) {
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  }
  DivisionResult<K> result;
  result.quotients.resize(divisors.size());
  std::vector<Term<K>> rem;
  std::vector<std::vector<Term<K>>> quot(divisors.size());
  Polynomial<K> h = p;
  while (!h.is_zero()) {
    const Term<K> head = h.lt();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& d = divisors[i];
      if (d.lm().divides(head.monomial)) {
        Monomial m = d.lm().quotient_of(head.monomial);
        K c = head.coeff / d.lc();
        quot[i].push_back({m, c});
        h -= d.mul_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(head);
      h -= Polynomial<K>::term(head.coeff, head.monomial);
    }
  }
  // Quotient terms and remainder terms are produced in descending order.
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    result.quotients[i] = Polynomial<K>::from_terms(std::move(quot[i]));
  }
  result.remainder = Polynomial<K>::from_terms(std::move(rem));
  return result;
}

template <Coefficient K>
DivisionResult<K> divide(const Polynomial<K>& p, const std::vector<Polynomial<K>>& divisors) {
  return divide(p, std::span<const Polynomial<K>>(divisors));
}

/// Exact division in k[x]: the quotient e/d, or nullopt when d does not
/// divide e. Both arguments must lie in k[x].
template <Coefficient K>
std::optional<Polynomial<K>> univariate_divides(const Polynomial<K>& d, const Polynomial<K>& e) {
  if (d.is_zero()) throw DivisionByZero();
  if (!d.in_x() || !e.in_x()) throw InvalidArgument("univariate_divides expects k[x] inputs");
  std::vector<Polynomial<K>> divisor{d};
  auto r = divide(e, divisor);
  if (!r.remainder.is_zero()) return std::nullopt;
  return std::move(r.quotients.front());
}

/// Failure witness of content_divide: the (y,z)-monomial whose k[x]
/// coefficient is not a multiple of the divisor.
template <Coefficient K>
struct NotDivisible {
  Monomial yz;
  Polynomial<K> coefficient;
};

template <Coefficient K>
using ContentDivision = std::variant<Polynomial<K>, NotDivisible<K>>;

/// Divides p by d in k[x], treating p as a polynomial in (y,z) with
/// coefficients in k[x]. Divisors must be nonzero and lie in k[x]. Also
/// serves for lc2 in k[x,y], whose (y,z)-grouping is by y alone.
template <Coefficient K>
ContentDivision<K> content_divide(const Polynomial<K>& d, const Polynomial<K>& p) {
  if (d.is_zero()) throw DivisionByZero();
  if (!d.in_x()) throw InvalidArgument("content_divide expects a divisor in k[x]");
  std::vector<Term<K>> out;
  std::vector<Monomial> seen;
  for (const auto& t : p.terms()) {
    Monomial yz{0, t.monomial.y, t.monomial.z};
    if (!seen.empty() && seen.back() == yz) continue;
    seen.push_back(yz);
    Polynomial<K> coeff = p.coefficient_in_x(yz);
    auto q = univariate_divides(d, coeff);
    if (!q) return NotDivisible<K>{yz, std::move(coeff)};
    for (const auto& qt : q->terms()) out.push_back({qt.monomial * yz, qt.coeff});
  }
  return Polynomial<K>::from_terms(std::move(out));
}

}  // namespace lexgb
