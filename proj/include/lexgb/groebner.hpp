#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexgb/polynomial.hpp"

namespace lexgb {

/// An ordered lex basis g_1 < ... < g_s (ascending leading monomials) with
/// cached leading exponents. Instances built through buchberger() or
/// vanishing_ideal() are reduced, minimal and monic; adopt() only sorts, so
/// externally supplied bases should go through validate_basis().
template <Coefficient K>
class GroebnerBasis {
 public:
  using Poly = Polynomial<K>;

  GroebnerBasis() = default;

  /// Takes ownership of `elements`, sorting them by leading monomial. Zero
  /// polynomials are rejected.
  static GroebnerBasis adopt(std::vector<Poly> elements, bool radical_by_construction = false) {
    for (const auto& g : elements) {
      if (g.is_zero()) throw InvalidArgument("basis element is the zero polynomial");
    }
    std::stable_sort(elements.begin(), elements.end(),
                     [](const Poly& a, const Poly& b) { return a.lm() < b.lm(); });
    GroebnerBasis gb;
    gb.elements_ = std::move(elements);
    gb.radical_ = radical_by_construction;
    gb.unit_ = gb.elements_.size() == 1 && gb.elements_.front().is_constant();
    for (std::size_t i = 0; i < gb.elements_.size(); ++i) {
      const auto& g = gb.elements_[i];
      gb.alpha_.push_back(g.alpha());
      const Monomial& m = g.lm();
      if (!gb.ell2_ && m.x == 0 && m.z == 0 && m.y > 0) gb.ell2_ = i;
    }
    return gb;
  }

  const std::vector<Poly>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Poly& operator[](std::size_t i) const { return elements_[i]; }
  const Poly& front() const { return elements_.front(); }
  const Poly& back() const { return elements_.back(); }

  /// Cached exponents of lm(g_i), 0-based.
  const AlphaExponents& alpha(std::size_t i) const { return alpha_[i]; }

  /// 0-based position of the element whose leading monomial is a pure power
  /// of y, if any.
  std::optional<std::size_t> ell2() const { return ell2_; }

  bool unit_ideal() const { return unit_; }
  bool radical_by_construction() const { return radical_; }
  void set_radical_by_construction(bool v) { radical_ = v; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_ && a.radical_ == b.radical_;
  }

 private:
  std::vector<Poly> elements_;
  std::vector<AlphaExponents> alpha_;
  std::optional<std::size_t> ell2_;
  bool unit_ = false;
  bool radical_ = false;
};

using FpBasis = GroebnerBasis<Fp>;
using QBasis = GroebnerBasis<Rational>;

/// lcm/lt(f) * f - lcm/lt(g) * g.
template <Coefficient K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Monomial l = lcm(f.lm(), g.lm());
  return f.mul_term(f.lc().inverse(), f.lm().quotient_of(l)) -
         g.mul_term(g.lc().inverse(), g.lm().quotient_of(l));
}

template <Coefficient K>
Polynomial<K> normal_form(const Polynomial<K>& p, std::span<const Polynomial<K>> divisors) {
  return divide(p, divisors).remainder;
}

template <Coefficient K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& g) {
  return normal_form(p, std::span<const Polynomial<K>>(g.elements()));
}

/// Buchberger criterion: every pairwise S-polynomial reduces to zero modulo
/// the list itself. No pair is skipped.
template <Coefficient K>
bool is_groebner_basis(std::span<const Polynomial<K>> f) {
  for (const auto& p : f) {
    if (p.is_zero()) throw InvalidArgument("is_groebner_basis: zero element");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!normal_form(s_polynomial(f[i], f[j]), f).is_zero()) return false;
    }
  }
  return true;
}

template <Coefficient K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& f) {
  return is_groebner_basis(std::span<const Polynomial<K>>(f));
}

struct BuchbergerOptions {
  /// Skip pair (i,j) when some g_k with k != i,j has a head dividing
  /// lcm(i,j) and pairs (i,k), (j,k) are already resolved.
  bool chain_criterion = true;
};

namespace detail {

struct CriticalPair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const CriticalPair& a, const CriticalPair& b) {
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

/// Sorts ascending, drops redundant heads, reduces tails and makes monic.
template <Coefficient K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> g) {
  std::stable_sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.lm() < b.lm(); });
  std::vector<Polynomial<K>> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&p](const auto& q) { return q.lm().divides(p.lm()); });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial<K>> reduced;
  reduced.reserve(minimal.size());
  for (const auto& p : minimal) {
    Polynomial<K> head = Polynomial<K>::term(p.lc(), p.lm());
    Polynomial<K> tail = normal_form(p - head, std::span<const Polynomial<K>>(minimal));
    reduced.push_back((head + tail).monic());
  }
  return reduced;
}

}  // namespace detail

/// Reduced monic lex Gröbner basis of the ideal generated by `generators`.
/// Pairs are processed by the normal strategy (smallest lcm first) with the
/// product criterion; the unit ideal yields the basis {1}.
template <Coefficient K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& generators,
                            BuchbergerOptions options = {}) {
  using Poly = Polynomial<K>;
  std::vector<Poly> g;
  for (const auto& f : generators) {
    if (!f.is_zero()) g.push_back(f.monic());
  }
  if (g.empty()) throw InvalidArgument("buchberger: all generators are zero");

  auto unit = [&g]() {
    return GroebnerBasis<K>::adopt({Poly::constant(K::one_like(g.front().lc()))});
  };
  for (const auto& f : g) {
    if (f.is_constant()) return unit();
  }

  std::set<detail::CriticalPair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;  // (min, max) of pending pairs
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.insert({lcm(g[i].lm(), g[j].lm()), i, j});
      open.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

  auto is_open = [&open](std::size_t a, std::size_t b) {
    return open.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    const detail::CriticalPair pair = *pending.begin();
    pending.erase(pending.begin());
    open.erase({pair.i, pair.j});

    if (coprime(g[pair.i].lm(), g[pair.j].lm())) continue;
    if (options.chain_criterion) {
      bool chained = false;
      for (std::size_t k = 0; k < g.size() && !chained; ++k) {
        if (k == pair.i || k == pair.j) continue;
        chained = g[k].lm().divides(pair.lcm) && !is_open(pair.i, k) && !is_open(pair.j, k);
      }
      if (chained) continue;
    }

    Poly r = normal_form(s_polynomial(g[pair.i], g[pair.j]), std::span<const Poly>(g));
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit();
    g.push_back(r.monic());
    add_pairs(g.size() - 1);
  }
  return GroebnerBasis<K>::adopt(detail::reduce_basis(std::move(g)));
}

/// Reasons why `g` fails to be a sorted, minimal, monic, reduced Gröbner
/// basis; empty when it is one.
template <Coefficient K>
std::vector<std::string> validate_basis(const GroebnerBasis<K>& g) {
  std::vector<std::string> issues;
  const auto& e = g.elements();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (!(e[i].lm() < e[i + 1].lm())) {
      issues.push_back("not strictly ascending at g" + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].lc().is_one()) issues.push_back("g" + std::to_string(i + 1) + " is not monic");
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      if (e[j].lm().divides(e[i].lm())) {
        issues.push_back("not minimal: lm(g" + std::to_string(j + 1) + ") divides lm(g" +
                         std::to_string(i + 1) + ")");
        continue;
      }
      for (const auto& t : e[i].terms()) {
        if (e[j].lm().divides(t.monomial)) {
          issues.push_back("not reduced: lm(g" + std::to_string(j + 1) + ") divides " +
                           t.monomial.to_string() + " in g" + std::to_string(i + 1));
          break;
        }
      }
    }
  }
  if (!is_groebner_basis(e)) issues.push_back("some S-polynomial does not reduce to zero");
  return issues;
}

struct StructureFacts {
  bool zero_dim = false;
  /// 0-based position of the pure y-power element.
  std::optional<std::size_t> ell2;
  /// z exponent of lm(g_s) when it is a pure power of z, else 0.
  std::uint32_t d_s = 0;
  /// Pure powers absent from the leading ideal (only when !zero_dim).
  std::vector<std::string> missing;
  /// Violations of the band structure or of the elimination property.
  std::vector<std::string> anomalies;
};

/// Checks the shape of a zero-dimensional lex basis: g_1 in k[x], a pure
/// power of y at position ell2, lm(g_s) a pure power of z, the bands
/// k[x,y]\k[x] strictly between and z-involving beyond ell2, and the prefix
/// up to ell2 being a Gröbner basis of the elimination ideal.
template <Coefficient K>
StructureFacts structure_facts(const GroebnerBasis<K>& g) {
  if (g.empty() || g.unit_ideal()) {
    throw InvalidArgument("structure_facts: basis is empty or the unit ideal");
  }
  StructureFacts f;
  const auto& e = g.elements();
  const Monomial& first = e.front().lm();
  const Monomial& last = e.back().lm();
  bool x_power = first.in_x() && first.x > 0 && e.front().in_x();
  bool z_power = last.x == 0 && last.y == 0 && last.z > 0;
  if (!x_power) f.missing.push_back("no pure power of x");
  if (!g.ell2()) f.missing.push_back("no pure power of y");
  if (!z_power) f.missing.push_back("no pure power of z");
  f.zero_dim = f.missing.empty();
  if (!f.zero_dim) return f;

  f.ell2 = g.ell2();
  f.d_s = last.z;
  const std::size_t l2 = *f.ell2;
  if (l2 == 0 || l2 + 1 >= e.size()) {
    f.anomalies.push_back("ell2 not strictly between 1 and s");
  }
  for (std::size_t i = 1; i < e.size(); ++i) {
    std::string name = "g" + std::to_string(i + 1);
    if (i < l2 && !(e[i].in_xy() && !e[i].in_x())) {
      f.anomalies.push_back(name + " should lie in k[x,y] \\ k[x]");
    } else if (i > l2 && e[i].in_xy()) {
      f.anomalies.push_back(name + " should involve z");
    }
  }
  if (!is_groebner_basis(std::span<const Polynomial<K>>(e.data(), l2 + 1))) {
    f.anomalies.push_back("prefix g1..g_ell2 is not a Groebner basis");
  }
  return f;
}

/// The prefix g_1..g_ell2, certified as a Gröbner basis of I ∩ k[x,y].
template <Coefficient K>
GroebnerBasis<K> elimination_basis(const GroebnerBasis<K>& g) {
  StructureFacts f = structure_facts(g);
  if (!f.zero_dim) throw NotZeroDimensional("elimination_basis: ideal is not zero-dimensional");
  std::vector<Polynomial<K>> prefix(g.elements().begin(),
                                    g.elements().begin() + static_cast<std::ptrdiff_t>(*f.ell2 + 1));
  if (!is_groebner_basis(prefix)) {
    throw Error("elimination prefix fails the Buchberger criterion");
  }
  return GroebnerBasis<K>::adopt(std::move(prefix), g.radical_by_construction());
}

/// Monomials divisible by no leading monomial of `g`, ascending.
template <Coefficient K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& g) {
  StructureFacts f = structure_facts(g);
  if (!f.zero_dim) {
    throw NotZeroDimensional("quotient is infinite-dimensional: " + f.missing.front());
  }
  const std::uint32_t dx = g.front().lm().x;
  const std::uint32_t dy = g[*f.ell2].lm().y;
  const std::uint32_t dz = f.d_s;
  std::vector<Monomial> out;
  for (std::uint32_t c = 0; c < dz; ++c) {
    for (std::uint32_t b = 0; b < dy; ++b) {
      for (std::uint32_t a = 0; a < dx; ++a) {
        Monomial m{a, b, c};
        bool covered = std::any_of(g.elements().begin(), g.elements().end(),
                                   [&m](const auto& p) { return p.lm().divides(m); });
        if (!covered) out.push_back(m);
      }
    }
  }
  return out;
}

/// dim_k k[x,y,z]/I, the number of standard monomials.
template <Coefficient K>
std::size_t quotient_dimension(const GroebnerBasis<K>& g) {
  return standard_monomials(g).size();
}

}  // namespace lexgb
