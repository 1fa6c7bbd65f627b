#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lexgb/groebner.hpp"
#include "lexgb/instances.hpp"
#include "lexgb/parse.hpp"

namespace testutil {

inline const lexgb::PrimeField& f101() {
  static const lexgb::PrimeField field(101);
  return field;
}

inline lexgb::FpPolynomial P(const std::string& text, const lexgb::PrimeField& field = f101()) {
  return lexgb::parse_polynomial(text, field);
}

inline std::vector<lexgb::FpPolynomial> polys(std::initializer_list<const char*> texts,
                                              const lexgb::PrimeField& field = f101()) {
  std::vector<lexgb::FpPolynomial> out;
  for (const char* t : texts) out.push_back(P(t, field));
  return out;
}

/// Takes `texts` as an already reduced basis, without recomputing it.
inline lexgb::FpBasis basis(std::initializer_list<const char*> texts, bool radical = false,
                            const lexgb::PrimeField& field = f101()) {
  return lexgb::FpBasis::adopt(polys(texts, field), radical);
}

inline std::vector<std::string> texts(const lexgb::FpBasis& g) {
  std::vector<std::string> out;
  for (const auto& f : g.elements()) out.push_back(lexgb::to_string(f));
  return out;
}

inline lexgb::PointSet worked_points() {
  return {101, {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}}, 0};
}

// Small deterministic generator for property tests (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

 private:
  std::uint64_t state_;
};

inline lexgb::FpPolynomial random_polynomial(Rng& rng, const lexgb::PrimeField& field,
                                             std::uint32_t max_terms, std::uint32_t max_exp) {
  std::vector<lexgb::Term<lexgb::Fp>> terms;
  std::uint32_t n = rng.below(max_terms + 1);
  for (std::uint32_t k = 0; k < n; ++k) {
    lexgb::Monomial m{rng.below(max_exp + 1), rng.below(max_exp + 1), rng.below(max_exp + 1)};
    terms.push_back({m, field.make(rng.below(field.modulus()))});
  }
  return lexgb::FpPolynomial::from_terms(std::move(terms));
}

}  // namespace testutil
