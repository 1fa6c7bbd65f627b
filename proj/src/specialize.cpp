#include "lexgb/specialize.hpp"

#include <algorithm>

#include "lexgb/structure.hpp"

namespace lexgb {

namespace {

struct Dense {
  char variable = 'x';
  std::vector<Fp> coeffs;  // coeffs[k] multiplies variable^k

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  Fp at(const Fp& v) const {
    Fp acc = Fp::zero_like(v);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  // Divides by (variable - r), assuming r is a root.
  void deflate(const Fp& r) {
    std::vector<Fp> q(coeffs.size() - 1, Fp::zero_like(r));
    Fp carry = Fp::zero_like(r);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) {
      carry = coeffs[k] + carry * r;
      q[k - 1] = carry;
    }
    coeffs = std::move(q);
  }
};

Dense to_dense(const FpPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("roots");
  Dense d;
  const Monomial& head = f.lm();
  if (head.z > 0) {
    d.variable = 'z';
  } else if (head.y > 0) {
    d.variable = 'y';
  }
  for (const auto& t : f.terms()) {
    const Monomial& m = t.monomial;
    int used = (m.x > 0) + (m.y > 0) + (m.z > 0);
    bool other = (d.variable != 'x' && m.x > 0) || (d.variable != 'y' && m.y > 0) ||
                 (d.variable != 'z' && m.z > 0);
    if (used > 1 || other) throw InvalidArgument("expected a univariate polynomial, got " + to_string(f));
  }
  std::uint32_t deg = d.variable == 'x' ? head.x : d.variable == 'y' ? head.y : head.z;
  d.coeffs.assign(deg + 1, Fp::zero_like(f.lc()));
  for (const auto& t : f.terms()) {
    d.coeffs[t.monomial.x + t.monomial.y + t.monomial.z] = t.coeff;
  }
  return d;
}

std::vector<Fp> scan_roots(const Dense& d, std::uint32_t p) {
  const PrimeField field(p);
  std::vector<Fp> roots;
  if (d.degree() == 0) return roots;
  for (std::uint32_t a = 0; a < p; ++a) {
    Fp v = field.make(a);
    if (d.at(v).is_zero()) roots.push_back(v);
  }
  return roots;
}

std::size_t split_defect(Dense d, const std::vector<Fp>& roots) {
  for (const auto& r : roots) {
    while (d.degree() > 0 && d.at(r).is_zero()) d.deflate(r);
  }
  return d.degree();
}

std::string fp_text(const Fp& v) { return std::to_string(v.value()); }

// The basis, images under x -> alpha, with zero images removed.
std::vector<FpPolynomial> nonzero_images(const FpBasis& g, const Fp& alpha) {
  std::vector<FpPolynomial> out;
  for (const auto& p : g.elements()) {
    auto img = p.specialize_x(alpha);
    if (!img.is_zero()) out.push_back(std::move(img));
  }
  return out;
}

}  // namespace

std::vector<Fp> roots_univariate(const FpPolynomial& f) {
  Dense d = to_dense(f);
  return scan_roots(d, f.lc().modulus());
}

std::size_t non_split_degree(const FpPolynomial& f) {
  Dense d = to_dense(f);
  return split_defect(d, scan_roots(d, f.lc().modulus()));
}

std::vector<std::pair<Fp, Fp>> elimination_solutions(const FpBasis& g) {
  auto l2 = g.ell2();
  if (!l2 || g.empty() || !g.front().in_x()) {
    throw NotZeroDimensional("elimination_solutions: basis is not zero-dimensional");
  }
  const PrimeField field(g.front().lc().modulus());
  std::vector<std::pair<Fp, Fp>> out;
  for (const auto& alpha : roots_univariate(g.front())) {
    for (std::uint32_t b = 0; b < field.modulus(); ++b) {
      Fp beta = field.make(b);
      bool zero = true;
      for (std::size_t i = 1; i <= *l2 && zero; ++i) {
        zero = g[i].evaluate(alpha, beta, beta).is_zero();
      }
      if (zero) out.emplace_back(alpha, beta);
    }
  }
  return out;
}

CheckReport check_specialization_stability(const FpBasis& g) {
  CheckReport r;
  r.name = check_names::kSpecializationStability;
  const auto roots = roots_univariate(g.front());
  if (non_split_degree(g.front()) > 0) r.note = "g1 does not split over F_p; F_p roots only";
  for (const auto& alpha : roots) {
    for (std::size_t i = 1; i < g.size(); ++i) {
      const auto image = g[i].specialize_x(alpha);
      const auto staged = g[i].staged_leading();
      const Fp lc1_at = staged.lc1.evaluate(alpha, alpha, alpha);
      if (image.is_zero()) continue;
      if (lc1_at.is_zero()) {
        r.witnesses.push_back({{i + 1}, "alpha=" + fp_text(alpha) + ": image " +
                                            to_string(image) + " nonzero while lc1 vanishes"});
        continue;
      }
      const auto& head = image.lt();
      if (head.monomial != staged.lm1 || head.coeff != lc1_at) {
        r.witnesses.push_back(
            {{i + 1}, "alpha=" + fp_text(alpha) + ": lt of image is " +
                          to_string(FpPolynomial::term(head.coeff, head.monomial)) +
                          ", expected " + to_string(FpPolynomial::term(lc1_at, staged.lm1))});
      }
    }
    auto images = nonzero_images(g, alpha);
    if (!images.empty() && !is_groebner_basis(images)) {
      r.witnesses.push_back({{}, "alpha=" + fp_text(alpha) +
                                     ": nonzero images fail the Buchberger criterion"});
    }
  }
  if (!g.radical_by_construction()) {
    r.note += (r.note.empty() ? "" : "; ") + std::string("ideal not radical by construction");
  }
  conclude(r, g.radical_by_construction());
  return r;
}

CheckReport check_gianni_kalkbrener(const FpBasis& g) {
  CheckReport r;
  r.name = check_names::kGianniKalkbrener;
  const auto l2 = g.ell2();
  if (!l2) throw NotZeroDimensional("check_gianni_kalkbrener: no pure power of y");
  const auto solutions = elimination_solutions(g);
  for (const auto& [alpha, beta] : solutions) {
    for (std::size_t i = *l2 + 1; i < g.size(); ++i) {
      const auto image = g[i].specialize_xy(alpha, beta);
      if (image.is_zero()) continue;
      if (image.degree_z() != g.alpha(i).alpha_z) {
        r.witnesses.push_back({{i + 1}, "(alpha,beta)=(" + fp_text(alpha) + "," + fp_text(beta) +
                                            "): image " + to_string(image) + " has z-degree " +
                                            std::to_string(image.degree_z()) + ", expected " +
                                            std::to_string(g.alpha(i).alpha_z)});
      }
    }
  }
  r.note = std::to_string(solutions.size()) + " elimination solutions";
  if (!g.radical_by_construction()) r.note += "; ideal not radical by construction";
  conclude(r, g.radical_by_construction());
  return r;
}

CheckReport check_root_separation(const FpBasis& g) {
  CheckReport r;
  r.name = check_names::kRootSeparation;
  const PrimeField field(g.front().lc().modulus());
  std::size_t cases = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const auto lc1 = g[i].staged_leading().lc1;
    if (lc1.is_constant()) continue;
    const auto next = g[i + 1].staged_leading();
    for (const auto& alpha : roots_univariate(lc1)) {
      if (next.lc1.evaluate(alpha, alpha, alpha).is_zero()) continue;
      ++cases;
      const std::string where = "alpha=" + fp_text(alpha);
      const auto image = g[i].specialize_x(alpha);
      if (!image.is_zero()) {
        r.witnesses.push_back({{i + 1}, where + ": " + detail::g(i) + " specializes to " +
                                            to_string(image) + ", expected 0"});
      }
      const auto p_alpha = next.lc2.specialize_x(alpha);
      const auto x_minus_alpha =
          FpPolynomial::term(field.one(), {1, 0, 0}) - FpPolynomial::constant(alpha);
      const auto h = buchberger(std::vector<FpPolynomial>{x_minus_alpha, p_alpha});
      const auto nf = normal_form(g[i + 1], h);
      if (!nf.is_zero()) {
        r.witnesses.push_back({{i + 2}, where + ": " + detail::g(i + 1) + " has normal form " +
                                            to_string(nf) + " modulo <x - " + fp_text(alpha) +
                                            ", " + to_string(p_alpha) + ">"});
      }
    }
  }
  if (cases == 0) {
    r.verdict = Verdict::skipped;
    r.note = "no consecutive pair with a separating root of lc1";
    return r;
  }
  r.note = std::to_string(cases) + " cases";
  if (!g.radical_by_construction()) r.note += "; ideal not radical by construction";
  conclude(r, g.radical_by_construction());
  return r;
}

PointSet solve_system(const FpBasis& g) {
  StructureFacts facts = structure_facts(g);
  if (!facts.zero_dim) {
    throw NotZeroDimensional("solve_system: " + facts.missing.front());
  }
  const std::uint32_t p = g.front().lc().modulus();
  PointSet out{p, {}, 0};

  auto require_split = [&out](const FpPolynomial& f, char var) {
    std::size_t defect = non_split_degree(f);
    if (defect > 0) {
      throw NonSplitError(var, defect,
                          std::to_string(out.points.size()) + " solutions found before failing");
    }
  };
  auto lowest_in = [](const std::vector<FpPolynomial>& polys, bool y_only) {
    const FpPolynomial* best = nullptr;
    for (const auto& q : polys) {
      if (y_only && q.degree_z() > 0) continue;
      if (!best || q.lm() < best->lm()) best = &q;
    }
    return best;
  };
  auto all_vanish = [](const std::vector<FpPolynomial>& polys, const Fp& v) {
    return std::all_of(polys.begin(), polys.end(),
                       [&v](const FpPolynomial& q) { return q.evaluate(v, v, v).is_zero(); });
  };

  require_split(g.front(), 'x');
  for (const auto& alpha : roots_univariate(g.front())) {
    const auto images = nonzero_images(g, alpha);
    std::vector<FpPolynomial> in_y;
    for (const auto& q : images) {
      if (q.degree_z() == 0) in_y.push_back(q);
    }
    const FpPolynomial* hy = lowest_in(in_y, true);
    if (!hy || hy->is_constant()) continue;
    require_split(*hy, 'y');
    for (const auto& beta : roots_univariate(*hy)) {
      if (!all_vanish(in_y, beta)) continue;
      std::vector<FpPolynomial> in_z;
      bool consistent = true;
      for (const auto& q : g.elements()) {
        auto img = q.specialize_xy(alpha, beta);
        if (img.is_zero()) continue;
        if (img.is_constant()) consistent = false;
        in_z.push_back(std::move(img));
      }
      if (!consistent || in_z.empty()) continue;
      const FpPolynomial* hz = lowest_in(in_z, false);
      require_split(*hz, 'z');
      for (const auto& gamma : roots_univariate(*hz)) {
        if (all_vanish(in_z, gamma)) out.points.push_back({alpha.value(), beta.value(), gamma.value()});
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace lexgb
