#include "lexgb/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lexgb/groebner.hpp"
#include "lexgb/parse.hpp"

namespace lexgb {

namespace {

template <class T>
T field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json polynomial_to_json(const FpPolynomial& p, bool text) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"c", t.coeff.value()}, {"e", {t.monomial.x, t.monomial.y, t.monomial.z}}});
  }
  json out = {{"terms", std::move(terms)}};
  if (text) out["text"] = to_string(p);
  return out;
}

FpPolynomial polynomial_from_json(const json& j, const PrimeField& field) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), field);
  std::vector<FpPolynomial::TermType> terms;
  const json& list = j.is_object() && j.contains("terms") ? j.at("terms") : j;
  if (!list.is_array()) throw ParseError("polynomial must be an object with 'terms' or a string");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const json& t = list[k];
    auto c = field_of<std::int64_t>(t, "c");
    auto e = field_of<std::vector<std::int64_t>>(t, "e");
    if (e.size() != 3 || e[0] < 0 || e[1] < 0 || e[2] < 0) {
      throw ParseError("term " + std::to_string(k) + ": exponent must be 3 non-negative integers");
    }
    terms.push_back({{static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1]),
                      static_cast<std::uint32_t>(e[2])},
                     field.make(c)});
  }
  return FpPolynomial::from_terms(std::move(terms));
}

json basis_to_json(const FpBasis& g, std::uint32_t p, bool text) {
  json elements = json::array();
  for (const auto& e : g.elements()) elements.push_back(polynomial_to_json(e, text));
  bool zero_dim = false;
  json ell2 = nullptr;
  if (!g.unit_ideal() && !g.empty()) {
    StructureFacts f = structure_facts(g);
    zero_dim = f.zero_dim;
    if (f.ell2) ell2 = *f.ell2 + 1;
  }
  return {{"p", p},
          {"elements", std::move(elements)},
          {"ell2", ell2},
          {"zero_dim", zero_dim},
          {"radical", g.radical_by_construction()},
          {"unit_ideal", g.unit_ideal()}};
}

FpBasis basis_from_json(const json& j) {
  const PrimeField field(field_of<std::uint64_t>(j, "p"));
  auto list = field_of<json>(j, "elements");
  if (!list.is_array() || list.empty()) throw ParseError("'elements' must be a nonempty array");
  std::vector<FpPolynomial> elements;
  for (std::size_t k = 0; k < list.size(); ++k) {
    try {
      elements.push_back(polynomial_from_json(list[k], field));
    } catch (const ParseError& e) {
      throw ParseError("elements[" + std::to_string(k) + "]: " + e.what());
    }
    if (elements.back().is_zero()) {
      throw ParseError("elements[" + std::to_string(k) + "] is the zero polynomial");
    }
  }
  bool radical = j.contains("radical") ? field_of<bool>(j, "radical") : false;
  return FpBasis::adopt(std::move(elements), radical);
}

json points_to_json(const PointSet& ps) {
  json pts = json::array();
  for (const auto& pt : ps.points) pts.push_back({pt[0], pt[1], pt[2]});
  return {{"p", ps.p}, {"points", std::move(pts)}, {"seed", ps.seed}};
}

PointSet points_from_json(const json& j) {
  PointSet ps;
  const PrimeField field(field_of<std::uint64_t>(j, "p"));
  ps.p = field.modulus();
  ps.seed = j.contains("seed") ? field_of<std::uint64_t>(j, "seed") : 0;
  auto pts = field_of<std::vector<std::vector<std::int64_t>>>(j, "points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].size() != 3) {
      throw ParseError("points[" + std::to_string(k) + "] must have 3 coordinates");
    }
    ps.points.push_back({field.make(pts[k][0]).value(), field.make(pts[k][1]).value(),
                         field.make(pts[k][2]).value()});
  }
  return ps;
}

json recipe_to_json(const InstanceRecipe& r) {
  json out = {{"kind", std::string(to_string(r.kind))}, {"p", r.p}, {"seed", r.seed}};
  if (r.kind == InstanceKind::random_triangular) {
    out["degree_bound"] = r.degree_bound;
  } else {
    out["points"] = r.points;
  }
  return out;
}

InstanceRecipe recipe_from_json(const json& j) {
  InstanceRecipe r;
  r.kind = instance_kind_from_string(field_of<std::string>(j, "kind"));
  r.p = PrimeField(field_of<std::uint64_t>(j, "p")).modulus();
  r.seed = field_of<std::uint64_t>(j, "seed");
  if (j.contains("points")) r.points = field_of<std::size_t>(j, "points");
  if (j.contains("degree_bound")) r.degree_bound = field_of<std::uint32_t>(j, "degree_bound");
  return r;
}

json report_to_json(const CheckReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"indices", w.indices}, {"detail", w.detail}});
  }
  json out = {{"name", r.name}, {"verdict", std::string(to_string(r.verdict))}};
  if (r.observed_holds) out["observed_holds"] = *r.observed_holds;
  out["witnesses"] = std::move(witnesses);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.name = field_of<std::string>(j, "name");
  r.verdict = verdict_from_string(field_of<std::string>(j, "verdict"));
  if (j.contains("observed_holds")) r.observed_holds = field_of<bool>(j, "observed_holds");
  if (j.contains("note")) r.note = field_of<std::string>(j, "note");
  for (const auto& w : field_of<json>(j, "witnesses")) {
    r.witnesses.push_back({field_of<std::vector<std::size_t>>(w, "indices"),
                           field_of<std::string>(w, "detail")});
  }
  return r;
}

json reports_to_json(const std::vector<CheckReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

std::vector<FpPolynomial> generators_from_json(const json& j, PrimeField& field_out) {
  field_out = PrimeField(field_of<std::uint64_t>(j, "p"));
  auto list = field_of<json>(j, "generators");
  if (!list.is_array()) throw ParseError("'generators' must be an array");
  std::vector<FpPolynomial> gens;
  for (std::size_t k = 0; k < list.size(); ++k) {
    try {
      gens.push_back(polynomial_from_json(list[k], field_out));
    } catch (const ParseError& e) {
      throw ParseError("generators[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return gens;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace lexgb
