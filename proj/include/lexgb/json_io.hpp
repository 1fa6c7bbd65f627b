#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lexgb/instances.hpp"
#include "lexgb/report.hpp"

namespace lexgb {

using json = nlohmann::ordered_json;

/// {"terms":[{"c":<residue>,"e":[a,b,c]}, ...]} in descending lex order;
/// with `text` an extra "text" field carries the readable form.
json polynomial_to_json(const FpPolynomial& p, bool text = false);

/// Accepts the object form (coefficients may be any integers) or a string
/// in the text syntax.
FpPolynomial polynomial_from_json(const json& j, const PrimeField& field);

/// {"p":..,"elements":[..],"ell2":k|null,"zero_dim":b,"radical":b,"unit_ideal":b}
/// with ell2 1-based.
json basis_to_json(const FpBasis& g, std::uint32_t p, bool text = false);
FpBasis basis_from_json(const json& j);

json points_to_json(const PointSet& ps);
PointSet points_from_json(const json& j);

json recipe_to_json(const InstanceRecipe& r);
InstanceRecipe recipe_from_json(const json& j);

json report_to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

json reports_to_json(const std::vector<CheckReport>& reports);

/// Reads a generator list file: {"p":..,"generators":[poly, ...]}.
std::vector<FpPolynomial> generators_from_json(const json& j, PrimeField& field_out);

/// Reads and parses a JSON file; throws ParseError naming the file.
json read_json_file(const std::string& path);
/// Writes `j` pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const json& j);

}  // namespace lexgb
