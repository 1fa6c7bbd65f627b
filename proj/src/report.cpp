#include "lexgb/report.hpp"

#include <algorithm>
#include <string>

#include "lexgb/error.hpp"

namespace lexgb {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
    case Verdict::observed:
      return "observed";
  }
  return "unknown";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skipped") return Verdict::skipped;
  if (s == "observed") return Verdict::observed;
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.failed(); });
}

}  // namespace lexgb
