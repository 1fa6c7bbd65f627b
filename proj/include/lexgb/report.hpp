#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexgb {

enum class Verdict { pass, fail, skipped, observed };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Evidence attached to a verdict. Indices are 1-based positions in the
/// basis (g_1 is index 1), and for specialization checks may be followed by
/// the field values used.
struct Witness {
  std::vector<std::size_t> indices;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one structural check on one basis.
///
/// A failing report always carries at least one witness. A skipped report
/// names the unmet hypothesis in `note`. An observed report records whether
/// the claim held (`observed_holds`) without asserting it; its witnesses
/// list the elements on which it did not.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  std::string note;
  std::optional<bool> observed_holds;

  bool failed() const { return verdict == Verdict::fail; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Sets the verdict from the accumulated witnesses. When `asserted` is false
/// the claim's hypothesis is unmet and the outcome is only observed.
inline void conclude(CheckReport& r, bool asserted) {
  bool holds = r.witnesses.empty();
  if (asserted) {
    r.verdict = holds ? Verdict::pass : Verdict::fail;
  } else {
    r.verdict = Verdict::observed;
    r.observed_holds = holds;
  }
}

bool any_failed(const std::vector<CheckReport>& reports);

}  // namespace lexgb
