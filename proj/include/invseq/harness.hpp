#pragma once

#include "invseq/formulas.hpp"
#include "invseq/inversion_sequence.hpp"
#include "invseq/series.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

/// True iff e (with m = max(e), t = prmx(e) - m - 1) has the shape
///   e_1 <= ... <= e_{m+s} <= mh,  e_{m+s+1} = ... = e_{m+t+1} = m,  e_{m+t+2} = mh,
///   e_{m+t+3..m+t+k+3} in {mh, m}, not all mh,  mh > e_{m+t+k+4} >= ... >= e_n
/// for some 0 <= mh < m, 0 <= s <= t, 0 <= k <= n-m-t-3. Within IS_n(102,201)
/// this is exactly the set of sequences containing 101.
bool matches_form_201(std::span<const int> e);

enum class Family {
  BijectionPhi,
  BijectionPsi,
  BijectionM,
  BijectionComposed,
  Tiling,
  Formula102,
  FormulaPair,
  FormulaTotals,
  Formula201Split,
  FormulaASubset,
  DyckLemma,
  LfClass,
  Identity,
  ProbeBlockRank,
  ProbeBallotTypo,
};

struct FamilyLimits {
  int default_n_max;
  int guard;
};
FamilyLimits family_limits(Family family);

struct CheckSpec {
  Family family = Family::BijectionPhi;
  std::optional<SecondPattern> tau;  // formula-pair, lf-class
  std::optional<IdentityId> identity;
  std::optional<int> n_max;          // falls back to the family default
  std::optional<int> u_order;        // identity only

  /// "bijection-phi", "formula-pair(012)", "lf-class(210)", "identity(H0_CLOSED)", ...
  static CheckSpec parse(std::string_view text, std::optional<int> n_max = std::nullopt);
  std::string name() const;
  int resolved_n_max() const;
};

/// Every family name accepted by CheckSpec::parse, with placeholders.
std::vector<std::string> family_names();

enum class CheckStatus { Pass, Fail, Error };
const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string name;
  int n_max = 0;
  CheckStatus status = CheckStatus::Pass;
  long cells = 0;                 // objects or coefficients compared
  nlohmann::json witness;         // smallest failing object, null on pass
  std::string message;
  nlohmann::json details;         // family-specific extras, null if none
  double seconds = 0;
};

struct ConformanceReport {
  std::vector<CheckResult> results;  // in request order

  bool all_passed() const;
  nlohmann::json to_json(bool include_timing = false) const;
};

struct RunOptions {
  unsigned jobs = 0;  // 0: hardware concurrency
};

CheckResult run_check(const CheckSpec& spec);
ConformanceReport run_checks(const std::vector<CheckSpec>& specs, const RunOptions& options = {});

/// Every family at its default n_max.
std::vector<CheckSpec> default_suite();
/// The default suite restricted to one family name (a bare name such as
/// "formula-pair" selects every instance of that family).
std::vector<CheckSpec> suite_for(std::string_view family, std::optional<int> n_max = std::nullopt);

nlohmann::json to_json(const IdentityReport& report);

}  // namespace invseq
