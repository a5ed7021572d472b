#include "invseq/harness.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace invseq;

TEST_CASE("form predicate for 201 classes") {
  CHECK_FALSE(matches_form_201(std::vector<int>{0, 0}));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& e : oracle::avoiding(n, {{1, 0, 2}, {2, 0, 1}})) {
      REQUIRE(matches_form_201(e) == oracle::contains(e, {1, 0, 1}));
    }
  }
}

TEST_CASE("check spec parsing") {
  const auto spec = CheckSpec::parse("formula-pair(012)", 9);
  CHECK(spec.family == Family::FormulaPair);
  CHECK(spec.tau == SecondPattern::P012);
  CHECK(spec.name() == "formula-pair(012)");
  CHECK(spec.resolved_n_max() == 9);
  CHECK(CheckSpec::parse("identity(H0_CLOSED)").identity == IdentityId::H0_CLOSED);
  CHECK(CheckSpec::parse("bijection-phi").resolved_n_max() == family_limits(Family::BijectionPhi).default_n_max);
  CHECK(error_kind([] { CheckSpec::parse("no-such-family"); }).has_value());
  CHECK(error_kind([] { CheckSpec::parse("formula-pair(102)"); }).has_value());
  CHECK(error_kind([] { CheckSpec::parse("lf-class(012)"); }).has_value());
  CHECK_FALSE(family_names().empty());
}

TEST_CASE("documented examples") {
  const auto phi = run_check(CheckSpec::parse("bijection-phi", 6));
  CHECK(phi.status == CheckStatus::Pass);
  CHECK(phi.witness.is_null());

  const auto pair = run_check(CheckSpec::parse("formula-pair(012)", 9));
  CHECK(pair.status == CheckStatus::Pass);
  CHECK(pair.cells == 36);

  const auto h0 = run_check(CheckSpec::parse("identity(H0_CLOSED)", 24));
  CHECK(h0.status == CheckStatus::Pass);
}

TEST_CASE("guards surface as errors") {
  const auto guard = family_limits(Family::BijectionPhi).guard;
  const auto r = run_check(CheckSpec::parse("bijection-phi", guard + 1));
  CHECK(r.status == CheckStatus::Error);
  CHECK(r.message.find("GuardExceeded") != std::string::npos);
  ConformanceReport report;
  report.results.push_back(r);
  CHECK_FALSE(report.all_passed());
  CHECK(report.to_json()["summary"]["error"] == 1);
}

TEST_CASE("probes report both candidates") {
  const auto block = run_check(CheckSpec::parse("probe-block-rank", 6));
  CHECK(block.status == CheckStatus::Pass);
  CHECK(block.details["block = rank + 1"]["holds"] == true);
  CHECK(block.details["block = rank"]["holds"] == false);
  CHECK(block.details["block = rank"]["first_counterexample"]["object"] == "NH");

  const auto typo = run_check(CheckSpec::parse("probe-ballot-typo", 9));
  CHECK(typo.status == CheckStatus::Pass);
  CHECK(typo.details["c(j,k) = k/(2j+k) binom(2j+k, j)"]["holds"] == true);
  CHECK(typo.details["c(j,k) = k/(2j+k) binom(2j+k, n)"]["holds"] == false);
}

TEST_CASE("reports are deterministic and independent of parallelism") {
  std::vector<CheckSpec> specs;
  for (auto name : {"bijection-M", "tiling", "formula-pair(110)", "dyck-lemma", "lf-class(210)", "identity(CATALAN_FIX)"}) {
    specs.push_back(CheckSpec::parse(name, std::nullopt));
  }
  specs[2].n_max = 7;
  const auto serial = run_checks(specs, RunOptions{1}).to_json().dump();
  const auto parallel = run_checks(specs, RunOptions{4}).to_json().dump();
  CHECK(serial == parallel);
  CHECK(run_checks(specs, RunOptions{3}).to_json().dump() == serial);
  const auto j = nlohmann::json::parse(serial);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == specs.size());
  CHECK(j["checks"][0]["check"] == "bijection-M");
  CHECK_FALSE(j["checks"][0].contains("seconds"));
  CHECK(run_checks(specs, RunOptions{2}).to_json(true)["checks"][0].contains("seconds"));
}

TEST_CASE("default suite passes") {
  const auto report = run_checks(default_suite());
  for (const auto& r : report.results) {
    INFO(r.name, ": ", r.message);
    CHECK(r.status == CheckStatus::Pass);
  }
  CHECK(report.all_passed());
  CHECK(suite_for("formula-pair").size() == 9);
  CHECK(suite_for("identity(G_COEFF)").size() == 1);
}
