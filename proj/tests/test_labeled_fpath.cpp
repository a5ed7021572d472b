#include "invseq/inversion_sequence.hpp"
#include "invseq/labeled_fpath.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace invseq;

namespace {

// Independent brute force: every step (a; parts) with a <= n+1 and parts in
// [-n, 0], filtered by the y >= x rule.
void brute_lf(int budget, int x, int y, std::vector<LabeledStep>& cur, std::set<std::vector<LabeledStep>>& out, int n) {
  if (budget == 0) {
    out.insert(cur);
    return;
  }
  for (int a = 0; a <= n + 1; ++a) {
    if (y + 1 >= x + a) {
      cur.push_back(LabeledStep{a, {1}});
      brute_lf(budget - 1, x + a, y + 1, cur, out, n);
      cur.pop_back();
    }
  }
  for (int a = 1; a <= n + 1; ++a) {
    for (int k = 1; k <= budget; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(k), 0);
      while (true) {
        int b = 0;
        for (int p : parts) b += p;
        if (y + b >= x + a) {
          cur.push_back(LabeledStep{a, parts});
          brute_lf(budget - k, x + a, y + b, cur, out, n);
          cur.pop_back();
        }
        int j = k - 1;
        while (j >= 0 && parts[static_cast<std::size_t>(j)] == -n) parts[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
        --parts[static_cast<std::size_t>(j)];
      }
    }
  }
}

std::map<int, long> heights(const std::vector<LabeledFPath>& paths, bool (*pred)(const LabeledFPath&)) {
  std::map<int, long> m;
  for (const auto& q : paths) {
    if (pred == nullptr || pred(q)) ++m[q.height()];
  }
  return m;
}

}  // namespace

TEST_CASE("validation") {
  const LabeledFPath empty = validate_lf({});
  CHECK(empty.semilength() == 0);
  CHECK(empty.height() == 0);
  CHECK(error_kind([] { validate_lf({LabeledStep{0, {0}}}); }) == ErrorKind::StepNotInF);
  CHECK(error_kind([] { validate_lf({north(), LabeledStep{0, {0}}}); }) == ErrorKind::StepNotInF);
  CHECK(error_kind([] { validate_lf({rise(2)}); }) == ErrorKind::BelowDiagonal);
  CHECK(error_kind([] { validate_lf({north(), down(1, {1, 0})}); }).has_value());
  CHECK(error_kind([] { validate_lf({north(), LabeledStep{1, {}}}); }).has_value());
  CHECK(error_kind([] { validate_lf({LabeledStep{-1, {1}}}); }).has_value());

  const auto q = worked_example();
  CHECK(q.steps().size() == 19);
  CHECK(q.semilength() == 24);
  CHECK(q.height() == 3);
  CHECK(lf_stats(q).semilength == 24);
  CHECK(lf_stats(q).height == 3);
  const auto one = lf_stats(validate_lf({north()}));
  CHECK(one.semilength == 1);
  CHECK(one.height == 1);
}

TEST_CASE("labels and JSON") {
  CHECK(north().label() == "(0; 1)");
  CHECK(down(1, {0, -1, 0, -1}).label() == "(1; 0,-1,0,-1)");
  CHECK(down(1, {0, -1}).b() == -1);
  const auto q = worked_example();
  CHECK(LabeledFPath::from_json(q.to_json()) == q);
  CHECK(LabeledFPath::from_json(R"({"steps":[]})").empty());
  CHECK(error_kind([] { LabeledFPath::from_json("{"); }) == ErrorKind::ParseError);
  CHECK(q.points().front() == std::pair<int, int>{0, 0});
  CHECK(q.points().size() == 20);
  CHECK(q.without_last().with_step(q.steps().back()) == q);
}

TEST_CASE("step classes") {
  CHECK(classify_step(north()) == StepClass::North);
  CHECK(classify_step(rise(2)) == StepClass::Up);
  CHECK(classify_step(down(1, {0, -1, 0, -1})) == StepClass::DownComplex);
  CHECK(classify_step(down(1, {-1, 0, 0})) == StepClass::DownZeroTailed);
  CHECK(classify_step(down(2, {0})) == StepClass::DownPure);
  CHECK(classify_step(down(1, {-1})) == StepClass::DownPure);
}

TEST_CASE("path classes") {
  for (int k = 0; k <= 5; ++k) {
    const LabeledFPath q(std::vector<LabeledStep>(static_cast<std::size_t>(k), north()));
    CHECK(in_class_210(q));
    CHECK(in_class_110(q));
  }
  const auto example = worked_example();
  CHECK_FALSE(in_class_210(example));
  CHECK_FALSE(in_class_110(example));
  const LabeledFPath single({north(), north(), rise(1), down(1, {-1, 0})});
  CHECK(in_class_210(single));
  CHECK(in_class_110(single));
  const LabeledFPath complex_last({north(), north(), down(1, {0, -1})});
  CHECK(in_class_210b(complex_last));
  CHECK(in_class_210b_final(complex_last));
  CHECK_FALSE(in_class_210a(complex_last));
  CHECK_FALSE(in_class_110(complex_last));
}

TEST_CASE("enumeration") {
  const auto zero = enumerate_lf(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(error_kind([] { enumerate_lf(8); }) == ErrorKind::GuardExceeded);

  SUBCASE("equals independent brute force, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
      std::set<std::vector<LabeledStep>> ref;
      std::vector<LabeledStep> cur;
      brute_lf(n, 0, 0, cur, ref, n);
      std::set<std::vector<LabeledStep>> got;
      for (const auto& q : enumerate_lf(n)) got.insert(q.steps());
      CHECK(got == ref);
    }
  }
  SUBCASE("sizes and heights match IS_{n+1}(102) by rank, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
      const auto paths = enumerate_lf(n);
      const auto is = oracle::avoiding(n + 1, {{1, 0, 2}});
      CHECK(paths.size() == is.size());
      CHECK(heights(paths, nullptr) == oracle::by_rank(is));
      CHECK(std::is_sorted(paths.begin(), paths.end()));
      for (const auto& q : paths) {
        REQUIRE(validate_lf(q.steps()) == q);
        REQUIRE(q.semilength() == n);
      }
    }
  }
}

TEST_CASE("class counts match pattern-avoidance counts by rank, n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    const auto paths = enumerate_lf(n);
    CHECK(heights(paths, in_class_210) == oracle::by_rank(oracle::avoiding(n + 1, {{1, 0, 2}, {2, 1, 0}})));
    CHECK(heights(paths, in_class_110) == oracle::by_rank(oracle::avoiding(n + 1, {{1, 0, 2}, {1, 1, 0}})));
    for (const auto& q : paths) REQUIRE_FALSE((in_class_210a(q) && in_class_210b(q)));
  }
}

TEST_CASE("semilength is additive under concatenation") {
  const auto a = enumerate_lf(2);
  for (const auto& p : a) {
    for (const auto& q : enumerate_lf(2)) {
      auto steps = p.steps();
      steps.insert(steps.end(), q.steps().begin(), q.steps().end());
      int sum = 0;
      for (const auto& s : steps) sum += s.semilength();
      CHECK(sum == p.semilength() + q.semilength());
    }
  }
}
