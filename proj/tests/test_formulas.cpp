#include "invseq/formulas.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace invseq;

namespace {

std::vector<int> pattern_word(SecondPattern tau) {
  const auto p = as_pattern(tau);
  return {p.word().begin(), p.word().end()};
}

}  // namespace

TEST_CASE("primitives") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(5) == 5);
  CHECK(ballot(2, 1) == 2);
  CHECK(catalan(2) == 2);
  CHECK(catalan(10) == 16796);
  CHECK(pow2(70) == BigInt(1) << 70);
  CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
  for (long j = 0; j <= 10; ++j) {
    CHECK(ballot(j, 1) == catalan(j));
    for (long k = 1; k <= 5; ++k) CHECK(ballot(j, k) * (2 * j + k) == BigInt(k) * binom(2 * j + k, j));
  }
}

TEST_CASE("rank counts for 102") {
  CHECK(count_102_rank(2, 0) == 1);
  CHECK(count_102_rank(3, 0) == 3);
  CHECK(error_kind([] { count_102_rank(3, 3); }) == ErrorKind::DomainError);
  CHECK(error_kind([] { count_102_rank(0, 0); }) == ErrorKind::DomainError);
  for (int n = 1; n <= 9; ++n) {
    CHECK(count_102_rank(n, n - 1) == 1);
    auto by = oracle::by_rank(oracle::avoiding(n, {{1, 0, 2}}));
    for (int t = 0; t <= n - 1; ++t) CHECK(count_102_rank(n, t) == by[t]);
  }
}

TEST_CASE("pair formula examples") {
  CHECK(count_pair_rank(SecondPattern::P001, 4, 0) == 4);
  CHECK(count_pair_rank(SecondPattern::P011, 3, 0) == 3);
  CHECK(count_pair_rank(SecondPattern::P012, 3, 0) == 2);
  CHECK(count_pair_rank(SecondPattern::P120, 3, 0) == 3);
  CHECK(count_pair_rank(SecondPattern::P110, 3, 0) == 3);
  CHECK(count_pair_rank(SecondPattern::P210, 3, 0) == 3);
  CHECK(error_kind([] { count_pair_rank(SecondPattern::P011, 3, 2); }) == ErrorKind::DomainError);
  CHECK(error_kind([] { count_pair_rank(SecondPattern::P011, 3, 2, RankRange::Extended); }) == ErrorKind::DomainError);
  CHECK(count_pair_rank(SecondPattern::P210, 3, 2, RankRange::Extended) == 1);
  CHECK(parse_second_pattern("012") == SecondPattern::P012);
  CHECK(error_kind([] { parse_second_pattern("102"); }).has_value());
}

TEST_CASE("pair formulas equal the oracle") {
  std::vector<std::vector<oracle::Seq>> base(10);
  for (int n = 1; n <= 9; ++n) base[static_cast<std::size_t>(n)] = oracle::avoiding(n, {{1, 0, 2}});
  for (auto tau : kSecondPatterns) {
    const int n_max = tau == SecondPattern::P201 ? 8 : 9;
    const auto p = pattern_word(tau);
    for (int n = 1; n <= n_max; ++n) {
      auto by = oracle::by_rank(oracle::filter(base[static_cast<std::size_t>(n)], {p}));
      long total = 0;
      for (auto& [t, c] : by) total += c;
      for (int t = 0; t <= n - 2; ++t) {
        INFO("tau ", to_string(tau), " n ", n, " t ", t);
        CHECK(count_pair_rank(tau, n, t) == by[t]);
      }
      if (n >= 2 && (tau == SecondPattern::P210 || tau == SecondPattern::P110)) {
        CHECK(count_pair_rank(tau, n, n - 1, RankRange::Extended) == by[n - 1]);
      }
      CHECK(count_pair_total(tau, n) == total);
    }
  }
}

TEST_CASE("totals") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(count_pair_total(SecondPattern::P011, n) == fib(2 * n - 1));
    CHECK(count_pair_total(SecondPattern::P012, n) == fib(2 * n - 1));
    BigInt expected = 1;
    for (int i = 1; i <= n - 1; ++i) expected += binom(2 * i, i - 1);
    CHECK(count_pair_total(SecondPattern::P120, n) == expected);
  }
}

TEST_CASE("201 split by max") {
  CHECK(count_201_by_max(4, 0, 1, false) == 1);
  // Brute force finds (0,1,0,1) here.
  CHECK(count_201_by_max(4, 0, 1, true) == 1);
  for (int n = 1; n <= 8; ++n) {
    std::map<std::tuple<int, int, bool>, long> cells;
    for (const auto& e : oracle::avoiding(n, {{1, 0, 2}, {2, 0, 1}})) {
      cells[{oracle::rank(e), *std::max_element(e.begin(), e.end()), oracle::contains(e, {1, 0, 1})}]++;
    }
    for (int t = 0; t <= n - 2; ++t) {
      for (int m = 1; m <= n - t - 1; ++m) {
        CHECK(count_201_by_max(n, t, m, false) == cells[{t, m, false}]);
        if (n >= 4 && m <= n - t - 3) CHECK(count_201_by_max(n, t, m, true) == cells[{t, m, true}]);
      }
    }
  }
}

TEST_CASE("A subset") {
  CHECK(count_A_subset(2, 0) == 1);
  std::map<std::pair<int, int>, BigInt> a;
  for (int n = 2; n <= 8; ++n) {
    std::map<int, long> by;
    for (const auto& v : oracle::avoiding(n, {{1, 0, 2}, {1, 2, 0}})) {
      const int m = *std::max_element(v.begin(), v.end());
      const int t = oracle::rank(v);
      const bool member = m >= 1 && m + t <= n && v[static_cast<std::size_t>(m + t - 1)] < m;
      CHECK(in_A_subset(InversionSequence(v)) == member);
      if (member) ++by[t];
    }
    for (int t = 0; t <= n - 2; ++t) {
      CHECK(count_A_subset(n, t) == by[t]);
      a[{n, t}] = count_A_subset(n, t);
    }
  }
  for (int n = 2; n <= 7; ++n) {
    for (int t = 1; t <= n - 1; ++t) {
      BigInt sum = 0;
      for (int i = t - 1; i <= n - 2; ++i) sum += a[{n, i}];
      CHECK(count_A_subset(n + 1, t) == sum);
    }
  }
}
