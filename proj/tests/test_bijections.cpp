#include "invseq/bijections.hpp"
#include "invseq/formulas.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace invseq;

namespace {

InversionSequence seq(std::string_view digits) {
  std::vector<int> v;
  for (char c : digits) v.push_back(c - '0');
  return InversionSequence(v);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(LabeledFPath{}) == InversionSequence({0}));
  CHECK(phi(worked_example_prefix(4)) == seq("00001"));
  CHECK(phi(worked_example()).to_compact() == worked_example_is);
  CHECK(phi_inv(InversionSequence({0})).empty());
  CHECK(phi_inv(seq("00001")) == worked_example_prefix(4));
  CHECK(phi_inv(seq(worked_example_is)) == worked_example());
  CHECK(error_kind([] { phi_inv(InversionSequence({0, 1, 0, 2})); }) == ErrorKind::PatternViolation);
}

TEST_CASE("psi examples") {
  CHECK(psi(LabeledFPath{}).word() == "ud");
  CHECK(psi(worked_example_prefix(3)).word() == "udududud");
  const auto s = psi(worked_example());
  CHECK(s.word() == worked_example_uvd);
  CHECK(s.word().size() == 59);
  CHECK(uvd_stats(s).vox == 3);
  CHECK(uvd_stats(s).block == 4);
  CHECK(psi_inv(UvdPath("ud")).empty());
  CHECK(psi_inv(UvdPath("udududud")) == worked_example_prefix(3));
  CHECK(psi_inv(s) == worked_example());
}

TEST_CASE("phi is a rank-preserving bijection LF_n -> IS_{n+1}(102), n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::vector<int>> image;
    for (const auto& q : enumerate_lf(n)) {
      const auto e = phi(q);
      REQUIRE(e.vec().size() == static_cast<std::size_t>(n + 1));
      REQUIRE(oracle::rank(e.vec()) == q.height());
      REQUIRE(phi_inv(e) == q);
      image.insert(e.vec());
    }
    const auto ref = oracle::avoiding(n + 1, {{1, 0, 2}});
    CHECK(image == std::set<std::vector<int>>(ref.begin(), ref.end()));
  }
}

TEST_CASE("psi is a bijection LF_n -> UVD_{n+1} with vox = height, n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> image;
    for (const auto& q : enumerate_lf(n)) {
      const auto s = psi(q);
      REQUIRE(s.semilength() == n + 1);
      REQUIRE(oracle::vox(s.word()) == q.height());
      REQUIRE(psi_inv(s) == q);
      image.insert(s.word());
    }
    const auto ref = oracle::uvd_paths(n + 1);
    CHECK(image == std::set<std::string>(ref.begin(), ref.end()));
  }
}

TEST_CASE("phi carries the path classes onto the pattern classes, n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::vector<int>> img210;
    std::set<std::vector<int>> img110;
    for (const auto& q : enumerate_lf(n)) {
      if (in_class_210(q)) img210.insert(phi(q).vec());
      if (in_class_110(q)) img110.insert(phi(q).vec());
    }
    const auto r210 = oracle::avoiding(n + 1, {{1, 0, 2}, {2, 1, 0}});
    const auto r110 = oracle::avoiding(n + 1, {{1, 0, 2}, {1, 1, 0}});
    CHECK(img210 == std::set<std::vector<int>>(r210.begin(), r210.end()));
    CHECK(img110 == std::set<std::vector<int>>(r110.begin(), r110.end()));
  }
}

TEST_CASE("Schroeder paths to inversion sequences") {
  CHECK(schroeder_to_is(SchroederPath("NH")) == InversionSequence({0}));
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> image;
    for (const auto& p : enumerate_schroeder(n)) {
      const auto e = schroeder_to_is(p);
      REQUIRE(image.insert(e.vec()).second);
      REQUIRE(oracle::schroeder_returns(p.word()) == oracle::rank(e.vec()) + 1);
    }
    const auto ref = oracle::avoiding(n, {{1, 0, 2}});
    CHECK(image == std::set<std::vector<int>>(ref.begin(), ref.end()));
  }
}

TEST_CASE("tiling examples") {
  CHECK(is_to_tiling(seq("000")).word() == "DD");
  CHECK(is_to_tiling(seq("001")).word() == "DSS");
  CHECK(is_to_tiling(seq("011")).word() == "SSSS");
  CHECK(is_to_tiling(seq("010")).word() == "SSD");
  CHECK(is_to_tiling(seq("002")).word() == "SDS");
  CHECK(tiling_to_is(Tiling("SDS"), 3) == seq("002"));
  CHECK(Tiling("SDS").board_length() == 4);
  CHECK(error_kind([] { Tiling("SXD"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { is_to_tiling(seq("012")); }) == ErrorKind::PatternViolation);
  CHECK(error_kind([] { tiling_to_is(Tiling("DDD"), 3); }) == ErrorKind::BadBoardLength);
  CHECK(enumerate_tilings(4).size() == 5);
  CHECK(enumerate_tilings(0).size() == 1);
}

TEST_CASE("tiling map is a bijection IS_n(102,012) -> tilings of 2n-2, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto domain = oracle::avoiding(n, {{1, 0, 2}, {0, 1, 2}});
    CHECK(domain.size() == static_cast<std::size_t>(oracle::fibonacci(2 * n - 1)));
    std::set<std::string> image;
    for (const auto& v : domain) {
      const InversionSequence e(v);
      const auto t = is_to_tiling(e);
      REQUIRE(t.board_length() == 2 * n - 2);
      REQUIRE(tiling_to_is(t, n) == e);
      image.insert(t.word());
    }
    std::set<std::string> all;
    for (const auto& t : enumerate_tilings(2 * n - 2)) all.insert(t.word());
    CHECK(image == all);
  }
}

TEST_CASE("tiling initial segments refine by rank, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& v : oracle::avoiding(n, {{1, 0, 2}, {0, 1, 2}})) {
      const int t = oracle::rank(v);
      const auto w = is_to_tiling(InversionSequence(v)).word();
      bool ok = false;
      if (t < n - 2) {
        for (int i = 0; i <= t && !ok; ++i) {
          const std::string d(static_cast<std::size_t>(i), 'D');
          ok = starts_with(w, d + std::string(static_cast<std::size_t>(2 * t - 2 * i + 2), 'S') + "D") ||
               starts_with(w, d + std::string(static_cast<std::size_t>(2 * t - 2 * i + 1), 'S') + "D");
        }
      } else if (t == n - 2) {
        for (int i = 1; i <= n - 1 && !ok; ++i) {
          ok = w == std::string(static_cast<std::size_t>(n - i - 1), 'D') + std::string(static_cast<std::size_t>(2 * i), 'S');
        }
      } else {
        ok = w == std::string(static_cast<std::size_t>(n - 1), 'D');
      }
      INFO("e = ", InversionSequence(v).to_compact(), " tiling ", w);
      CHECK(ok);
    }
  }
}
