#include "invseq/formulas.hpp"
#include "invseq/series.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace invseq;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("arithmetic") {
  CHECK(sqrt1m4x(4).integer_coeffs() == ints({1, 2, 6, 20, 70}));
  CHECK(sqrt1m4x(4, SqrtKind::Direct).integer_coeffs() == ints({1, -2, -2, -4, -10}));
  CHECK(sqrt1m4x(10) * sqrt1m4x(10, SqrtKind::Direct) == TruncatedSeries::constant(1, 10));
  const auto c = catalan_series(3);
  CHECK((c * c).integer_coeffs() == ints({1, 2, 5, 14}));
  CHECK(catalan_series(5).integer_coeffs() == ints({1, 1, 2, 5, 14, 42}));
  CHECK(geometric(3).integer_coeffs() == ints({1, 1, 1, 1}));
  CHECK(TruncatedSeries::monomial(2, 4).integer_coeffs() == ints({0, 0, 1, 0, 0}));
  CHECK((sqrt1m4x(6) / geometric(6)).integer_coeffs() == ints({1, 1, 4, 14, 50, 182, 672}));
  CHECK((catalan_series(8) + sqrt1m4x(5)).order() == 5);
  CHECK(geometric(5).pow(-1) == TruncatedSeries({1, -1}, 5));
  CHECK(geometric(5).pow(0) == TruncatedSeries::constant(1, 5));
  CHECK(TruncatedSeries({Rational(1, 2), 1}, 2).inverse() == TruncatedSeries({2, -4, 8}, 2));
  CHECK(TruncatedSeries({1, 2}, 3).shift(2).integer_coeffs() == ints({0, 0, 1, 2}));
  CHECK(TruncatedSeries({1, 2, 5}, 2).to_string() == "1 + 2*x + 5*x^2");
  CHECK_THROWS_AS(TruncatedSeries({Rational(1, 2)}, 0).integer_coeffs(), std::logic_error);
}

TEST_CASE("errors") {
  CHECK(error_kind([] { TruncatedSeries::monomial(1, 4).inverse(); }) == ErrorKind::NonInvertibleConstantTerm);
  CHECK(error_kind([] { geometric(4) / TruncatedSeries::monomial(1, 4); }) == ErrorKind::NonInvertibleConstantTerm);
  CHECK(error_kind([] { TruncatedSeries::monomial(1, 4).pow(-2); }) == ErrorKind::NonInvertibleConstantTerm);
  CHECK(error_kind([] { compose_poly(geometric(4), geometric(4)); }) == ErrorKind::BadComposition);
  CHECK(error_kind([] { parse_identity_id("NOPE"); }).has_value());
  CHECK(error_kind([] { parse_series_id("Z"); }).has_value());
}

TEST_CASE("composition") {
  const int n = 8;
  const TruncatedSeries p({0, 1, -1}, n);  // x - x^2
  const auto s = catalan_series(n);
  TruncatedSeries direct(n);
  for (int k = 0; k <= n; ++k) direct += s[k] * p.pow(k);
  CHECK(compose_poly(s, p) == direct);
  CHECK(compose_poly(geometric(n), TruncatedSeries::monomial(1, n)) == geometric(n));
}

TEST_CASE("Catalan identities") {
  const int n = 12;
  const auto c = catalan_series(n);
  const auto x = TruncatedSeries::monomial(1, n);
  CHECK(c / (TruncatedSeries::constant(1, n) - x * c * c) == sqrt1m4x(n));
  CHECK(TruncatedSeries::constant(1, n) - c == -(x * c * c));
}

TEST_CASE("fixed points") {
  const int n = 10;
  const TruncatedSeries p({0, 1, -1}, n);
  const auto one = TruncatedSeries::constant(1, n);
  const auto a = fixed_point([&](const TruncatedSeries& s) { return one + p * s.pow(3); }, one);
  CHECK(a == named_series(SeriesId::A, n));
  for (int k = 1; k <= 8; ++k) {
    CHECK(a[k] == Rational(oracle::avoiding(k, {{1, 0, 2}}).size()));
  }
  const auto d = named_series(SeriesId::D, n);
  for (int k = 1; k <= 7; ++k) CHECK(d[k] == Rational(oracle::uvd_paths(k).size()));
  CHECK(named_series(SeriesId::C, n) == catalan_series(n));
  CHECK_THROWS_AS(fixed_point([&](const TruncatedSeries& s) { return s + one; }, one), std::logic_error);
}

TEST_CASE("D_0 powers count UVD paths by vox, n <= 7") {
  const int n = 7;
  const auto d0 = named_series(SeriesId::D0, n);
  for (int t = 0; t <= n - 1; ++t) {
    const auto dt = d0.pow(t + 1);
    for (int k = 1; k <= n; ++k) {
      long c = 0;
      for (const auto& w : oracle::uvd_paths(k)) c += oracle::vox(w) == t;
      CHECK(dt[k] == Rational(c));
    }
  }
}

TEST_CASE("Lagrange coefficients of E") {
  const auto e = named_series(SeriesId::E, 10);
  for (int k = 1; k <= 10; ++k) CHECK(e[k] == Rational(binom(3 * k - 2, k - 1), BigInt(k)));
  CHECK(e[1] == 1);
}

TEST_CASE("bivariate series") {
  const int n = 6;
  const auto xc = TruncatedSeries::monomial(1, n) * catalan_series(n);
  const auto g = BivariateSeries::geometric_in_u(xc, 4);
  CHECK(g.u_order() == 4);
  CHECK(g.u_coeff(3) == xc.pow(3));
  const auto sq = g * g;
  for (int t = 0; t <= 4; ++t) CHECK(sq.u_coeff(t) == Rational(t + 1) * xc.pow(t));
  const auto lifted = BivariateSeries::lift(catalan_series(n), 4);
  CHECK(lifted.u_coeff(0) == catalan_series(n));
  CHECK(lifted.u_coeff(2) == TruncatedSeries(n));
  CHECK((catalan_series(n) * g).u_coeff(1) == catalan_series(n) * xc);
  CHECK((g - g) == BivariateSeries(4, n));
}

TEST_CASE("identity catalog") {
  for (auto id : kIdentityIds) {
    CHECK(parse_identity_id(to_string(id)) == id);
    const auto report = verify_identity(id);
    INFO(to_string(id));
    CHECK(report.holds);
    CHECK_FALSE(report.first_mismatch.has_value());
    CHECK(report.checks > 0);
  }
  CHECK(verify_identity(IdentityId::D_CUBIC, VerifyOptions{14, 6, 8, 7, 6}).holds);
}

TEST_CASE("G coefficient at (2,0) is 3") {
  const int n = 6;
  const auto c = catalan_series(n);
  const auto x = TruncatedSeries::monomial(1, n);
  const auto g1 = geometric(n);
  // [u^0] G = 2 x^2 C^3 / ((1-x) sqrt(1-4x)) + C + x^3 (C^6 - C^5) / (1-x), at t = 0
  const auto g0 = x.pow(2) * c.pow(3) * g1 * sqrt1m4x(n) + c + x.pow(3) * (c.pow(6) - c.pow(5)) * g1;
  CHECK(g0[2] == 3);
  CHECK(oracle::by_rank(oracle::avoiding(3, {{1, 0, 2}, {2, 1, 0}}))[0] == 3);
  VerifyOptions small;
  small.order = 6;
  small.u_order = 2;
  CHECK(verify_identity(IdentityId::G_COEFF, small).holds);
}
