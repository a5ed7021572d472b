#pragma once

#include "invseq/bigint.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

/// Formal power series c_0 + c_1 x + ... + c_N x^N with exact rational
/// coefficients. Binary operations truncate to the smaller operand order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(std::vector<Rational> coeffs, int order);

  static TruncatedSeries constant(const Rational& c, int order);
  static TruncatedSeries monomial(int power, int order, const Rational& c = 1);  // c x^power
  static TruncatedSeries from_function(int order, const std::function<Rational(int)>& coeff);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const;  // zero-based; n <= order()
  Rational coeff(int n) const;              // zero past the order
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Integer coefficients; throws std::logic_error if any is fractional.
  std::vector<BigInt> integer_coeffs() const;

  TruncatedSeries truncate(int order) const;
  TruncatedSeries shift(int k) const;  // multiply by x^k, k >= 0
  TruncatedSeries inverse() const;     // requires c_0 != 0
  TruncatedSeries pow(int k) const;    // negative k needs c_0 != 0

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;  // "1 + 2*x + 5*x^2"

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries div(const TruncatedSeries& num, const TruncatedSeries& den);
TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den);

enum class SqrtKind { Inverse, Direct };  // (1-4x)^{-1/2} or (1-4x)^{1/2}
TruncatedSeries sqrt1m4x(int order, SqrtKind kind = SqrtKind::Inverse);

/// S(P(x)) for a polynomial or series P with zero constant term.
TruncatedSeries compose_poly(const TruncatedSeries& s, const TruncatedSeries& p);

TruncatedSeries geometric(int order);  // 1/(1-x)
TruncatedSeries catalan_series(int order);

/// Iterates s <- step(s) from `start` until the iterate stops changing;
/// throws std::logic_error if it has not settled after order + 2 rounds.
TruncatedSeries fixed_point(const std::function<TruncatedSeries(const TruncatedSeries&)>& step,
                            const TruncatedSeries& start);

/// Power series in u whose coefficients are power series in x, kept up to
/// u^T and x^N.
class BivariateSeries {
 public:
  BivariateSeries(int u_order, int x_order);
  explicit BivariateSeries(std::vector<TruncatedSeries> by_u_power);

  /// 1 / (1 - u r) = sum_t r^t u^t.
  static BivariateSeries geometric_in_u(const TruncatedSeries& r, int u_order);
  /// A series without u.
  static BivariateSeries lift(const TruncatedSeries& s, int u_order);

  int u_order() const noexcept { return static_cast<int>(terms_.size()) - 1; }
  int x_order() const noexcept { return terms_.front().order(); }
  const TruncatedSeries& u_coeff(int t) const;  // [u^t]
  TruncatedSeries& u_coeff(int t);

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const TruncatedSeries& s, const BivariateSeries& a);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::vector<TruncatedSeries> terms_;
};

/// Named single-variable series, each built by fixed-point iteration or
/// from its defining equation (never from its closed form).
enum class SeriesId { A, C, D, D0, E, A0, B0, H0 };
std::string_view to_string(SeriesId id) noexcept;
SeriesId parse_series_id(std::string_view text);
TruncatedSeries named_series(SeriesId id, int order);

enum class IdentityId {
  A_CUBIC,
  D_CUBIC,
  LAGRANGE_E,
  D_T_POWER,
  CATALAN_FIX,
  CATALAN_SQRT,
  A0_CLOSED,
  B0_CLOSED,
  G_COEFF,
  H0_CLOSED,
  H_COEFF,
  SUM_D_EXPANSION,
};
inline constexpr IdentityId kIdentityIds[] = {
    IdentityId::A_CUBIC,     IdentityId::D_CUBIC,      IdentityId::LAGRANGE_E, IdentityId::D_T_POWER,
    IdentityId::CATALAN_FIX, IdentityId::CATALAN_SQRT, IdentityId::A0_CLOSED,  IdentityId::B0_CLOSED,
    IdentityId::G_COEFF,     IdentityId::H0_CLOSED,    IdentityId::H_COEFF,    IdentityId::SUM_D_EXPANSION,
};
std::string_view to_string(IdentityId id) noexcept;
IdentityId parse_identity_id(std::string_view text);

struct VerifyOptions {
  int order = 24;          // x-order N
  int u_order = 6;         // u-order T
  int is_oracle_max = 8;   // brute-force inversion sequences up to this length
  int path_oracle_max = 7; // brute-force UVD paths up to this semilength
  int lf_oracle_max = 6;   // brute-force labeled F-paths up to this semilength
};

struct Mismatch {
  std::string check;       // which comparison failed
  std::optional<int> u_power;
  int power = 0;           // exponent of x
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id = IdentityId::A_CUBIC;
  bool holds = true;
  std::optional<Mismatch> first_mismatch;
  long checks = 0;         // coefficients compared
};

IdentityReport verify_identity(IdentityId id, const VerifyOptions& options = {});

}  // namespace invseq
