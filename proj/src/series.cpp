#include "invseq/series.hpp"

#include "invseq/error.hpp"
#include "invseq/formulas.hpp"
#include "invseq/inversion_sequence.hpp"
#include "invseq/labeled_fpath.hpp"
#include "invseq/lattice_paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace invseq {

// --- TruncatedSeries ----------------------------------------------------------

TruncatedSeries::TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order) : TruncatedSeries(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) { return monomial(0, order, c); }

TruncatedSeries TruncatedSeries::monomial(int power, int order, const Rational& c) {
  TruncatedSeries s(order);
  if (power >= 0 && power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_function(int order, const std::function<Rational(int)>& coeff) {
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
  return s;
}

const Rational& TruncatedSeries::operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

Rational TruncatedSeries::coeff(int n) const {
  return n >= 0 && n <= order() ? coeffs_[static_cast<std::size_t>(n)] : Rational(0);
}

std::vector<BigInt> TruncatedSeries::integer_coeffs() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(require_integer(c));
  return out;
}

TruncatedSeries TruncatedSeries::truncate(int order) const { return TruncatedSeries(coeffs_, order); }

TruncatedSeries TruncatedSeries::shift(int k) const {
  if (k < 0) throw Error(ErrorKind::DomainError, "shift: negative power " + std::to_string(k));
  TruncatedSeries s(order());
  for (int n = order(); n >= k; --n) s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - k)];
  return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) {
    throw Error(ErrorKind::NonInvertibleConstantTerm, "cannot invert a series with zero constant term");
  }
  TruncatedSeries r(order());
  const Rational inv0 = 1 / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) {
      if (coeffs_[static_cast<std::size_t>(i)] != 0) {
        acc += coeffs_[static_cast<std::size_t>(i)] * r.coeffs_[static_cast<std::size_t>(n - i)];
      }
    }
    r.coeffs_[static_cast<std::size_t>(n)] = -acc * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  TruncatedSeries result = constant(1, order());
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order())) + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  const int n_max = std::min(order(), rhs.order());
  std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
  for (int i = 0; i <= n_max; ++i) {
    const Rational& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= n_max; ++j) {
      const Rational& b = rhs.coeffs_[static_cast<std::size_t>(j)];
      if (b != 0) out[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (int n = 0; n <= order(); ++n) {
    const Rational& c = coeffs_[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    std::string term = invseq::to_string(c);
    if (n >= 1) term += n == 1 ? "*x" : "*x^" + std::to_string(n);
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries div(const TruncatedSeries& num, const TruncatedSeries& den) { return num * den.inverse(); }

TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den) { return div(num, den); }

TruncatedSeries sqrt1m4x(int order, SqrtKind kind) {
  // (1 + z)^alpha with z = -4x: c_n = c_{n-1} * (alpha - n + 1) / n * (-4).
  const Rational alpha = kind == SqrtKind::Inverse ? Rational(-1, 2) : Rational(1, 2);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * (alpha - n + 1) / n * -4;
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries compose_poly(const TruncatedSeries& s, const TruncatedSeries& p) {
  if (p[0] != 0) {
    throw Error(ErrorKind::BadComposition, "inner series must have zero constant term, got " + to_string(p[0]));
  }
  const int order = std::min(s.order(), p.order());
  TruncatedSeries out = TruncatedSeries::constant(s[order], order);
  for (int k = order - 1; k >= 0; --k) {
    out *= p;
    out += TruncatedSeries::constant(s[k], order);
  }
  return out;
}

TruncatedSeries geometric(int order) {
  return TruncatedSeries::from_function(order, [](int) { return Rational(1); });
}

TruncatedSeries catalan_series(int order) {
  // Coefficientwise solution of C = 1 + x C^2.
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) acc += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - 1 - i)];
    c[static_cast<std::size_t>(n)] = acc;
  }
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries fixed_point(const std::function<TruncatedSeries(const TruncatedSeries&)>& step,
                            const TruncatedSeries& start) {
  TruncatedSeries cur = start;
  for (int round = 0; round <= start.order() + 2; ++round) {
    TruncatedSeries next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::logic_error("fixed_point: no convergence at order " + std::to_string(start.order()));
}

// --- BivariateSeries ----------------------------------------------------------

BivariateSeries::BivariateSeries(int u_order, int x_order)
    : terms_(static_cast<std::size_t>(std::max(u_order, 0)) + 1, TruncatedSeries(x_order)) {}

BivariateSeries::BivariateSeries(std::vector<TruncatedSeries> by_u_power) : terms_(std::move(by_u_power)) {
  if (terms_.empty()) throw Error(ErrorKind::DomainError, "bivariate series needs at least the u^0 term");
}

BivariateSeries BivariateSeries::geometric_in_u(const TruncatedSeries& r, int u_order) {
  std::vector<TruncatedSeries> terms{TruncatedSeries::constant(1, r.order())};
  for (int t = 1; t <= u_order; ++t) terms.push_back(terms.back() * r);
  return BivariateSeries(std::move(terms));
}

BivariateSeries BivariateSeries::lift(const TruncatedSeries& s, int u_order) {
  BivariateSeries b(u_order, s.order());
  b.terms_[0] = s;
  return b;
}

const TruncatedSeries& BivariateSeries::u_coeff(int t) const { return terms_.at(static_cast<std::size_t>(t)); }
TruncatedSeries& BivariateSeries::u_coeff(int t) { return terms_.at(static_cast<std::size_t>(t)); }

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  terms_.resize(std::min(terms_.size(), rhs.terms_.size()));
  for (std::size_t t = 0; t < terms_.size(); ++t) terms_[t] += rhs.terms_[t];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  terms_.resize(std::min(terms_.size(), rhs.terms_.size()));
  for (std::size_t t = 0; t < terms_.size(); ++t) terms_[t] -= rhs.terms_[t];
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int u_order = std::min(a.u_order(), b.u_order());
  const int x_order = std::min(a.x_order(), b.x_order());
  BivariateSeries out(u_order, x_order);
  for (int i = 0; i <= u_order; ++i) {
    for (int j = 0; i + j <= u_order; ++j) out.terms_[static_cast<std::size_t>(i + j)] += a.terms_[i] * b.terms_[j];
  }
  return out;
}

BivariateSeries operator*(const TruncatedSeries& s, const BivariateSeries& a) {
  BivariateSeries out = a;
  for (auto& term : out.terms_) term *= s;
  return out;
}

// --- named series -------------------------------------------------------------

namespace {

TruncatedSeries x_series(int order) { return TruncatedSeries::monomial(1, order); }
TruncatedSeries one(int order) { return TruncatedSeries::constant(1, order); }
TruncatedSeries x_minus_x2(int order) { return x_series(order) - TruncatedSeries::monomial(2, order); }

// A_0 from the last-step decomposition of paths with at most one down step,
// which is pure or 0-tailed:
//   A_0 = 1 + sum_{t>=0} x A_t + sum_{t>=1} t (xC)^{t+1} (1 + x/(1-x)),
//   A_t = ((t+1) A_0 - t C) (xC)^t.
TruncatedSeries a0_by_decomposition(int order) {
  const auto c = catalan_series(order);
  const auto x = x_series(order);
  const auto xc = x * c;
  const auto tail = one(order) + x * geometric(order);  // 1 + x/(1-x)
  return fixed_point(
      [&](const TruncatedSeries& a0) {
        TruncatedSeries sum = one(order);
        TruncatedSeries xc_t = one(order);  // (xC)^t
        for (int t = 0; t <= order; ++t) {
          sum += x * (((t + 1) * a0 - Rational(t) * c) * xc_t);
          if (t >= 1) sum += Rational(t) * (xc_t * xc) * tail;
          xc_t *= xc;
        }
        return sum;
      },
      one(order));
}

// H_0 from the decomposition with H_t = (xC)^t H_0:
//   H_0 = 1 + sum_{t>=0} x H_t + sum_{t>=1} t x H_t + sum_{t>=1} t x^2/(1-x) x^t C^{t+1}.
TruncatedSeries h0_by_decomposition(int order) {
  const auto c = catalan_series(order);
  const auto x = x_series(order);
  const auto xc = x * c;
  const auto x2_geo = TruncatedSeries::monomial(2, order) * geometric(order);
  return fixed_point(
      [&](const TruncatedSeries& h0) {
        TruncatedSeries sum = one(order);
        TruncatedSeries xc_t = one(order);
        for (int t = 0; t <= order; ++t) {
          const auto ht = h0 * xc_t;
          sum += x * ht;
          if (t >= 1) {
            sum += Rational(t) * (x * ht);
            sum += Rational(t) * (x2_geo * xc_t * c);
          }
          xc_t *= xc;
        }
        return sum;
      },
      one(order));
}

// sum_{k>=2} sum_{a=1}^{s-1} (binom(s+k-a-1, k-1) - 1) x^k, the label count
// of a final complex down step of drop s.
TruncatedSeries complex_label_series(int s, int order) {
  return TruncatedSeries::from_function(order, [s](int k) {
    if (k < 2) return Rational(0);
    BigInt total = 0;
    for (int a = 1; a <= s - 1; ++a) total += binom(s + k - a - 1, k - 1) - 1;
    return Rational(total);
  });
}

// B~_0 = sum_{s>=2} [label series] x^s C^{s+1}.
TruncatedSeries b0_by_double_sum(int order) {
  const auto c = catalan_series(order);
  TruncatedSeries sum(order);
  for (int s = 2; s <= order; ++s) {
    sum += complex_label_series(s, order) * TruncatedSeries::monomial(s, order) * c.pow(s + 1);
  }
  return sum;
}

}  // namespace

std::string_view to_string(SeriesId id) noexcept {
  switch (id) {
    case SeriesId::A: return "A";
    case SeriesId::C: return "C";
    case SeriesId::D: return "D";
    case SeriesId::D0: return "D0";
    case SeriesId::E: return "E";
    case SeriesId::A0: return "A0";
    case SeriesId::B0: return "B0";
    case SeriesId::H0: return "H0";
  }
  return "?";
}

SeriesId parse_series_id(std::string_view text) {
  for (auto id : {SeriesId::A, SeriesId::C, SeriesId::D, SeriesId::D0, SeriesId::E, SeriesId::A0, SeriesId::B0,
                  SeriesId::H0}) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorKind::ParseError, "unknown series '" + std::string(text) + "' (A, C, D, D0, E, A0, B0, H0)");
}

TruncatedSeries named_series(SeriesId id, int order) {
  if (order < 0) throw Error(ErrorKind::DomainError, "series order must be nonnegative");
  const auto z = x_minus_x2(order);
  switch (id) {
    case SeriesId::A:
      return fixed_point([&](const TruncatedSeries& s) { return one(order) + z * s.pow(3); }, one(order));
    case SeriesId::C: return catalan_series(order);
    case SeriesId::D:
      return fixed_point([&](const TruncatedSeries& s) { return z * (one(order) + s).pow(3); }, TruncatedSeries(order));
    case SeriesId::D0:
      return fixed_point([&](const TruncatedSeries& s) { return z * (one(order) - s).pow(-2); }, TruncatedSeries(order));
    case SeriesId::E: {
      const auto y = x_series(order);
      return fixed_point([&](const TruncatedSeries& s) { return y * (one(order) - s).pow(-2); }, TruncatedSeries(order));
    }
    case SeriesId::A0: return a0_by_decomposition(order);
    case SeriesId::B0: return b0_by_double_sum(order);
    case SeriesId::H0: return h0_by_decomposition(order);
  }
  throw std::logic_error("named_series: unhandled id");
}

// --- identities ---------------------------------------------------------------

std::string_view to_string(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::A_CUBIC: return "A_CUBIC";
    case IdentityId::D_CUBIC: return "D_CUBIC";
    case IdentityId::LAGRANGE_E: return "LAGRANGE_E";
    case IdentityId::D_T_POWER: return "D_T_POWER";
    case IdentityId::CATALAN_FIX: return "CATALAN_FIX";
    case IdentityId::CATALAN_SQRT: return "CATALAN_SQRT";
    case IdentityId::A0_CLOSED: return "A0_CLOSED";
    case IdentityId::B0_CLOSED: return "B0_CLOSED";
    case IdentityId::G_COEFF: return "G_COEFF";
    case IdentityId::H0_CLOSED: return "H0_CLOSED";
    case IdentityId::H_COEFF: return "H_COEFF";
    case IdentityId::SUM_D_EXPANSION: return "SUM_D_EXPANSION";
  }
  return "?";
}

IdentityId parse_identity_id(std::string_view text) {
  for (auto id : kIdentityIds) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorKind::ParseError, "unknown identity '" + std::string(text) + "'");
}

namespace {

class Checker {
 public:
  explicit Checker(IdentityReport& report) : report_(report) {}

  void value(const std::string& check, std::optional<int> u, int power, const Rational& lhs, const Rational& rhs) {
    ++report_.checks;
    if (lhs == rhs || !report_.holds) {
      return;
    }
    report_.holds = false;
    report_.first_mismatch = Mismatch{check, u, power, to_string(lhs), to_string(rhs)};
  }

  void series(const std::string& check, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
              std::optional<int> u = std::nullopt) {
    const int order = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= order; ++n) value(check, u, n, lhs[n], rhs[n]);
  }

 private:
  IdentityReport& report_;
};

using Table = std::vector<std::vector<long>>;  // [n][t]

Table uvd_by_vox(int n_max) {
  Table table(static_cast<std::size_t>(n_max) + 1, std::vector<long>(static_cast<std::size_t>(n_max) + 1, 0));
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& s : enumerate_uvd(n)) ++table[n][static_cast<std::size_t>(uvd_vox(s.word()))];
  }
  return table;
}

template <typename Pred>
Table lf_by_height(int n_max, Pred pred) {
  Table table(static_cast<std::size_t>(n_max) + 1, std::vector<long>(static_cast<std::size_t>(n_max) + 1, 0));
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& q : enumerate_lf(n)) {
      if (pred(q)) ++table[n][static_cast<std::size_t>(q.height())];
    }
  }
  return table;
}

long table_at(const Table& table, int n, int t) {
  return t < static_cast<int>(table[n].size()) ? table[n][static_cast<std::size_t>(t)] : 0;
}

void verify_a_cubic(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto a = named_series(SeriesId::A, N);
  ck.series("A = 1 + (x-x^2) A^3", a, one(N) + x_minus_x2(N) * a.pow(3));
  ck.value("[x^0]A = 1", std::nullopt, 0, a[0], 1);
  for (int n = 1; n <= N; ++n) {
    BigInt total = 0;
    for (int t = 0; t <= n - 1; ++t) total += count_102_rank(n, t);
    ck.value("[x^n]A = sum_t count_102_rank(n,t)", std::nullopt, n, a[n], Rational(total));
  }
  for (int n = 1; n <= std::min(N, o.is_oracle_max); ++n) {
    const auto all = enumerate_is(n, {pattern_102()});
    ck.value("[x^n]A = |IS_n(102)| by enumeration", std::nullopt, n, a[n], Rational(all.size()));
  }
}

void verify_d_cubic(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto d = named_series(SeriesId::D, N);
  ck.series("D = (x-x^2)(1+D)^3", d, x_minus_x2(N) * (one(N) + d).pow(3));
  ck.series("D = A - 1", d, named_series(SeriesId::A, N) - one(N));
  for (int n = 1; n <= std::min(N, o.path_oracle_max); ++n) {
    ck.value("[x^n]D = |UVD_n| by enumeration", std::nullopt, n, d[n], Rational(enumerate_uvd(n).size()));
  }
}

void verify_lagrange_e(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto e = named_series(SeriesId::E, N);
  ck.series("E = y/(1-E)^2", e, x_series(N) * (one(N) - e).pow(-2));
  TruncatedSeries e_pow = e;  // E^{t+1}
  for (int t = 0; t <= o.u_order; ++t) {
    for (int n = 1; n <= N; ++n) {
      const Rational rhs = Rational(binom(3 * n - t - 2, n - t - 1) * (t + 1), BigInt(n));
      ck.value("[y^n]E^{t+1} = (t+1)/n binom(3n-t-2, n-t-1)", t, n, e_pow[n], rhs);
    }
    e_pow *= e;
  }
}

void verify_d_t_power(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto d0 = named_series(SeriesId::D0, N);
  const auto oracle = uvd_by_vox(std::min(N, o.path_oracle_max));
  TruncatedSeries dt = d0;  // D_t = D_0^{t+1}
  TruncatedSeries total(N);
  for (int t = 0; t <= N; ++t) {
    total += dt;
    if (t <= o.u_order) {
      for (int n = 1; n < static_cast<int>(oracle.size()); ++n) {
        ck.value("[x^n]D_0^{t+1} = |UVD_n with vox t| by enumeration", t, n, dt[n], Rational(table_at(oracle, n, t)));
      }
    }
    dt *= d0;
  }
  const auto d = named_series(SeriesId::D, N);
  ck.series("sum_t D_0^{t+1} = D", total, d);
  ck.series("D = D_0/(1-D_0)", d, d0 / (one(N) - d0));
}

void verify_sum_d_expansion(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto d0 = named_series(SeriesId::D0, N);
  TruncatedSeries lhs = d0;
  for (int t = 0; t <= o.u_order; ++t) {
    const auto coeffs = TruncatedSeries::from_function(N, [t](int n) {
      if (n < t + 1) return Rational(0);
      return Rational(binom(3 * n - t - 2, n - t - 1) * (t + 1), BigInt(n));
    });
    ck.series("D_0^{t+1} = sum_n (t+1)/n binom(3n-t-2,n-t-1) (x-x^2)^n", lhs, compose_poly(coeffs, x_minus_x2(N)), t);
    lhs *= d0;
  }
}

void verify_catalan_fix(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  ck.series("C = 1/(1-xC)", c, (one(N) - x * c).inverse());
  ck.series("C = 1 + xC^2", c, one(N) + x * c * c);
  ck.series("1 - C = -xC^2", one(N) - c, -(x * c * c));
  ck.series("C by fixed-point iteration", c,
            fixed_point([&](const TruncatedSeries& s) { return (one(N) - x * s).inverse(); }, one(N)));
  for (int n = 0; n <= N; ++n) ck.value("[x^n]C = Catalan(n)", std::nullopt, n, c[n], Rational(catalan(n)));
}

void verify_catalan_sqrt(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  const auto inv_sqrt = sqrt1m4x(N, SqrtKind::Inverse);
  const auto sqrt = sqrt1m4x(N, SqrtKind::Direct);
  ck.series("C/(1-xC^2) = (1-4x)^{-1/2}", c / (one(N) - x * c * c), inv_sqrt);
  ck.series("1 - 2xC = (1-4x)^{1/2}", one(N) - Rational(2) * (x * c), sqrt);
  ck.series("(1-4x)^{1/2} (1-4x)^{-1/2} = 1", sqrt * inv_sqrt, one(N));
  for (int n = 0; n <= N; ++n) {
    ck.value("[x^n](1-4x)^{-1/2} = binom(2n,n)", std::nullopt, n, inv_sqrt[n], Rational(binom(2 * n, n)));
  }
}

// A_t = ((t+1) A_0 - t C)(xC)^t for t = 0..T.
std::vector<TruncatedSeries> a_t_series(const TruncatedSeries& a0, int u_order) {
  const int N = a0.order();
  const auto c = catalan_series(N);
  const auto xc = x_series(N) * c;
  std::vector<TruncatedSeries> out;
  TruncatedSeries xc_t = one(N);
  for (int t = 0; t <= u_order; ++t) {
    out.push_back(((t + 1) * a0 - Rational(t) * c) * xc_t);
    xc_t *= xc;
  }
  return out;
}

void verify_a0_closed(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  const auto geo = geometric(N);
  const auto a0 = named_series(SeriesId::A0, N);
  const auto closed = c + TruncatedSeries::monomial(2, N) * c.pow(3) * geo * sqrt1m4x(N);
  ck.series("A_0 (decomposition) = C + x^2 C^3 / ((1-x) sqrt(1-4x))", a0, closed);
  ck.series("A_0 = (1 + x^3 C^4/(1-x)) / (1 - xC^2)", a0,
            (one(N) + TruncatedSeries::monomial(3, N) * c.pow(4) * geo) / (one(N) - x * c * c));

  const auto oracle = lf_by_height(std::min(N, o.lf_oracle_max), in_class_210a);
  const auto at = a_t_series(a0, o.u_order);
  const auto xc = x * c;
  for (int t = 0; t <= o.u_order; ++t) {
    const auto xc_t = xc.pow(t);
    ck.series("A_t = x^t C^{t+1} + (t+1)(A_0 - C) x^t C^t", at[t], xc_t * c + Rational(t + 1) * ((a0 - c) * xc_t), t);
    for (int n = 0; n < static_cast<int>(oracle.size()); ++n) {
      ck.value("[x^n]A_t = |LF^a_{n,t}| by enumeration", t, n, at[t][n], Rational(table_at(oracle, n, t)));
    }
  }
}

void verify_b0_closed(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  const auto geo = geometric(N);
  const auto b0 = named_series(SeriesId::B0, N);
  ck.series("B~_0 (double sum) = x^4 C^7/(1-x)", b0, TruncatedSeries::monomial(4, N) * c.pow(7) * geo);
  for (int s = 2; s <= N; ++s) {
    const auto per_s = (geo.pow(s) - Rational(s) * (x * geo) - one(N)) * TruncatedSeries::monomial(s, N) * c.pow(s + 1);
    ck.series("label sum for drop s = (1/(1-x)^s - sx/(1-x) - 1) x^s C^{s+1}",
              complex_label_series(s, N) * TruncatedSeries::monomial(s, N) * c.pow(s + 1), per_s, s);
  }
  const auto oracle = lf_by_height(std::min(N, o.lf_oracle_max), in_class_210b_final);
  TruncatedSeries bt = b0;
  for (int t = 0; t <= o.u_order; ++t) {
    for (int n = 0; n < static_cast<int>(oracle.size()); ++n) {
      ck.value("[x^n](xC)^t B~_0 = |LF~^b_{n,t}| by enumeration", t, n, bt[n], Rational(table_at(oracle, n, t)));
    }
    bt *= x * c;
  }
}

void verify_g_coeff(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const int T = o.u_order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  const auto geo = geometric(N);
  const auto inv_sqrt = sqrt1m4x(N);
  const auto xc = x * c;

  // [u^t]G as stated coefficientwise.
  std::vector<TruncatedSeries> formula;
  for (int t = 0; t <= T; ++t) {
    formula.push_back(Rational(t + 1) * (TruncatedSeries::monomial(t + 2, N) * c.pow(t + 3) * geo * inv_sqrt) +
                      TruncatedSeries::monomial(t, N) * c.pow(t + 1) +
                      TruncatedSeries::monomial(t + 3, N) * c.pow(t + 6) * geo -
                      TruncatedSeries::monomial(t + 3, N) * c.pow(5) * geo);
  }

  // Closed form in u, expanded per power of u.
  const auto geo_xc = BivariateSeries::geometric_in_u(xc, T);
  const auto geo_x = BivariateSeries::geometric_in_u(x, T);
  const BivariateSeries closed = (TruncatedSeries::monomial(2, N) * c.pow(3) * geo * inv_sqrt) * (geo_xc * geo_xc) +
                                 c * geo_xc + (TruncatedSeries::monomial(3, N) * c.pow(6) * geo) * geo_xc -
                                 (TruncatedSeries::monomial(3, N) * c.pow(5) * geo) * geo_x;

  // G = A(u,x) + B~(u,x)/(1-ux) from the component constructions.
  const auto a0 = named_series(SeriesId::A0, N);
  const auto b0 = named_series(SeriesId::B0, N);
  const BivariateSeries a_ux(a_t_series(a0, T));
  const BivariateSeries g_sum = a_ux + b0 * geo_xc * geo_x;

  const auto oracle = lf_by_height(std::min(N, o.lf_oracle_max), in_class_210);
  for (int t = 0; t <= T; ++t) {
    ck.series("[u^t]G formula = [u^t] of closed form in u", formula[t], closed.u_coeff(t), t);
    ck.series("[u^t]G formula = [u^t](A(u,x) + B(u,x))", formula[t], g_sum.u_coeff(t), t);
    for (int n = 0; n < static_cast<int>(oracle.size()); ++n) {
      ck.value("[x^n][u^t]G = |LF_{n,t}(210)| by enumeration", t, n, formula[t][n], Rational(table_at(oracle, n, t)));
    }
    for (int n = std::max(2, t + 1); n <= N + 1; ++n) {
      ck.value("[x^{n-1}][u^t]G = count_pair_rank(210, n, t)", t, n - 1, formula[t][n - 1],
               Rational(count_pair_rank(SecondPattern::P210, n, t, RankRange::Extended)));
    }
  }
}

void verify_h0_closed(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  const auto geo = geometric(N);
  const auto h0 = named_series(SeriesId::H0, N);
  ck.series("H_0 (decomposition) = (1-2x)/((1-x) sqrt(1-4x))", h0,
            (one(N) - Rational(2) * x) * geo * sqrt1m4x(N));
  ck.series("H_0 = (1 + x^3 C^4/(1-x)) / (1 - xC^2)", h0,
            (one(N) + TruncatedSeries::monomial(3, N) * c.pow(4) * geo) / (one(N) - x * c * c));
}

void verify_h_coeff(Checker& ck, const VerifyOptions& o) {
  const int N = o.order;
  const auto c = catalan_series(N);
  const auto x = x_series(N);
  const auto h0 = named_series(SeriesId::H0, N);
  const auto damp = one(N) - x * geometric(N);  // 1 - x - x^2 - ...
  const auto oracle = lf_by_height(std::min(N, o.lf_oracle_max), in_class_110);
  TruncatedSeries ht = h0;
  for (int t = 0; t <= o.u_order; ++t) {
    const auto central = TruncatedSeries::from_function(N, [t](int n) {
      return n < t ? Rational(0) : Rational(binom(2 * n - t, n - t));
    });
    ck.series("H_0 (xC)^t = (1-x-x^2-...) sum_n binom(2n-t,n-t) x^n", ht, damp * central, t);
    for (int n = 0; n < static_cast<int>(oracle.size()); ++n) {
      ck.value("[x^n][u^t]H = |LF_{n,t}(110)| by enumeration", t, n, ht[n], Rational(table_at(oracle, n, t)));
    }
    for (int n = std::max(2, t + 1); n <= N + 1; ++n) {
      ck.value("[x^{n-1}][u^t]H = count_pair_rank(110, n, t)", t, n - 1, ht[n - 1],
               Rational(count_pair_rank(SecondPattern::P110, n, t, RankRange::Extended)));
    }
    ht *= x * c;
  }
}

}  // namespace

IdentityReport verify_identity(IdentityId id, const VerifyOptions& options) {
  if (options.order < 1 || options.u_order < 0) {
    throw Error(ErrorKind::DomainError, "verify_identity: need order >= 1 and u_order >= 0");
  }
  IdentityReport report;
  report.id = id;
  Checker ck(report);
  switch (id) {
    case IdentityId::A_CUBIC: verify_a_cubic(ck, options); break;
    case IdentityId::D_CUBIC: verify_d_cubic(ck, options); break;
    case IdentityId::LAGRANGE_E: verify_lagrange_e(ck, options); break;
    case IdentityId::D_T_POWER: verify_d_t_power(ck, options); break;
    case IdentityId::CATALAN_FIX: verify_catalan_fix(ck, options); break;
    case IdentityId::CATALAN_SQRT: verify_catalan_sqrt(ck, options); break;
    case IdentityId::A0_CLOSED: verify_a0_closed(ck, options); break;
    case IdentityId::B0_CLOSED: verify_b0_closed(ck, options); break;
    case IdentityId::G_COEFF: verify_g_coeff(ck, options); break;
    case IdentityId::H0_CLOSED: verify_h0_closed(ck, options); break;
    case IdentityId::H_COEFF: verify_h_coeff(ck, options); break;
    case IdentityId::SUM_D_EXPANSION: verify_sum_d_expansion(ck, options); break;
  }
  return report;
}

}  // namespace invseq
