#include "invseq/formulas.hpp"

#include "invseq/error.hpp"


namespace invseq {

std::string_view to_string(SecondPattern tau) noexcept {
  switch (tau) {
    case SecondPattern::P101: return "101";
    case SecondPattern::P001: return "001";
    case SecondPattern::P011: return "011";
    case SecondPattern::P012: return "012";
    case SecondPattern::P021: return "021";
    case SecondPattern::P120: return "120";
    case SecondPattern::P201: return "201";
    case SecondPattern::P210: return "210";
    case SecondPattern::P110: return "110";
  }
  return "?";
}

SecondPattern parse_second_pattern(std::string_view text) {
  for (SecondPattern tau : kSecondPatterns) {
    if (to_string(tau) == text) return tau;
  }
  throw Error(ErrorKind::ParseError, "unsupported second pattern '" + std::string(text) +
                                         "' (expected one of 101 001 011 012 021 120 201 210 110)");
}

Pattern as_pattern(SecondPattern tau) { return Pattern::parse(to_string(tau)); }

// --- integer primitives -----------------------------------------------------

BigInt binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: the running product is binom(a-b+i, i)
  }
  return result;
}

BigInt fib(long k) {
  if (k < 0) throw Error(ErrorKind::DomainError, "fib: negative index " + std::to_string(k));
  BigInt a = 0;
  BigInt b = 1;
  for (long i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt ballot(long j, long k) {
  if (j < 0 || k < 0) throw Error(ErrorKind::DomainError, "ballot: negative argument");
  if (j == 0) return 1;
  if (k == 0) return 0;
  return exact_div(BigInt(k) * binom(2 * j + k, j), BigInt(2 * j + k));
}

BigInt catalan(long n) { return ballot(n, 1); }

BigInt pow2(long e) {
  if (e < 0) throw Error(ErrorKind::DomainError, "pow2: negative exponent");
  return BigInt(1) << static_cast<unsigned>(e);
}

// --- rank theorem -----------------------------------------------------------

BigInt count_102_rank(int n, int t) {
  if (n < 1 || t < 0 || t > n - 1) {
    throw Error(ErrorKind::DomainError, "count_102_rank: need n >= 1 and 0 <= t <= n-1, got n = " +
                                            std::to_string(n) + ", t = " + std::to_string(t));
  }
  BigInt total = 0;
  for (long j = t + 1; j <= n; ++j) {
    BigInt term = exact_div(BigInt(t + 1) * binom(3 * j - t - 2, j - t - 1), BigInt(j)) * binom(j, n - j);
    if ((n - j) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// --- pair formulas ----------------------------------------------------------

namespace {

BigInt formula_101(long n, long t) {
  BigInt sum = 0;
  for (long i = 1; i <= n - t - 1; ++i) sum += binom(n, i) * binom(n - t + i - 2, 2 * i - 1);
  return exact_div(BigInt(t + 1) * sum, BigInt(n));
}

BigInt formula_021(long n, long t) {
  BigInt total = BigInt(t + 1) * (pow2(n - t - 2) - (n - t - 1));
  for (long m = 1; m <= n - t - 1; ++m) {
    total += exact_div(BigInt(t + 1) * binom(2 * m + t, m), BigInt(m + t + 1));
  }
  return total;
}

BigInt formula_120(long n, long t) { return binom(2 * n - t - 2, n - t - 1) - binom(2 * n - 2 * t - 3, n - t - 1); }

BigInt a_201(long n, long t, long m) {
  return exact_div(BigInt(t + 1) * binom(2 * m + t, m), BigInt(m + t + 1)) * binom(n - t - 2, m - 1);
}

BigInt b_201(long n, long t, long m) {
  BigInt total = BigInt(t + 1) * (pow2(n - m - t - 2) - 1);
  for (long j = 1; j <= m - 1; ++j) {
    for (long s = 0; s <= t; ++s) {
      // Dyck paths of semilength m+s+1 ending in u d^{m+s-j+1}.
      const BigInt prefixes = exact_div(BigInt(m + s - j + 1) * binom(m + j + s, j), BigInt(m + s + 1));
      for (long k = 0; k <= n - m - t - 3; ++k) {
        total += (pow2(k + 1) - 1) * prefixes * binom(n + j - m - t - k - 4, j - 1);
      }
    }
  }
  return total;
}

BigInt formula_201(long n, long t) {
  BigInt total = 0;
  for (long m = 1; m <= n - t - 1; ++m) total += a_201(n, t, m);
  for (long m = 1; m <= n - t - 3; ++m) total += b_201(n, t, m);
  return total;
}

BigInt formula_210(long n, long t) {
  BigInt total = ballot(n - t - 1, t + 1);
  BigInt central = 0;
  for (long i = 0; i <= n - t - 3; ++i) central += binom(2 * i + t + 3, i);
  total += BigInt(t + 1) * central;
  for (long i = 0; i <= n - t - 4; ++i) total += ballot(i, t + 6) - ballot(i, 5);
  return total;
}

BigInt formula_110(long n, long t) {
  BigInt total = binom(2 * n - t - 2, n - t - 1);
  for (long i = 2; i <= n - t; ++i) total -= binom(2 * n - t - 2 * i, n - t - i);
  return total;
}

}  // namespace

BigInt count_pair_rank(SecondPattern tau, int n, int t, RankRange range) {
  const bool wide = range == RankRange::Extended && (tau == SecondPattern::P210 || tau == SecondPattern::P110);
  const int t_max = wide ? n - 1 : n - 2;
  if (n < 2 || t < 0 || t > t_max) {
    throw Error(ErrorKind::DomainError, "count_pair_rank(" + std::string(to_string(tau)) +
                                            "): need n >= 2 and 0 <= t <= " + std::to_string(t_max) +
                                            ", got n = " + std::to_string(n) + ", t = " + std::to_string(t));
  }
  switch (tau) {
    case SecondPattern::P101: return formula_101(n, t);
    case SecondPattern::P001: return pow2(n - t - 2);
    case SecondPattern::P011: return fib(2L * n - 2L * t - 2);
    case SecondPattern::P012: return BigInt(t + 1) * fib(2L * n - 2L * t - 3);
    case SecondPattern::P021: return formula_021(n, t);
    case SecondPattern::P120: return formula_120(n, t);
    case SecondPattern::P201: return formula_201(n, t);
    case SecondPattern::P210: return formula_210(n, t);
    case SecondPattern::P110: return formula_110(n, t);
  }
  throw std::logic_error("count_pair_rank: unhandled pattern");
}

BigInt count_pair_total(SecondPattern tau, int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "count_pair_total: need n >= 1, got " + std::to_string(n));
  BigInt total = 1;
  for (int t = 0; t <= n - 2; ++t) total += count_pair_rank(tau, n, t);
  return total;
}

BigInt count_201_by_max(int n, int t, int m, bool contains_101) {
  const auto domain = [&](const std::string& need) {
    return Error(ErrorKind::DomainError, "count_201_by_max: need " + need + ", got n = " + std::to_string(n) +
                                             ", t = " + std::to_string(t) + ", m = " + std::to_string(m));
  };
  if (n < 2 || t < 0 || t > n - 2) throw domain("n >= 2 and 0 <= t <= n-2");
  if (!contains_101) {
    if (m < 1 || m > n - t - 1) throw domain("1 <= m <= n-t-1");
    return a_201(n, t, m);
  }
  if (n < 4 || m < 1 || m > n - t - 3) throw domain("n >= 4 and 1 <= m <= n-t-3");
  return b_201(n, t, m);
}

BigInt count_A_subset(int n, int t) {
  if (n < 2 || t < 0 || t > n - 2) {
    throw Error(ErrorKind::DomainError, "count_A_subset: need n >= 2 and 0 <= t <= n-2, got n = " +
                                            std::to_string(n) + ", t = " + std::to_string(t));
  }
  return binom(2L * n - t - 3, n - 1);
}

bool in_A_subset(const InversionSequence& e) {
  static const Pattern p120({1, 2, 0});
  if (contains_pattern(e, pattern_102()) || contains_pattern(e, p120)) return false;
  const int m = max_value(e.entries());
  const int t = rank_of(e.entries());
  const long idx = static_cast<long>(m) + t;
  if (idx < 1 || idx > static_cast<long>(e.length())) return false;
  return e.at(static_cast<std::size_t>(idx)) < m;
}

}  // namespace invseq
