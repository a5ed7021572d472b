#pragma once

#include "invseq/bigint.hpp"
#include "invseq/inversion_sequence.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace invseq {

/// Second pattern tau in the doubly-avoiding counts IS_{n,t}(102, tau).
enum class SecondPattern { P101, P001, P011, P012, P021, P120, P201, P210, P110 };

inline constexpr std::array<SecondPattern, 9> kSecondPatterns = {
    SecondPattern::P101, SecondPattern::P001, SecondPattern::P011, SecondPattern::P012, SecondPattern::P021,
    SecondPattern::P120, SecondPattern::P201, SecondPattern::P210, SecondPattern::P110};

std::string_view to_string(SecondPattern tau) noexcept;
SecondPattern parse_second_pattern(std::string_view text);  // "012" -> P012
Pattern as_pattern(SecondPattern tau);

/// Binomial coefficient with binom(a,b) = 0 whenever b < 0, b > a or a < 0.
BigInt binom(long a, long b);
/// Fibonacci numbers, F_0 = 0, F_1 = 1; k must be nonnegative.
BigInt fib(long k);
/// Ballot number k/(2j+k) * binom(2j+k, j) = [x^j] C(x)^k; ballot(0,0) = 1.
BigInt ballot(long j, long k);
BigInt catalan(long n);
BigInt pow2(long e);

/// |IS_{n,t}(102)| for n >= 1, 0 <= t <= n-1.
BigInt count_102_rank(int n, int t);

/// Which ranks a pair formula may be evaluated at. `Standard` is 0 <= t <= n-2;
/// `Extended` additionally admits t = n-1 for tau in {210, 110}, whose
/// closed forms are stated on that wider range.
enum class RankRange { Standard, Extended };

/// |IS_{n,t}(102, tau)| by the closed form for tau.
BigInt count_pair_rank(SecondPattern tau, int n, int t, RankRange range = RankRange::Standard);

/// |IS_n(102, tau)|: the closed forms for t <= n-2 plus the rank n-1 row,
/// which holds only the all-zero sequence (every tau here avoids it).
BigInt count_pair_total(SecondPattern tau, int n);

/// |{e in IS_{n,t}(102,201) : max(e) = m}|, split by whether e avoids 101
/// (`contains_101 = false`, valid for 1 <= m <= n-t-1) or contains it
/// (`contains_101 = true`, valid for n >= 4 and 1 <= m <= n-t-3).
BigInt count_201_by_max(int n, int t, int m, bool contains_101);

/// |A_{n,t}| = binom(2n-t-3, n-1), where A_{n,t} holds the e in
/// IS_{n,t}(102,120) with e_{max(e)+t} < max(e).
BigInt count_A_subset(int n, int t);

/// Membership predicate for A_{n,t} on a sequence already known to avoid 102
/// and 120 (checked here anyway).
bool in_A_subset(const InversionSequence& e);

}  // namespace invseq
