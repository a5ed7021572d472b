#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

/// Finite integer sequence e_1..e_n with 0 <= e_j <= j-1.
///
/// Storage is 0-based; `at(j)` uses the 1-based indexing of the usual
/// combinatorial notation so index formulas can be written verbatim.
class InversionSequence {
 public:
  explicit InversionSequence(std::vector<int> entries);
  InversionSequence(std::initializer_list<int> entries)
      : InversionSequence(std::vector<int>(entries)) {}

  std::size_t length() const noexcept { return entries_.size(); }
  int at(std::size_t j) const;  // 1-based
  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& vec() const noexcept { return entries_; }

  std::string to_json() const;  // "[0,0,1]"
  std::string to_compact() const;  // "001" (digits only when all entries <= 9)

  friend auto operator<=>(const InversionSequence&, const InversionSequence&) = default;

 private:
  std::vector<int> entries_;
};

bool is_inversion_sequence(std::span<const int> entries) noexcept;

/// A reduced word over {0..k-1}: every value below the maximum occurs.
class Pattern {
 public:
  explicit Pattern(std::vector<int> word);  // throws InvalidPattern unless already reduced
  static Pattern parse(std::string_view text);  // "102" or "[1,0,2]"

  std::size_t length() const noexcept { return word_.size(); }
  std::span<const int> word() const noexcept { return word_; }
  std::string to_string() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> word_;
};

/// Order-isomorphic relabeling of `word` onto {0..d-1}.
Pattern reduce(std::span<const int> word);

bool contains_pattern(std::span<const int> word, const Pattern& pattern);
inline bool contains_pattern(const InversionSequence& e, const Pattern& pattern) {
  return contains_pattern(e.entries(), pattern);
}
inline bool avoids(const InversionSequence& e, const Pattern& pattern) {
  return !contains_pattern(e, pattern);
}

/// True iff some occurrence of `pattern` uses the last letter of `word`.
bool contains_pattern_ending_at_last(std::span<const int> word, const Pattern& pattern);

enum class StatsMode { Lenient, Strict };

struct SeqStats {
  int max_val = 0;
  int prmx = 1;
  int rank = 0;
  /// False when the sequence contains 102; `rank` is then only arithmetic.
  bool rank_defined = true;
};

/// Position of the first descent, with the virtual sentinel e_{n+1} = -1.
int prmx(std::span<const int> e);
int max_value(std::span<const int> e);
/// prmx - max - 1 without any containment check.
int rank_of(std::span<const int> e);

SeqStats stats(const InversionSequence& e, StatsMode mode = StatsMode::Lenient);

inline constexpr int kDefaultIsGuard = 11;

/// Every e in IS_n avoiding all of `avoid`, in lexicographic order.
std::vector<InversionSequence> enumerate_is(int n, std::span<const Pattern> avoid,
                                            int guard = kDefaultIsGuard);
std::vector<InversionSequence> enumerate_is(int n, std::initializer_list<Pattern> avoid,
                                            int guard = kDefaultIsGuard);

const Pattern& pattern_102();

}  // namespace invseq
