#include "invseq/inversion_sequence.hpp"

#include "invseq/error.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>

namespace invseq {

bool is_inversion_sequence(std::span<const int> entries) noexcept {
  if (entries.empty()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] > static_cast<int>(i)) return false;
  }
  return true;
}

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidSequence, "inversion sequence must be nonempty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
      throw Error(ErrorKind::InvalidSequence, "entry e_" + std::to_string(i + 1) + " = " +
                                                  std::to_string(entries_[i]) + " outside [0, " +
                                                  std::to_string(i) + "]");
    }
  }
}

int InversionSequence::at(std::size_t j) const {
  if (j < 1 || j > entries_.size()) {
    throw std::out_of_range("InversionSequence::at: index " + std::to_string(j));
  }
  return entries_[j - 1];
}

std::string InversionSequence::to_json() const { return nlohmann::json(entries_).dump(); }

std::string InversionSequence::to_compact() const {
  if (std::any_of(entries_.begin(), entries_.end(), [](int v) { return v > 9; })) return to_json();
  std::string out;
  for (int v : entries_) out.push_back(static_cast<char>('0' + v));
  return out;
}

// --- patterns ---------------------------------------------------------------

Pattern reduce(std::span<const int> word) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "cannot reduce an empty word");
  std::vector<int> values(word.begin(), word.end());
  if (std::any_of(values.begin(), values.end(), [](int v) { return v < 0; })) {
    throw Error(ErrorKind::InvalidPattern, "word entries must be nonnegative");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> reduced;
  reduced.reserve(word.size());
  for (int v : word) {
    reduced.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()));
  }
  return Pattern(std::move(reduced));
}

Pattern::Pattern(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw Error(ErrorKind::EmptyWord, "pattern must be nonempty");
  if (*std::min_element(word_.begin(), word_.end()) < 0) {
    throw Error(ErrorKind::InvalidPattern, "pattern entries must be nonnegative");
  }
  const int top = *std::max_element(word_.begin(), word_.end());
  for (int v = 0; v <= top; ++v) {
    if (std::find(word_.begin(), word_.end(), v) == word_.end()) {
      throw Error(ErrorKind::InvalidPattern, "pattern word is not reduced");
    }
  }
}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::EmptyWord, "empty pattern text");
  if (text.front() == '[') {
    auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array()) {
      throw Error(ErrorKind::ParseError, "pattern: expected JSON array of integers");
    }
    std::vector<int> word;
    for (const auto& v : parsed) {
      if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "pattern: non-integer entry");
      word.push_back(v.get<int>());
    }
    return Pattern(std::move(word));
  }
  std::vector<int> word;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "pattern: expected digits, got '" + std::string(text) + "'");
    }
    word.push_back(c - '0');
  }
  return Pattern(std::move(word));
}

std::string Pattern::to_string() const {
  if (std::any_of(word_.begin(), word_.end(), [](int v) { return v > 9; })) {
    return nlohmann::json(word_).dump();
  }
  std::string out;
  for (int v : word_) out.push_back(static_cast<char>('0' + v));
  return out;
}

const Pattern& pattern_102() {
  static const Pattern p({1, 0, 2});
  return p;
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

// Extends a partial occurrence: chosen[0..depth) are word indices matched to
// pattern positions 0..depth-1. Each new index must compare with every earlier
// one exactly as the pattern letters compare.
bool extend_occurrence(std::span<const int> word, std::span<const int> pat, std::vector<std::size_t>& chosen,
                       std::size_t depth, std::size_t start, std::size_t last_limit) {
  const std::size_t k = pat.size();
  if (depth == k) return true;
  const std::size_t remaining = k - depth;
  for (std::size_t i = start; i + remaining <= last_limit; ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s) {
      ok = sign(word[chosen[s]] - word[i]) == sign(pat[s] - pat[depth]);
    }
    if (!ok) continue;
    chosen[depth] = i;
    if (extend_occurrence(word, pat, chosen, depth + 1, i + 1, last_limit)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern(std::span<const int> word, const Pattern& pattern) {
  if (pattern.length() > word.size()) return false;
  std::vector<std::size_t> chosen(pattern.length());
  return extend_occurrence(word, pattern.word(), chosen, 0, 0, word.size());
}

namespace {

// Occurrences through the last letter: pattern positions 0..k-2 are matched
// among word[0..last), each also compared against word[last] up front.
bool extend_to_last(std::span<const int> word, std::span<const int> pat, std::vector<std::size_t>& chosen,
                    std::size_t depth, std::size_t start) {
  const std::size_t k = pat.size();
  const std::size_t last = word.size() - 1;
  if (depth == k - 1) return true;
  for (std::size_t i = start; i + (k - 1 - depth) <= last; ++i) {
    if (sign(word[i] - word[last]) != sign(pat[depth] - pat[k - 1])) continue;
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s) {
      ok = sign(word[chosen[s]] - word[i]) == sign(pat[s] - pat[depth]);
    }
    if (!ok) continue;
    chosen[depth] = i;
    if (extend_to_last(word, pat, chosen, depth + 1, i + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern_ending_at_last(std::span<const int> word, const Pattern& pattern) {
  const std::size_t k = pattern.length();
  if (k > word.size()) return false;
  std::vector<std::size_t> chosen(k);
  return extend_to_last(word, pattern.word(), chosen, 0, 0);
}

// --- statistics -------------------------------------------------------------

int prmx(std::span<const int> e) {
  for (std::size_t p = 0; p < e.size(); ++p) {
    const int next = p + 1 < e.size() ? e[p + 1] : -1;
    if (e[p] > next) return static_cast<int>(p + 1);
  }
  // Unreachable for nonnegative entries: the sentinel always produces a descent.
  return static_cast<int>(e.size());
}

int max_value(std::span<const int> e) { return e.empty() ? 0 : *std::max_element(e.begin(), e.end()); }

int rank_of(std::span<const int> e) { return prmx(e) - max_value(e) - 1; }

SeqStats stats(const InversionSequence& e, StatsMode mode) {
  SeqStats s;
  s.max_val = max_value(e.entries());
  s.prmx = prmx(e.entries());
  s.rank = s.prmx - s.max_val - 1;
  s.rank_defined = !contains_pattern(e, pattern_102());
  if (mode == StatsMode::Strict && !s.rank_defined) {
    throw Error(ErrorKind::RankUndefined, "rank requested for " + e.to_json() + ", which contains 102");
  }
  return s;
}

// --- enumeration ------------------------------------------------------------

std::vector<InversionSequence> enumerate_is(int n, std::span<const Pattern> avoid, int guard) {
  if (n < 1) throw Error(ErrorKind::DomainError, "enumerate_is: n must be positive");
  if (n > guard) {
    throw Error(ErrorKind::GuardExceeded,
                "enumerate_is: n = " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  }
  std::vector<InversionSequence> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  // Containment is monotone under appending, so a prefix that already contains
  // a pattern is pruned; only occurrences through the new last letter are new.
  auto rec = [&](auto&& self) -> void {
    const int j = static_cast<int>(prefix.size());
    if (j == n) {
      out.emplace_back(prefix);
      return;
    }
    for (int v = 0; v <= j; ++v) {
      prefix.push_back(v);
      const bool bad = std::any_of(avoid.begin(), avoid.end(), [&](const Pattern& p) {
        return contains_pattern_ending_at_last(prefix, p);
      });
      if (!bad) self(self);
      prefix.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<InversionSequence> enumerate_is(int n, std::initializer_list<Pattern> avoid, int guard) {
  return enumerate_is(n, std::span<const Pattern>(avoid.begin(), avoid.size()), guard);
}

}  // namespace invseq
