#pragma once

// Brute-force reference implementations used only by the tests. They are
// written from the definitions, share no code with the library, and favour
// obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

// All inversion sequences of length n, by odometer in lexicographic order.
inline std::vector<Seq> all_is(int n) {
  std::vector<Seq> out;
  Seq e(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(e);
    int j = n - 1;
    while (j >= 0 && e[static_cast<std::size_t>(j)] == j) e[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++e[static_cast<std::size_t>(j)];
  }
  return out;
}

inline int cmp(int a, int b) { return (a > b) - (a < b); }

// Some k-subset of positions is order-isomorphic to p.
inline bool contains(const Seq& w, const Seq& p) {
  const std::size_t n = w.size();
  const std::size_t k = p.size();
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Seq idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) idx.push_back(static_cast<int>(i));
    }
    bool same = true;
    for (std::size_t a = 0; a < k && same; ++a) {
      for (std::size_t b = a + 1; b < k && same; ++b) same = cmp(w[idx[a]], w[idx[b]]) == cmp(p[a], p[b]);
    }
    if (same) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline std::vector<Seq> avoiding(int n, const std::vector<Seq>& patterns) {
  std::vector<Seq> out;
  for (auto& e : all_is(n)) {
    if (std::none_of(patterns.begin(), patterns.end(), [&](const Seq& p) { return contains(e, p); })) out.push_back(e);
  }
  return out;
}

inline std::vector<Seq> filter(const std::vector<Seq>& seqs, const std::vector<Seq>& patterns) {
  std::vector<Seq> out;
  for (const auto& e : seqs) {
    if (std::none_of(patterns.begin(), patterns.end(), [&](const Seq& p) { return contains(e, p); })) out.push_back(e);
  }
  return out;
}

// First descent position (1-based) with a virtual trailing -1.
inline int prmx(const Seq& e) {
  const int n = static_cast<int>(e.size());
  for (int p = 1; p <= n; ++p) {
    const int next = p < n ? e[static_cast<std::size_t>(p)] : -1;
    if (e[static_cast<std::size_t>(p - 1)] > next) return p;
  }
  return n;
}

inline int rank(const Seq& e) { return prmx(e) - *std::max_element(e.begin(), e.end()) - 1; }

inline std::map<int, long> by_rank(const std::vector<Seq>& seqs) {
  std::map<int, long> out;
  for (const auto& e : seqs) ++out[rank(e)];
  return out;
}

// Every arrangement of a multiset of letters, sorted.
inline std::vector<std::string> arrangements(std::string letters) {
  std::vector<std::string> out;
  std::sort(letters.begin(), letters.end());
  do out.push_back(letters);
  while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// UVD definition checked letter by letter.
inline bool is_uvd(const std::string& w) {
  if (w.empty() || w.back() != 'd') return false;
  int y = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    y += w[i] == 'u' ? 1 : w[i] == 'd' ? -1 : -2;
    if (y < 0) return false;
    if (i + 1 < w.size() && ((w[i] == 'u' && w[i + 1] == 'v') || (w[i] == 'v' && w[i + 1] == 'u'))) return false;
  }
  return y == 0;
}

// All UVD paths of semilength n: n+r ups, n-r downs and r verticals.
inline std::vector<std::string> uvd_paths(int n) {
  std::vector<std::string> out;
  for (int r = 0; r < n; ++r) {
    const auto letters = std::string(static_cast<std::size_t>(n + r), 'u') + std::string(static_cast<std::size_t>(n - r), 'd') +
                         std::string(static_cast<std::size_t>(r), 'v');
    for (auto& w : arrangements(letters)) {
      if (is_uvd(w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    // u < d < v
    const auto key = [](char c) { return c == 'u' ? 0 : c == 'd' ? 1 : 2; };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return key(x) < key(y); });
  });
  return out;
}

// Valleys du on the axis.
inline int vox(const std::string& w) {
  int y = 0;
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    y += w[i] == 'u' ? 1 : w[i] == 'd' ? -1 : -2;
    if (y == 0 && w[i] == 'd' && i + 1 < w.size() && w[i + 1] == 'u') ++count;
  }
  return count;
}

inline bool is_schroeder(const std::string& w, int n) {
  if (w.empty() || w.back() != 'H') return false;
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    x += w[i] != 'N';
    y += w[i] != 'E';
    if (y < 2 * x) return false;
    if (i + 1 < w.size() && ((w[i] == 'N' && w[i + 1] == 'E') || (w[i] == 'E' && w[i + 1] == 'N'))) return false;
  }
  return x == n && y == 2 * n;
}

inline std::vector<std::string> schroeder_paths(int n) {
  std::vector<std::string> out;
  for (int h = 1; h <= n; ++h) {
    const auto letters = std::string(static_cast<std::size_t>(2 * n - h), 'N') +
                         std::string(static_cast<std::size_t>(n - h), 'E') + std::string(static_cast<std::size_t>(h), 'H');
    for (auto& w : arrangements(letters)) {
      if (is_schroeder(w, n)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());  // E < H < N in ASCII; callers compare as sets
  return out;
}

// Diagonal steps ending on y = 2x.
inline int schroeder_returns(const std::string& w) {
  int x = 0;
  int y = 0;
  int count = 0;
  for (char c : w) {
    x += c != 'N';
    y += c != 'E';
    if (c == 'H' && y == 2 * x) ++count;
  }
  return count;
}

inline std::vector<std::string> dyck_paths(int n) {
  std::vector<std::string> out;
  for (auto& w : arrangements(std::string(static_cast<std::size_t>(n), 'd') + std::string(static_cast<std::size_t>(n), 'u'))) {
    int y = 0;
    bool ok = true;
    for (char c : w) {
      y += c == 'u' ? 1 : -1;
      ok = ok && y >= 0;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

inline long fibonacci(int k) {
  long a = 0;
  long b = 1;
  for (int i = 0; i < k; ++i) {
    const long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline long choose(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace oracle
