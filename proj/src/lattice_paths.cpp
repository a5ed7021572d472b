#include "invseq/lattice_paths.hpp"

#include "invseq/error.hpp"
#include "invseq/formulas.hpp"

#include <algorithm>

namespace invseq {

namespace {

int uvd_delta(char c) {
  switch (c) {
    case 'u': return 1;
    case 'd': return -1;
    case 'v': return -2;
    default: throw Error(ErrorKind::BadStep, std::string("UVD step must be u, d or v, got '") + c + "'");
  }
}

void check_guard(const char* what, int n, int guard) {
  if (n < 0) throw Error(ErrorKind::DomainError, std::string(what) + ": negative semilength");
  if (n > guard) {
    throw Error(ErrorKind::GuardExceeded, std::string(what) + ": n = " + std::to_string(n) +
                                              " exceeds guard " + std::to_string(guard));
  }
}

}  // namespace

// --- UVD --------------------------------------------------------------------

UvdPath::UvdPath(std::string_view word) : word_(word) {
  if (word_.empty()) throw Error(ErrorKind::BadEndpoint, "the empty word is not a UVD path");
  int x = 0;
  int h = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const char c = word_[i];
    h += uvd_delta(c);
    if (c != 'v') ++x;
    if (c != 'u') ++semilength_;
    if (i > 0) {
      const char prev = word_[i - 1];
      if (prev == 'u' && c == 'v') throw Error(ErrorKind::ForbiddenFactor, "uv in '" + word_ + "'");
      if (prev == 'v' && c == 'u') throw Error(ErrorKind::ForbiddenFactor, "vu in '" + word_ + "'");
    }
    if (h < 0) throw Error(ErrorKind::BelowAxis, "step " + std::to_string(i + 1) + " of '" + word_ + "'");
  }
  if (word_.back() != 'd') throw Error(ErrorKind::BadTerminal, "last step of '" + word_ + "' is not d");
  if (h != 0 || x != 2 * semilength_) {
    throw Error(ErrorKind::BadEndpoint, "'" + word_ + "' does not end at (2n, 0)");
  }
}

int UvdPath::vertical_steps() const noexcept {
  return static_cast<int>(std::count(word_.begin(), word_.end(), 'v'));
}

UvdPath validate_uvd(std::string_view word) { return UvdPath(word); }

int uvd_vox(std::string_view word) {
  if (word.empty()) return -1;
  int h = 0;
  int valleys = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    h += uvd_delta(word[i]);
    if (h == 0 && word[i] == 'd' && i + 1 < word.size() && word[i + 1] == 'u') ++valleys;
  }
  return valleys;
}

std::vector<int> uvd_return_positions(std::string_view word) {
  std::vector<int> out;
  int h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    h += uvd_delta(word[i]);
    if (h == 0 && word[i] == 'd') out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

int uvd_block(std::string_view word) { return static_cast<int>(uvd_return_positions(word).size()); }

PathStats uvd_stats(const UvdPath& path) { return {uvd_vox(path.word()), uvd_block(path.word())}; }

// --- Schroeder ---------------------------------------------------------------

SchroederPath::SchroederPath(std::string_view word) : word_(word) {
  if (word_.empty()) throw Error(ErrorKind::BadEndpoint, "the empty word is not a Schroeder path");
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const char c = word_[i];
    switch (c) {
      case 'N': ++y; break;
      case 'E': ++x; break;
      case 'H': ++x; ++y; break;
      default: throw Error(ErrorKind::BadStep, std::string("Schroeder step must be N, E or H, got '") + c + "'");
    }
    if (i > 0) {
      const char prev = word_[i - 1];
      if (prev == 'N' && c == 'E') throw Error(ErrorKind::ForbiddenFactor, "peak NE in '" + word_ + "'");
      if (prev == 'E' && c == 'N') throw Error(ErrorKind::ForbiddenFactor, "valley EN in '" + word_ + "'");
    }
    if (y < 2 * x) throw Error(ErrorKind::BelowAxis, "step " + std::to_string(i + 1) + " of '" + word_ + "'");
  }
  if (word_.back() != 'H') throw Error(ErrorKind::BadTerminal, "last step of '" + word_ + "' is not H");
  if (y != 2 * x) throw Error(ErrorKind::BadEndpoint, "'" + word_ + "' does not end on y = 2x");
  semilength_ = x;
}

SchroederPath validate_schroeder(std::string_view word) { return SchroederPath(word); }

int schroeder_block(const SchroederPath& path) {
  int x = 0;
  int y = 0;
  int returns = 0;
  for (char c : path.word()) {
    if (c != 'E') ++y;
    if (c != 'N') ++x;
    if (c == 'H' && y == 2 * x) ++returns;
  }
  return returns;
}

UvdPath schroeder_to_uvd(const SchroederPath& path) {
  std::string out = path.word();
  for (char& c : out) c = c == 'N' ? 'u' : c == 'E' ? 'v' : 'd';
  return UvdPath(out);
}

SchroederPath uvd_to_schroeder(const UvdPath& path) {
  std::string out = path.word();
  for (char& c : out) c = c == 'u' ? 'N' : c == 'v' ? 'E' : 'H';
  return SchroederPath(out);
}

// --- Dyck -------------------------------------------------------------------

DyckPath::DyckPath(std::string_view word) : word_(word) {
  int h = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const char c = word_[i];
    if (c != 'u' && c != 'd') throw Error(ErrorKind::BadStep, "Dyck steps are u and d");
    h += c == 'u' ? 1 : -1;
    if (h < 0) throw Error(ErrorKind::BelowAxis, "step " + std::to_string(i + 1) + " of '" + word_ + "'");
  }
  if (h != 0) throw Error(ErrorKind::BadEndpoint, "'" + word_ + "' does not return to the axis");
}

int final_descent_length(const DyckPath& path) {
  const auto& w = path.word();
  int k = 0;
  for (auto it = w.rbegin(); it != w.rend() && *it == 'd'; ++it) ++k;
  return k;
}

int dyck_returns(const DyckPath& path) {
  int h = 0;
  int returns = 0;
  for (char c : path.word()) {
    h += c == 'u' ? 1 : -1;
    if (h == 0) ++returns;
  }
  return returns;
}

BigInt count_dyck_final_descent(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw Error(ErrorKind::DomainError, "count_dyck_final_descent: need 1 <= k <= n, got n = " +
                                            std::to_string(n) + ", k = " + std::to_string(k));
  }
  return exact_div(BigInt(k) * binom(2 * n - k - 1, n - 1), BigInt(n));
}

// --- enumeration ------------------------------------------------------------

std::vector<UvdPath> enumerate_uvd(int n, int guard) {
  check_guard("enumerate_uvd", n, guard);
  std::vector<UvdPath> out;
  if (n == 0) return out;
  std::string word;
  // x = horizontal position, h = height, dv = #d + #v so far.
  auto rec = [&](auto&& self, int x, int h, int dv) -> void {
    if (x == 2 * n && h == 0 && dv == n && word.back() == 'd') {
      out.emplace_back(word);
      return;
    }
    for (char c : {'u', 'd', 'v'}) {
      if (!word.empty()) {
        const char prev = word.back();
        if ((prev == 'u' && c == 'v') || (prev == 'v' && c == 'u')) continue;
      }
      const int nx = x + (c != 'v');
      const int nh = h + uvd_delta(c);
      const int ndv = dv + (c != 'u');
      if (nx > 2 * n || nh < 0 || ndv > n) continue;
      word.push_back(c);
      self(self, nx, nh, ndv);
      word.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::vector<SchroederPath> enumerate_schroeder(int n, int guard) {
  check_guard("enumerate_schroeder", n, guard);
  std::vector<SchroederPath> out;
  if (n == 0) return out;
  std::string word;
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (x == n && y == 2 * n && word.back() == 'H') {
      out.emplace_back(word);
      return;
    }
    for (char c : {'N', 'E', 'H'}) {
      if (!word.empty()) {
        const char prev = word.back();
        if ((prev == 'N' && c == 'E') || (prev == 'E' && c == 'N')) continue;
      }
      const int nx = x + (c != 'N');
      const int ny = y + (c != 'E');
      if (nx > n || ny > 2 * n || ny < 2 * nx) continue;
      word.push_back(c);
      self(self, nx, ny);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<DyckPath> enumerate_dyck(int n, int guard) {
  check_guard("enumerate_dyck", n, guard);
  std::vector<DyckPath> out;
  std::string word;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.emplace_back(word);
      return;
    }
    if (ups < n) {
      word.push_back('u');
      self(self, ups + 1, downs);
      word.pop_back();
    }
    if (downs < ups) {
      word.push_back('d');
      self(self, ups, downs + 1);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<std::pair<int, int>> coordinates(std::string_view word) {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  int x = 0;
  int y = 0;
  for (char c : word) {
    switch (c) {
      case 'u': ++x; ++y; break;
      case 'd': ++x; --y; break;
      case 'v': y -= 2; break;
      case 'N': ++y; break;
      case 'E': ++x; break;
      case 'H': ++x; ++y; break;
      default: throw Error(ErrorKind::BadStep, std::string("unknown step '") + c + "'");
    }
    pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace invseq
