#pragma once

#include "invseq/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invseq {

/// Path from (0,0) to (2n,0) over u=(1,1), d=(1,-1), v=(0,-2), weakly above
/// the x-axis, without factors uv or vu, ending in d. Semilength n = #d + #v.
class UvdPath {
 public:
  explicit UvdPath(std::string_view word);  // validates; throws Error

  const std::string& word() const noexcept { return word_; }
  int semilength() const noexcept { return semilength_; }
  int vertical_steps() const noexcept;

  friend auto operator<=>(const UvdPath&, const UvdPath&) = default;

 private:
  std::string word_;
  int semilength_ = 0;
};

/// 2-Schroeder path (0,0) -> (n,2n) over N=(0,1), E=(1,0), H=(1,1), never
/// below y=2x, with no peak NE, no valley EN, and last step H.
class SchroederPath {
 public:
  explicit SchroederPath(std::string_view word);

  const std::string& word() const noexcept { return word_; }
  int semilength() const noexcept { return semilength_; }

  friend auto operator<=>(const SchroederPath&, const SchroederPath&) = default;

 private:
  std::string word_;
  int semilength_ = 0;
};

class DyckPath {
 public:
  explicit DyckPath(std::string_view word);

  const std::string& word() const noexcept { return word_; }
  int semilength() const noexcept { return static_cast<int>(word_.size() / 2); }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string word_;
};

struct PathStats {
  int vox = -1;   // valleys du on the x-axis; -1 for the empty word
  int block = 0;  // returns: d steps ending on the x-axis
};

UvdPath validate_uvd(std::string_view word);
SchroederPath validate_schroeder(std::string_view word);

PathStats uvd_stats(const UvdPath& path);

// Word-level statistics, also defined for the empty word and for any
// concatenation of UVD paths (used when paths are cut into factors).
int uvd_vox(std::string_view word);
int uvd_block(std::string_view word);
/// 1-based positions of the returns of `word`, left to right.
std::vector<int> uvd_return_positions(std::string_view word);

/// Returns of a Schroeder path: H steps ending on y = 2x.
int schroeder_block(const SchroederPath& path);

/// The linear map with matrix [[0,1],[-2,1]]: N->u, E->v, H->d.
UvdPath schroeder_to_uvd(const SchroederPath& path);
SchroederPath uvd_to_schroeder(const UvdPath& path);

inline constexpr int kDefaultPathGuard = 9;

std::vector<UvdPath> enumerate_uvd(int n, int guard = kDefaultPathGuard);
std::vector<SchroederPath> enumerate_schroeder(int n, int guard = kDefaultPathGuard);
std::vector<DyckPath> enumerate_dyck(int n, int guard = kDefaultPathGuard);

/// Dyck paths of semilength n whose final maximal descent has length exactly k:
/// k/n * binom(2n-k-1, n-1).
BigInt count_dyck_final_descent(int n, int k);

/// Length of the final run of d steps.
int final_descent_length(const DyckPath& path);
/// Number of d steps that end on the x-axis.
int dyck_returns(const DyckPath& path);

/// Lattice points visited by a step word over {u,d,v} or {N,E,H}.
std::vector<std::pair<int, int>> coordinates(std::string_view word);

}  // namespace invseq
