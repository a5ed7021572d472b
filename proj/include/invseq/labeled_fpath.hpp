#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace invseq {

/// One labeled step (a; b_1, ..., b_k). A rise step has parts == {1}; a down
/// step has a >= 1 and nonpositive parts summing to b.
struct LabeledStep {
  int a = 0;
  std::vector<int> parts{1};

  int b() const noexcept;
  int semilength() const noexcept { return static_cast<int>(parts.size()); }
  bool is_rise() const noexcept { return parts.size() == 1 && parts[0] == 1; }

  /// Canonical "(a; b1,...,bk)"; rise steps keep their "(a; 1)" label.
  std::string label() const;

  friend auto operator<=>(const LabeledStep&, const LabeledStep&) = default;
};

LabeledStep north();
LabeledStep rise(int a);
LabeledStep down(int a, std::vector<int> parts);

/// A lattice path from the origin whose steps lie in
/// F = {(a,1) : a >= 0} u {(a,b) : a >= 1, b <= 0}, never below y = x.
class LabeledFPath {
 public:
  LabeledFPath() = default;  // the single-point path
  explicit LabeledFPath(std::vector<LabeledStep> steps);  // validates; throws Error

  const std::vector<LabeledStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  int semilength() const noexcept;
  /// y - x at the final lattice point.
  int height() const noexcept;
  std::pair<int, int> endpoint() const noexcept;
  std::vector<std::pair<int, int>> points() const;

  /// Path with the last step dropped; requires a nonempty path.
  LabeledFPath without_last() const;
  LabeledFPath with_step(LabeledStep step) const;  // validated

  std::string to_json() const;  // {"steps":[{"a":..,"parts":[..]},..]}
  static LabeledFPath from_json(const std::string& text);

  friend auto operator<=>(const LabeledFPath&, const LabeledFPath&) = default;

 private:
  std::vector<LabeledStep> steps_;
};

LabeledFPath validate_lf(std::vector<LabeledStep> steps);

struct LfStats {
  int semilength = 0;
  int height = 0;
};

LfStats lf_stats(const LabeledFPath& path);

enum class StepClass { North, Up, DownPure, DownZeroTailed, DownComplex };

const char* to_string(StepClass c) noexcept;
StepClass classify_step(const LabeledStep& step);
inline bool is_down(StepClass c) noexcept {
  return c == StepClass::DownPure || c == StepClass::DownZeroTailed || c == StepClass::DownComplex;
}

/// At most one down step, which (if present) is pure or 0-tailed.
bool in_class_210a(const LabeledFPath& path);
/// Exactly one down step, complex, followed only by north steps.
bool in_class_210b(const LabeledFPath& path);
/// Exactly one down step, complex, and it is the last step.
bool in_class_210b_final(const LabeledFPath& path);
bool in_class_210(const LabeledFPath& path);
/// No complex down step; every 0-tailed down step is preceded only by north
/// or up steps; no north step after any down step.
bool in_class_110(const LabeledFPath& path);

inline constexpr int kDefaultLfGuard = 7;

/// Every labeled F-path of semilength exactly n, ordered lexicographically by
/// step list with steps compared on (a, parts).
std::vector<LabeledFPath> enumerate_lf(int n, int guard = kDefaultLfGuard);

}  // namespace invseq
