#include "invseq/labeled_fpath.hpp"

#include "invseq/error.hpp"

#include <algorithm>
#include <numeric>
#include <nlohmann/json.hpp>

namespace invseq {

int LabeledStep::b() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string LabeledStep::label() const {
  std::string out = "(" + std::to_string(a) + ";";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i == 0 ? " " : ",") + std::to_string(parts[i]);
  }
  return out + ")";
}

LabeledStep north() { return {0, {1}}; }
LabeledStep rise(int a) { return {a, {1}}; }
LabeledStep down(int a, std::vector<int> parts) { return {a, std::move(parts)}; }

namespace {

void check_step(const LabeledStep& s, std::size_t index) {
  const std::string where = "step " + std::to_string(index + 1) + " " + s.label();
  if (s.parts.empty()) throw Error(ErrorKind::BadLabel, where + " has no parts");
  const int b = s.b();
  const bool in_f = (b == 1 && s.a >= 0) || (b <= 0 && s.a >= 1);
  if (!in_f) throw Error(ErrorKind::StepNotInF, where + " is not in F");
  if (b == 1 && !s.is_rise()) throw Error(ErrorKind::BadLabel, where + ": a rise step is labeled (a; 1)");
  if (b <= 0 && std::any_of(s.parts.begin(), s.parts.end(), [](int p) { return p > 0; })) {
    throw Error(ErrorKind::BadLabel, where + ": down-step parts must be nonpositive");
  }
}

}  // namespace

LabeledFPath::LabeledFPath(std::vector<LabeledStep> steps) : steps_(std::move(steps)) {
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    check_step(steps_[i], i);
    x += steps_[i].a;
    y += steps_[i].b();
    if (y < x) {
      throw Error(ErrorKind::BelowDiagonal, "step " + std::to_string(i + 1) + " ends at (" + std::to_string(x) +
                                                ", " + std::to_string(y) + ") below y = x");
    }
  }
}

LabeledFPath validate_lf(std::vector<LabeledStep> steps) { return LabeledFPath(std::move(steps)); }

int LabeledFPath::semilength() const noexcept {
  int total = 0;
  for (const auto& s : steps_) total += s.semilength();
  return total;
}

std::pair<int, int> LabeledFPath::endpoint() const noexcept {
  int x = 0;
  int y = 0;
  for (const auto& s : steps_) {
    x += s.a;
    y += s.b();
  }
  return {x, y};
}

int LabeledFPath::height() const noexcept {
  const auto [x, y] = endpoint();
  return y - x;
}

std::vector<std::pair<int, int>> LabeledFPath::points() const {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  for (const auto& s : steps_) pts.emplace_back(pts.back().first + s.a, pts.back().second + s.b());
  return pts;
}

LabeledFPath LabeledFPath::without_last() const {
  if (steps_.empty()) throw std::logic_error("without_last on the empty path");
  LabeledFPath out;
  out.steps_.assign(steps_.begin(), steps_.end() - 1);
  return out;
}

LabeledFPath LabeledFPath::with_step(LabeledStep step) const {
  auto steps = steps_;
  steps.push_back(std::move(step));
  return LabeledFPath(std::move(steps));
}

std::string LabeledFPath::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : steps_) steps.push_back({{"a", s.a}, {"parts", s.parts}});
  return nlohmann::json{{"steps", steps}}.dump();
}

LabeledFPath LabeledFPath::from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("steps") || !doc["steps"].is_array()) {
    throw Error(ErrorKind::ParseError, "labeled F-path: expected {\"steps\":[...]}");
  }
  std::vector<LabeledStep> steps;
  for (const auto& s : doc["steps"]) {
    if (!s.is_object() || !s.contains("a") || !s.contains("parts") || !s["a"].is_number_integer() ||
        !s["parts"].is_array()) {
      throw Error(ErrorKind::ParseError, "labeled F-path: each step needs integer \"a\" and array \"parts\"");
    }
    LabeledStep step{s["a"].get<int>(), {}};
    for (const auto& p : s["parts"]) {
      if (!p.is_number_integer()) throw Error(ErrorKind::ParseError, "labeled F-path: non-integer part");
      step.parts.push_back(p.get<int>());
    }
    steps.push_back(std::move(step));
  }
  return LabeledFPath(std::move(steps));
}

LfStats lf_stats(const LabeledFPath& path) { return {path.semilength(), path.height()}; }

// --- taxonomy ---------------------------------------------------------------

const char* to_string(StepClass c) noexcept {
  switch (c) {
    case StepClass::North: return "North";
    case StepClass::Up: return "Up";
    case StepClass::DownPure: return "DownPure";
    case StepClass::DownZeroTailed: return "DownZeroTailed";
    case StepClass::DownComplex: return "DownComplex";
  }
  return "?";
}

StepClass classify_step(const LabeledStep& step) {
  if (step.is_rise()) return step.a == 0 ? StepClass::North : StepClass::Up;
  if (step.parts.size() == 1) return StepClass::DownPure;
  const bool zero_tail = std::all_of(step.parts.begin() + 1, step.parts.end(), [](int p) { return p == 0; });
  return zero_tail ? StepClass::DownZeroTailed : StepClass::DownComplex;
}

namespace {

std::vector<StepClass> classes_of(const LabeledFPath& path) {
  std::vector<StepClass> out;
  out.reserve(path.steps().size());
  for (const auto& s : path.steps()) out.push_back(classify_step(s));
  return out;
}

// Index of the unique down step, or -1 if none, or -2 if several.
long unique_down_index(const std::vector<StepClass>& cls) {
  long found = -1;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!is_down(cls[i])) continue;
    if (found != -1) return -2;
    found = static_cast<long>(i);
  }
  return found;
}

}  // namespace

bool in_class_210a(const LabeledFPath& path) {
  const auto cls = classes_of(path);
  const long d = unique_down_index(cls);
  if (d == -1) return true;
  if (d == -2) return false;
  return cls[static_cast<std::size_t>(d)] != StepClass::DownComplex;
}

bool in_class_210b(const LabeledFPath& path) {
  const auto cls = classes_of(path);
  const long d = unique_down_index(cls);
  if (d < 0 || cls[static_cast<std::size_t>(d)] != StepClass::DownComplex) return false;
  return std::all_of(cls.begin() + d + 1, cls.end(), [](StepClass c) { return c == StepClass::North; });
}

bool in_class_210b_final(const LabeledFPath& path) {
  const auto cls = classes_of(path);
  const long d = unique_down_index(cls);
  return d >= 0 && cls[static_cast<std::size_t>(d)] == StepClass::DownComplex &&
         static_cast<std::size_t>(d) + 1 == cls.size();
}

bool in_class_210(const LabeledFPath& path) { return in_class_210a(path) || in_class_210b(path); }

bool in_class_110(const LabeledFPath& path) {
  bool seen_down = false;
  for (const auto& s : path.steps()) {
    const StepClass c = classify_step(s);
    switch (c) {
      case StepClass::DownComplex: return false;
      case StepClass::DownZeroTailed:
        if (seen_down) return false;
        break;
      case StepClass::North:
        if (seen_down) return false;
        break;
      default: break;
    }
    if (is_down(c)) seen_down = true;
  }
  return true;
}

// --- enumeration ------------------------------------------------------------

namespace {

// Compositions of `total` into exactly k nonnegative parts, each negated.
void nonpositive_compositions(int total, int k, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (total == 0) out.push_back(acc);
    return;
  }
  for (int c = 0; c <= total; ++c) {
    acc.push_back(-c);
    nonpositive_compositions(total - c, k - 1, acc, out);
    acc.pop_back();
  }
}

// Every labeled step that keeps a path at height h on or above y = x and uses
// at most `budget` units of semilength, sorted by (a, parts).
std::vector<LabeledStep> admissible_steps(int h, int budget) {
  std::vector<LabeledStep> out;
  for (int a = 0; a <= h + 1; ++a) out.push_back(rise(a));
  for (int a = 1; a <= h; ++a) {
    for (int k = 1; k <= budget; ++k) {
      for (int depth = 0; depth <= h - a; ++depth) {
        std::vector<int> acc;
        std::vector<std::vector<int>> parts;
        nonpositive_compositions(depth, k, acc, parts);
        for (auto& p : parts) out.push_back(down(a, std::move(p)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LabeledFPath> enumerate_lf(int n, int guard) {
  if (n < 0) throw Error(ErrorKind::DomainError, "enumerate_lf: negative semilength");
  if (n > guard) {
    throw Error(ErrorKind::GuardExceeded,
                "enumerate_lf: n = " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  }
  std::vector<LabeledFPath> out;
  std::vector<LabeledStep> steps;
  auto rec = [&](auto&& self, int h, int budget) -> void {
    if (budget == 0) {
      out.emplace_back(steps);
      return;
    }
    for (auto& s : admissible_steps(h, budget)) {
      const int next_h = h + s.b() - s.a;
      const int next_budget = budget - s.semilength();
      steps.push_back(std::move(s));
      self(self, next_h, next_budget);
      steps.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace invseq
