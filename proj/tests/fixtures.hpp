#pragma once

#include "invseq/labeled_fpath.hpp"

#include <vector>

// The 19-step labeled F-path of semilength 24 and height 3 used as the
// running example for both bijections.
inline std::vector<invseq::LabeledStep> worked_example_steps() {
  using invseq::down;
  using invseq::north;
  using invseq::rise;
  return {north(),  north(), north(), rise(1), rise(3), north(), north(), north(),          north(),
          down(2, {0}), north(), north(), down(1, {-1}), north(), north(), north(), north(),
          down(1, {0, 0, 0}), down(1, {0, -1, 0, -1})};
}

inline invseq::LabeledFPath worked_example() { return invseq::LabeledFPath(worked_example_steps()); }

inline invseq::LabeledFPath worked_example_prefix(std::size_t k) {
  auto steps = worked_example_steps();
  steps.resize(k);
  return invseq::LabeledFPath(steps);
}

inline const char* worked_example_is = "0000144446779797998788664";
inline const char* worked_example_uvd = "uduududuuddduduuuududuuduuduuuuduuuuuduuuuuuuuudvvvdvvvvvvd";
