#pragma once

#include "invseq/inversion_sequence.hpp"
#include "invseq/labeled_fpath.hpp"
#include "invseq/lattice_paths.hpp"

#include <string>
#include <string_view>

namespace invseq {

/// LF_n -> IS_{n+1}(102), with height(Q) = rank(phi(Q)).
InversionSequence phi(const LabeledFPath& path);
/// Inverse of phi; throws PatternViolation if `e` contains 102.
LabeledFPath phi_inv(const InversionSequence& e);

/// LF_n -> UVD_{n+1}, with height(Q) = vox(psi(Q)).
UvdPath psi(const LabeledFPath& path);
LabeledFPath psi_inv(const UvdPath& path);

/// SP_n -> IS_n(102), the composite phi o psi^{-1} o M.
InversionSequence schroeder_to_is(const SchroederPath& path);

/// Square/domino tiling of a 1 x L board, as a word over {S, D}.
class Tiling {
 public:
  explicit Tiling(std::string_view word);  // letters S and D only

  const std::string& word() const noexcept { return word_; }
  int board_length() const noexcept;

  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  std::string word_;
};

/// IS_n(102, 012) -> tilings of a 1 x (2n-2) board.
Tiling is_to_tiling(const InversionSequence& e);
InversionSequence tiling_to_is(const Tiling& tiling, int n);

/// All tilings of a board of the given length, lexicographic with D < S.
std::vector<Tiling> enumerate_tilings(int board_length);

}  // namespace invseq
