#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twist/exactla.hpp"
#include "twist/laurent.hpp"
#include "twist/parallel.hpp"

namespace twist {

/// Integer Seifert matrix of a knot: square, even size 2g, det(S - S^T) = +-1.
class SeifertMatrix {
 public:
  /// The empty (unknot) Seifert matrix.
  SeifertMatrix() = default;
  /// Throws InvariantError if `s` is not square of even size or
  /// det(S - S^T) != +-1.
  explicit SeifertMatrix(IntMatrix s);

  const IntMatrix& matrix() const noexcept { return s_; }
  std::size_t size() const noexcept { return s_.rows(); }
  std::size_t genus() const noexcept { return s_.rows() / 2; }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix s_;
};

/// canonicalize(det(tS - S^T)); 1 for the empty matrix.
CanonicalForm alexander_polynomial(const SeifertMatrix& s);

/// The (d-1)2g square block-tridiagonal presentation of H_1 of the d-fold
/// branched cover: S + S^T on the diagonal, -S^T above, -S below.
/// Generators gamma_ij are rows, ordered (j - 1) * 2g + (i - 1).
/// Throws std::invalid_argument for d < 2.
IntMatrix branched_presentation(const SeifertMatrix& s, unsigned d);

CokernelInvariants branched_homology(const SeifertMatrix& s, unsigned d);

struct ResultantCheck {
  unsigned d = 0;
  Integer snf_order;  // 0 encodes an infinite group
  Integer resultant;
  bool agree = false;
};

/// Compares the Smith-form order of H_1(M_d) against |Res(Delta, t^d - 1)|.
ResultantCheck resultant_order_check(const SeifertMatrix& s, unsigned d);

/// resultant_order_check for d = 2..dmax, in order of d.
std::vector<ResultantCheck> resultant_sweep(const SeifertMatrix& s, unsigned dmax,
                                            Execution exec = Execution::parallel);

struct MonodromyPower {
  IntMatrix h;                    // S^-1 S^T
  IntMatrix power_minus_identity; // H^n - I
  Integer det;                    // det(H^n - I)
};

/// Requires det(S) = +-1 (InvariantError otherwise) and n >= 1.
MonodromyPower monodromy_power_presentation(const SeifertMatrix& s, unsigned n);

struct CharacterJump {
  std::vector<Integer> character;  // values in [0, r) on gamma_ij, row order
  std::size_t handle = 0;          // i, 1-based
  std::size_t sheet = 0;           // j, 1-based; the pair is (j, j + 1)
  bool padded = false;             // j + 1 = d, where the character is taken as 0
  Integer difference;              // chi(gamma_ij) - chi(gamma_i(j+1)) mod r
  Integer order;                   // order of the difference in Z/r, >= 2
};

/// Picks a surjection chi of H_1(M_d) onto Z/r and the first handle/sheet
/// where chi changes between adjacent sheets. Unpadded pairs are scanned
/// first; the absent sheet j = d counts as 0 only for d = 2, where no
/// unpadded pair exists.
/// nullopt iff H_1(M_d) has no Z/r quotient.
std::optional<CharacterJump> character_jump(const SeifertMatrix& s, unsigned d,
                                            const Integer& r);

}  // namespace twist
