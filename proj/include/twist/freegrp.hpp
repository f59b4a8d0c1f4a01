#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "twist/exactla.hpp"

namespace twist {

/// Hard cap on the expanded length of any word.
inline constexpr std::uint64_t kMaxWordLength = 10'000'000;

/// A maximal run x_g^e (e != 0) inside a reduced word.
struct Syllable {
  std::uint32_t generator = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in a free group.
///
/// Stored as syllables: adjacent syllables have different generators, so the
/// expanded letter sequence never contains x x^-1. Appending reduces at the
/// seam, so every Word is reduced.
class Word {
 public:
  Word() = default;
  static Word letter(std::uint32_t generator, std::int64_t exponent = 1);
  /// Product of the given (generator, exponent) pairs, reduced.
  static Word from_letters(const std::vector<std::pair<std::uint32_t, std::int64_t>>& letters);

  bool empty() const noexcept { return syllables_.empty(); }
  std::uint64_t length() const noexcept { return length_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  /// Expanded form: one (generator, +-1) entry per letter.
  std::vector<std::pair<std::uint32_t, int>> letters() const;
  /// Largest generator index + 1, or 0 for the empty word.
  std::uint32_t generator_bound() const noexcept;

  Word& append(Syllable s);
  Word& append(const Word& w);
  Word inverse() const;
  Word power(std::int64_t k) const;

  friend Word operator*(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void check_length() const;

  std::vector<Syllable> syllables_;
  std::uint64_t length_ = 0;
};

/// Endomorphism of the free group of rank n, given by generator images.
class FreeEndo {
 public:
  FreeEndo() = default;
  /// Throws std::out_of_range if an image uses a generator >= rank.
  FreeEndo(std::size_t rank, std::vector<Word> images);
  static FreeEndo identity(std::size_t rank);

  std::size_t rank() const noexcept { return images_.size(); }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(std::size_t i) const { return images_.at(i); }

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  std::vector<Word> images_;
};

/// f(w): substitution of images, then free reduction.
Word apply(const FreeEndo& f, const Word& w);
/// (f o g)(x) = f(g(x)).
FreeEndo compose(const FreeEndo& f, const FreeEndo& g);
/// d-fold composite; d = 0 gives the identity.
FreeEndo power(const FreeEndo& f, unsigned d);

/// Column j is the exponent-sum vector of f(x_j).
IntMatrix abelianization_matrix(const FreeEndo& f);

/// Exponent-sum vector of a word over `rank` generators.
std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t rank);

}  // namespace twist
