#pragma once

#include <cstdint>
#include <random>

#include "twist/exactla.hpp"
#include "twist/freegrp.hpp"
#include "twist/laurent.hpp"
#include "twist/seifert.hpp"

namespace twist::testing {

// Set from --seed=N or TWIST_SEED; fixed default otherwise.
std::uint64_t seed();

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline IntMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(g, -bound, bound);
  return m;
}

inline LaurentPoly random_poly(std::mt19937_64& g, int max_width, long bound, bool allow_zero = false) {
  for (;;) {
    int w = static_cast<int>(uniform(g, 0, max_width));
    std::vector<Integer> c;
    for (int i = 0; i <= w; ++i) c.emplace_back(uniform(g, -bound, bound));
    LaurentPoly p(uniform(g, -3, 3), std::move(c));
    if (allow_zero || !p.is_zero()) return p;
  }
}

// Product of random elementary row operations: a random element of GL(n, Z).
inline IntMatrix random_unimodular(std::mt19937_64& g, std::size_t n, int steps) {
  IntMatrix u = identity_matrix(n);
  for (int k = 0; k < steps; ++k) {
    std::size_t i = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(n) - 1));
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
      continue;
    }
    long f = uniform(g, -2, 2);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  }
  return u;
}

// Random Seifert matrix of size 2g: a seed with S - S^T = J, congruent by a
// random unimodular P, plus a random symmetric perturbation.
inline SeifertMatrix random_seifert(std::mt19937_64& g, std::size_t genus, long bound = 2) {
  const std::size_t n = 2 * genus;
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long v = uniform(g, -bound, bound);
      s(i, j) = v;
      s(j, i) = v;
    }
  for (std::size_t k = 0; k < genus; ++k) s(2 * k, 2 * k + 1) += 1;
  IntMatrix p = random_unimodular(g, n, 3);
  return SeifertMatrix(p.transpose() * s * p);
}

inline Word random_word(std::mt19937_64& g, std::size_t rank, std::size_t max_len) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> letters;
  std::size_t len = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(max_len)));
  for (std::size_t k = 0; k < len; ++k)
    letters.emplace_back(static_cast<std::uint32_t>(uniform(g, 0, static_cast<long>(rank) - 1)),
                         uniform(g, 0, 1) ? 1 : -1);
  return Word::from_letters(letters);
}

// Composition of random Nielsen moves: an automorphism of the free group.
inline FreeEndo random_automorphism(std::mt19937_64& g, std::size_t rank, int moves) {
  std::vector<Word> images;
  for (std::uint32_t i = 0; i < rank; ++i) images.push_back(Word::letter(i));
  for (int k = 0; k < moves; ++k) {
    std::size_t i = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(rank) - 1));
    switch (uniform(g, 0, 2)) {
      case 0:
        images[i] = images[i].inverse();
        break;
      case 1: {
        std::size_t j = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(rank) - 1));
        std::swap(images[i], images[j]);
        break;
      }
      default: {
        std::size_t j = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(rank) - 2));
        if (j >= i) ++j;
        Word other = uniform(g, 0, 1) ? images[j] : images[j].inverse();
        images[i] = uniform(g, 0, 1) ? images[i] * other : other * images[i];
      }
    }
  }
  return FreeEndo(rank, std::move(images));
}

}  // namespace twist::testing
