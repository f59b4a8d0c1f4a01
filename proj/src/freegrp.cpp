#include "twist/freegrp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "twist/errors.hpp"

namespace twist {

namespace {

std::uint64_t magnitude(std::int64_t e) {
  return e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
}

}  // namespace

Word Word::letter(std::uint32_t generator, std::int64_t exponent) {
  Word w;
  w.append(Syllable{generator, exponent});
  return w;
}

Word Word::from_letters(
    const std::vector<std::pair<std::uint32_t, std::int64_t>>& letters) {
  Word w;
  for (const auto& [g, e] : letters) w.append(Syllable{g, e});
  return w;
}

std::vector<std::pair<std::uint32_t, int>> Word::letters() const {
  std::vector<std::pair<std::uint32_t, int>> out;
  out.reserve(length_);
  for (const auto& s : syllables_) {
    int sign = s.exponent > 0 ? 1 : -1;
    for (std::uint64_t k = 0; k < magnitude(s.exponent); ++k)
      out.emplace_back(s.generator, sign);
  }
  return out;
}

std::uint32_t Word::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& s : syllables_) bound = std::max(bound, s.generator + 1);
  return bound;
}

void Word::check_length() const {
  if (length_ > kMaxWordLength)
    throw SizeLimitError("word length " + std::to_string(length_) +
                         " exceeds cap " + std::to_string(kMaxWordLength));
}

Word& Word::append(Syllable s) {
  if (s.exponent == 0) return *this;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    Syllable& last = syllables_.back();
    length_ -= magnitude(last.exponent);
    last.exponent += s.exponent;
    if (last.exponent == 0)
      syllables_.pop_back();
    else
      length_ += magnitude(last.exponent);
  } else {
    syllables_.push_back(s);
    length_ += magnitude(s.exponent);
  }
  check_length();
  return *this;
}

Word& Word::append(const Word& w) {
  if (&w == this) {
    Word copy = w;
    return append(copy);
  }
  for (const auto& s : w.syllables_) append(s);
  return *this;
}

Word Word::inverse() const {
  Word inv;
  inv.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    inv.syllables_.push_back(Syllable{it->generator, -it->exponent});
  inv.length_ = length_;
  return inv;
}

Word Word::power(std::int64_t k) const {
  if (k < 0) return inverse().power(-k);
  Word result;
  Word base = *this;
  auto n = static_cast<std::uint64_t>(k);
  while (n > 0) {
    if (n & 1U) result.append(base);
    n >>= 1U;
    if (n > 0) base.append(base);
  }
  return result;
}

FreeEndo::FreeEndo(std::size_t rank, std::vector<Word> images)
    : images_(std::move(images)) {
  if (images_.size() != rank)
    throw std::invalid_argument("endomorphism needs one image per generator");
  for (const auto& w : images_)
    if (w.generator_bound() > rank)
      throw std::out_of_range("image uses a generator outside the free basis");
}

FreeEndo FreeEndo::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i)
    images.push_back(Word::letter(static_cast<std::uint32_t>(i)));
  return FreeEndo(rank, std::move(images));
}

Word apply(const FreeEndo& f, const Word& w) {
  if (w.generator_bound() > f.rank())
    throw std::out_of_range("word uses a generator outside the free basis");
  Word out;
  for (const auto& s : w.syllables()) out.append(f.image(s.generator).power(s.exponent));
  return out;
}

FreeEndo compose(const FreeEndo& f, const FreeEndo& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<Word> images;
  images.reserve(g.rank());
  for (const auto& w : g.images()) images.push_back(apply(f, w));
  return FreeEndo(g.rank(), std::move(images));
}

FreeEndo power(const FreeEndo& f, unsigned d) {
  FreeEndo result = FreeEndo::identity(f.rank());
  for (unsigned k = 0; k < d; ++k) result = compose(result, f);
  return result;
}

std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t rank) {
  std::vector<std::int64_t> sums(rank, 0);
  for (const auto& s : w.syllables()) sums.at(s.generator) += s.exponent;
  return sums;
}

IntMatrix abelianization_matrix(const FreeEndo& f) {
  const std::size_t n = f.rank();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto sums = exponent_sums(f.image(j), n);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = static_cast<long>(sums[i]);
  }
  return m;
}

}  // namespace twist
