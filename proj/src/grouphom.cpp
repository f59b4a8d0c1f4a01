#include "twist/grouphom.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twist/errors.hpp"

namespace twist {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InvariantError("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> images = identity(degree).images_;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] >= degree) throw InvariantError("cycle point out of range");
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    result = result * Perm(std::move(images));
  }
  return result;
}

Perm Perm::rotation(std::size_t r, std::int64_t k) {
  if (r == 0) throw std::invalid_argument("rotation of zero points");
  auto shift = static_cast<std::int64_t>(r);
  std::int64_t kk = ((k % shift) + shift) % shift;
  std::vector<std::uint32_t> images(r);
  for (std::size_t x = 0; x < r; ++x)
    images[x] = static_cast<std::uint32_t>((static_cast<std::int64_t>(x) + kk) % shift);
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Perm::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x]] = static_cast<std::uint32_t>(x);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::power(std::int64_t k) const {
  if (k < 0) return inverse().power(-k);
  Perm result = identity(degree());
  Perm base = *this;
  auto n = static_cast<std::uint64_t>(k);
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
  Perm r;
  r.images_.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) r.images_[x] = p.images_[q.images_[x]];
  return r;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("cycle notation: " + what, 1, pos + 1);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) fail("empty permutation");
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) {
          pos = start;
          fail("point out of range 1.." + std::to_string(degree));
        }
        ++pos;
      }
      if (value == 0) {
        pos = start;
        fail("points are 1-indexed");
      }
      auto point = static_cast<std::uint32_t>(value - 1);
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
        pos = start;
        fail("repeated point in cycle");
      }
      cycle.push_back(point);
    }
    cycles.push_back(std::move(cycle));
  }
  return Perm::from_cycles(degree, cycles);
}

std::string to_cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += "(";
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = p(x);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::uint64_t GroupTarget::order() const {
  if (kind == Kind::cyclic) return parameter;
  unsigned __int128 f = 1;
  for (std::uint32_t k = 2; k <= parameter; ++k) {
    f *= k;
    if (f > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  if (kind == Kind::alternating && parameter >= 2) f /= 2;
  return static_cast<std::uint64_t>(f);
}

bool GroupTarget::contains(const Perm& p) const {
  if (p.degree() != degree()) return false;
  switch (kind) {
    case Kind::cyclic:
      return p == Perm::rotation(parameter, p(0));
    case Kind::alternating:
      return p.is_even();
    case Kind::symmetric:
      return true;
  }
  return false;
}

std::string GroupTarget::name() const {
  switch (kind) {
    case Kind::cyclic:
      return "Z/" + std::to_string(parameter);
    case Kind::alternating:
      return "A" + std::to_string(parameter);
    case Kind::symmetric:
      return "S" + std::to_string(parameter);
  }
  return {};
}

GroupTarget parse_target(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  auto number = [&](std::string_view digits, std::size_t column) -> std::uint32_t {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("target: expected a positive integer", 1, column);
    auto v = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
    if (v == 0) throw ParseError("target: order must be positive", 1, column);
    return v;
  };
  if (trimmed.starts_with("Z/")) return GroupTarget::cyclic(number(trimmed.substr(2), 3));
  if (trimmed.starts_with("A")) return GroupTarget::alternating(number(trimmed.substr(1), 2));
  if (trimmed.starts_with("S")) return GroupTarget::symmetric(number(trimmed.substr(1), 2));
  throw ParseError("target: expected Z/r, Am or Sm", 1, 1);
}

std::uint32_t cyclic_value(const Perm& p) { return p(0); }

FiniteHom::FiniteHom(GroupTarget target, std::vector<Perm> images)
    : target_(target), images_(std::move(images)) {
  for (const auto& p : images_)
    if (!target_.contains(p))
      throw InvariantError(to_cycle_string(p) + " is not an element of " + target_.name());
}

FiniteHom FiniteHom::cyclic(std::uint32_t r, const std::vector<std::int64_t>& values) {
  std::vector<Perm> images;
  images.reserve(values.size());
  for (auto v : values) images.push_back(Perm::rotation(r, v));
  return FiniteHom(GroupTarget::cyclic(r), std::move(images));
}

Perm evaluate(const FiniteHom& hom, const Word& w) {
  if (w.generator_bound() > hom.rank())
    throw std::out_of_range("word uses a generator outside the homomorphism's domain");
  Perm result = Perm::identity(hom.target().degree());
  for (const auto& s : w.syllables()) result = result * hom.image(s.generator).power(s.exponent);
  return result;
}

std::vector<std::size_t> verify_homomorphism(const FiniteHom& hom,
                                             const Presentation& pres) {
  std::vector<std::size_t> failed;
  for (std::size_t k = 0; k < pres.relators.size(); ++k)
    if (!evaluate(hom, pres.relators[k]).is_identity()) failed.push_back(k);
  return failed;
}

std::vector<Perm> image_elements(const FiniteHom& hom) {
  if (hom.target().order() > kMaxClosureOrder)
    throw SizeLimitError("closure enumeration: |" + hom.target().name() +
                         "| exceeds " + std::to_string(kMaxClosureOrder));
  std::vector<Perm> elements{Perm::identity(hom.target().degree())};
  std::map<Perm, std::size_t> index{{elements.front(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : hom.images()) {
      Perm next = elements[head] * gen;
      if (index.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::uint64_t generated_subgroup_order(const FiniteHom& hom) {
  return image_elements(hom).size();
}

bool is_surjective(const FiniteHom& hom) {
  return generated_subgroup_order(hom) == hom.target().order();
}

bool check_compatibility(const FreeEndo& f, const FiniteHom& alpha) {
  if (f.rank() != alpha.rank())
    throw std::invalid_argument("endomorphism and homomorphism ranks differ");
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (evaluate(alpha, f.image(i)) != alpha.image(i)) return false;
  return true;
}

std::uint64_t regular_representation_dimension(const GroupTarget& target) {
  return target.order();
}

IntMatrix regular_matrix(const std::vector<Perm>& elements, const Perm& g) {
  if (elements.size() > kMaxRegularDimension)
    throw SizeLimitError("regular representation dimension exceeds " +
                         std::to_string(kMaxRegularDimension));
  std::map<Perm, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  IntMatrix m(elements.size(), elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    auto it = index.find(g * elements[k]);
    if (it == index.end()) throw std::invalid_argument("element set is not closed under g");
    m(it->second, k) = 1;
  }
  return m;
}

}  // namespace twist
