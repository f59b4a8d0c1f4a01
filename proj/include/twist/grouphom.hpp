#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twist/exactla.hpp"
#include "twist/freegrp.hpp"

namespace twist {

/// Permutation of {0, ..., m-1}. Products compose right to left:
/// (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  /// Throws InvariantError unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);
  /// 0-indexed disjoint or overlapping cycles, multiplied right to left.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<std::uint32_t>>& cycles);
  /// x -> x + k mod r.
  static Perm rotation(std::size_t r, std::int64_t k);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_.at(x); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;
  bool is_even() const;
  Perm inverse() const;
  Perm power(std::int64_t k) const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// 1-indexed cycle notation, e.g. "(1 3 2)(4 5)"; "()" is the identity.
/// Cycles are multiplied right to left. Throws ParseError.
Perm parse_cycles(std::string_view text, std::size_t degree);
/// Canonical cycle string: each cycle starts at its least point, cycles
/// ordered by least point, fixed points omitted.
std::string to_cycle_string(const Perm& p);

/// Finite target group of a homomorphism.
struct GroupTarget {
  enum class Kind { cyclic, alternating, symmetric };
  Kind kind = Kind::cyclic;
  std::uint32_t parameter = 1;  // r for Z/r, m for A_m and S_m

  static GroupTarget cyclic(std::uint32_t r) { return {Kind::cyclic, r}; }
  static GroupTarget alternating(std::uint32_t m) { return {Kind::alternating, m}; }
  static GroupTarget symmetric(std::uint32_t m) { return {Kind::symmetric, m}; }

  /// Degree of the permutation representation used for elements
  /// (Z/r is realised by rotations of r points).
  std::size_t degree() const noexcept { return parameter; }
  /// |G|, saturating at UINT64_MAX.
  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  std::string name() const;  // "Z/3", "A5", "S4"
  friend bool operator==(const GroupTarget&, const GroupTarget&) = default;
};

/// Parses "Z/6", "A5", "S4". Throws ParseError.
GroupTarget parse_target(std::string_view text);

/// Element of a cyclic target as an integer in [0, r).
std::uint32_t cyclic_value(const Perm& p);

/// Homomorphism from a free group of finite rank into a finite group,
/// given by generator images.
class FiniteHom {
 public:
  FiniteHom() = default;
  /// Throws InvariantError if an image lies outside the target.
  FiniteHom(GroupTarget target, std::vector<Perm> images);
  /// Cyclic target with integer images.
  static FiniteHom cyclic(std::uint32_t r, const std::vector<std::int64_t>& values);

  std::size_t rank() const noexcept { return images_.size(); }
  const GroupTarget& target() const noexcept { return target_; }
  const std::vector<Perm>& images() const noexcept { return images_; }
  const Perm& image(std::size_t i) const { return images_.at(i); }

 private:
  GroupTarget target_;
  std::vector<Perm> images_;
};

struct Presentation {
  std::size_t rank = 0;
  std::vector<Word> relators;
};

Perm evaluate(const FiniteHom& hom, const Word& w);

/// Indices of relators not mapped to the identity.
std::vector<std::size_t> verify_homomorphism(const FiniteHom& hom,
                                             const Presentation& pres);

inline constexpr std::uint64_t kMaxClosureOrder = 1'000'000;
inline constexpr std::uint64_t kMaxRegularDimension = 10'000;

/// Elements of the image subgroup in breadth-first order from the identity,
/// multiplying on the right by generator images in index order.
/// Throws SizeLimitError if the target order exceeds kMaxClosureOrder.
std::vector<Perm> image_elements(const FiniteHom& hom);
std::uint64_t generated_subgroup_order(const FiniteHom& hom);
bool is_surjective(const FiniteHom& hom);

/// alpha(f(x_i)) == alpha(x_i) for every generator.
bool check_compatibility(const FreeEndo& f, const FiniteHom& alpha);

std::uint64_t regular_representation_dimension(const GroupTarget& target);
/// Permutation matrix of left multiplication by g on the listed elements:
/// entry (index(g h), index(h)) = 1.
IntMatrix regular_matrix(const std::vector<Perm>& elements, const Perm& g);

}  // namespace twist
