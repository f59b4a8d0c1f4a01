#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twist/laurent.hpp"
#include "twist/parallel.hpp"

namespace twist {

/// Dense row-major matrix with entries of type T.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<T>& data() const noexcept { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
DenseMatrix<T>::DenseMatrix(
    std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

using IntMatrix = DenseMatrix<Integer>;
using LambdaMatrix = DenseMatrix<LaurentPoly>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& a, unsigned n);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Inverse of a matrix with determinant +-1. Throws InvariantError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// D = U * A * V with U, V unimodular and D diagonal.
struct SmithDecomposition {
  /// min(rows, cols) invariant factors, nonnegative, each dividing the next
  /// nonzero one, zeros last.
  std::vector<Integer> diagonal;
  IntMatrix left;   // U, rows x rows
  IntMatrix right;  // V, cols x cols
  std::size_t rows = 0;
  std::size_t cols = 0;

  IntMatrix diagonal_matrix() const;
};

/// Deterministic: pivots on the entry of least nonzero absolute value,
/// ties broken by lowest row then lowest column.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Structure of coker(A : Z^cols -> Z^rows).
struct CokernelInvariants {
  std::vector<Integer> torsion;  // each > 1, each dividing the next
  std::size_t free_rank = 0;

  bool is_finite() const noexcept { return free_rank == 0; }
  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// Group order; 0 encodes an infinite group.
  Integer order() const;
  /// "0", "Z/3", "Z/2 + Z/4", "Z^2", "Z/3 + Z".
  std::string to_string() const;
  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

CokernelInvariants cokernel_invariants(const IntMatrix& a);
CokernelInvariants cokernel_invariants(const SmithDecomposition& snf);

/// Character on the row generators of the group presented by `a` (relations
/// are columns) that kills every relation and maps onto Z/r. Values are in
/// [0, r). nullopt iff the group has no cyclic quotient of order r.
/// Throws std::invalid_argument for r < 2.
std::optional<std::vector<Integer>> surjection_onto_cyclic(const IntMatrix& a,
                                                           const Integer& r);

/// Determinant over Z[s, s^-1] by Bareiss elimination with exact division.
LaurentPoly determinant(const LambdaMatrix& a);

/// det(sI - H) with nonnegative exponents, via Hessenberg reduction over Q.
/// Independent of the Z[s, s^-1] determinant and much faster for large H.
LaurentPoly characteristic_polynomial(const IntMatrix& h);

/// The presentation matrix sI - H.
LambdaMatrix characteristic_presentation(const IntMatrix& h);

inline constexpr std::size_t kDefaultMinorCap = 100'000;

/// Generators of the elementary ideal (maximal minors, in lexicographic order
/// of the retained column sets) and their gcd.
struct MinorIdeal {
  std::vector<LaurentPoly> generators;
  CanonicalForm delta;
};

/// For n <= m the n x n minors of an n x m matrix; for n > m the zero ideal.
/// Throws SizeLimitError when C(m, n) exceeds `cap`.
MinorIdeal maximal_minor_gcd(const LambdaMatrix& p,
                             Execution exec = Execution::parallel,
                             std::size_t cap = kDefaultMinorCap);

/// Number of column subsets C(m, n), saturating at SIZE_MAX.
std::size_t binomial(std::size_t m, std::size_t n);

/// Rank over the fraction field of Z[s, s^-1].
std::size_t rank_over_fractions(const LambdaMatrix& p);

std::string to_string(const IntMatrix& a);  // "[[1, 0], [0, 1]]"

}  // namespace twist
