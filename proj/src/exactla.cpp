#include "twist/exactla.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "twist/errors.hpp"

namespace twist {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

template <typename Op>
IntMatrix elementwise(const IntMatrix& a, const IntMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = op(a(i, j), b(i, j));
  return c;
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, [](const Integer& x, const Integer& y) -> Integer { return x + y; });
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  return elementwise(a, b, [](const Integer& x, const Integer& y) -> Integer { return x - y; });
}

IntMatrix matrix_power(const IntMatrix& a, unsigned n) {
  if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
  IntMatrix result = identity_matrix(a.rows());
  IntMatrix base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix SmithDecomposition::diagonal_matrix() const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : a_(a), u_(identity_matrix(a.rows())), v_(identity_matrix(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    SmithDecomposition out;
    out.rows = a_.rows();
    out.cols = a_.cols();
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!reduce_position(t)) break;
      if (a_(t, t) < 0) negate_row(t);
    }
    out.diagonal.resize(limit);
    for (std::size_t i = 0; i < limit; ++i) out.diagonal[i] = a_(i, i);
    out.left = std::move(u_);
    out.right = std::move(v_);
    return out;
  }

 private:
  // Brings a divisor of everything in the trailing submatrix to (t, t) with
  // row t and column t otherwise zero. Returns false if the submatrix is zero.
  bool reduce_position(std::size_t t) {
    while (true) {
      if (!move_min_pivot(t)) return false;
      bool clean = true;
      Integer q;
      const Integer& p = a_(t, t);
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), p.get_mpz_t());
        add_row_multiple(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), p.get_mpz_t());
        add_col_multiple(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      if (auto bad = find_non_multiple(t)) {
        add_row_multiple(t, *bad, 1);
        continue;
      }
      return true;
    }
  }

  bool move_min_pivot(std::size_t t) {
    std::size_t best_r = 0;
    std::size_t best_c = 0;
    bool found = false;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        if (!found || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(best_r, best_c).get_mpz_t()) < 0) {
          best_r = i;
          best_c = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t()))
          return i;
    return std::nullopt;
  }

  // row_dst += k * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) += k * a_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += k * u_(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) += k * a_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += k * v_(i, src);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(x, j), a_(y, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(x, j), u_(y, j));
  }
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, x), a_(i, y));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, x), v_(i, y));
  }
  void negate_row(std::size_t x) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(x, j) = -a_(x, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(x, j) = -u_(x, j);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  return SmithReducer(a).run();
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw InvariantError("inverse of a non-square matrix");
  SmithDecomposition snf = smith_normal_form(a);
  for (const auto& d : snf.diagonal)
    if (d != 1) throw InvariantError("matrix is not unimodular");
  return snf.right * snf.left;
}

Integer CokernelInvariants::order() const {
  if (free_rank > 0) return 0;
  Integer prod = 1;
  for (const auto& t : torsion) prod *= t;
  return prod;
}

std::string CokernelInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out;
}

CokernelInvariants cokernel_invariants(const SmithDecomposition& snf) {
  CokernelInvariants inv;
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = snf.rows - nonzero;
  return inv;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  return cokernel_invariants(smith_normal_form(a));
}

std::optional<std::vector<Integer>> surjection_onto_cyclic(const IntMatrix& a,
                                                           const Integer& r) {
  if (r < 2) throw std::invalid_argument("cyclic target order must be >= 2");
  SmithDecomposition snf = smith_normal_form(a);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    bool free_or_divisible =
        k >= snf.diagonal.size() ||
        mpz_divisible_p(snf.diagonal[k].get_mpz_t(), r.get_mpz_t()) != 0;
    if (!free_or_divisible) continue;
    std::vector<Integer> chi(a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j)
      mpz_fdiv_r(chi[j].get_mpz_t(), snf.left(k, j).get_mpz_t(), r.get_mpz_t());
    return chi;
  }
  return std::nullopt;
}

namespace {

LaurentPoly exact_quotient(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = divide_exact(num, den);
  if (!q) throw std::logic_error("fraction-free elimination lost exactness");
  return std::move(*q);
}

// Bareiss elimination with full pivoting; returns (rank, signed det when the
// matrix is square and of full rank, else 0).
std::pair<std::size_t, LaurentPoly> bareiss(LambdaMatrix m, bool full_pivoting) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  LaurentPoly prev = 1;
  int sign = 1;
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    std::size_t col_end = full_pivoting ? cols : k + 1;
    for (std::size_t j = k; j < col_end && pr == rows; ++j)
      for (std::size_t i = k; i < rows; ++i)
        if (!m(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    if (pr != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(pr, j));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, k), m(i, pc));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j)
        m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = LaurentPoly{};
    }
    prev = m(k, k);
  }
  LaurentPoly det;
  if (rows == cols && k == rows) det = rows == 0 ? LaurentPoly(1) : m(rows - 1, cols - 1) * LaurentPoly(sign);
  return {k, std::move(det)};
}

}  // namespace

LaurentPoly determinant(const LambdaMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  return bareiss(a, false).second;
}

std::size_t rank_over_fractions(const LambdaMatrix& p) {
  return bareiss(p, true).first;
}

LambdaMatrix characteristic_presentation(const IntMatrix& h) {
  if (!h.is_square()) throw std::invalid_argument("sI - H needs square H");
  LambdaMatrix p(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      p(i, j) = LaurentPoly(Integer(-h(i, j)));
      if (i == j) p(i, j) += LaurentPoly::variable();
    }
  return p;
}

LaurentPoly characteristic_polynomial(const IntMatrix& h) {
  if (!h.is_square()) throw std::invalid_argument("characteristic polynomial needs square H");
  const std::size_t n = h.rows();
  std::vector<mpq_class> m(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return m[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = mpq_class(h(i, j));

  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 1; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(piv, col - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, col));
    }
    const mpq_class t = at(col, col - 1);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (at(i, col - 1) == 0) continue;
      const mpq_class u = at(i, col - 1) / t;
      for (std::size_t j = 0; j < n; ++j) at(i, j) -= u * at(col, j);
      for (std::size_t r = 0; r < n; ++r) at(r, col) += u * at(r, i);
    }
  }

  // p_k = characteristic polynomial of the leading k x k block.
  std::vector<std::vector<mpq_class>> p(n + 1);
  p[0] = {mpq_class(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<mpq_class> next(k + 1);
    for (std::size_t e = 0; e < k; ++e) {
      next[e + 1] += p[k - 1][e];
      next[e] -= at(k - 1, k - 1) * p[k - 1][e];
    }
    mpq_class t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= at(k - i, k - i - 1);
      if (t == 0) break;
      const mpq_class factor = t * at(k - i - 1, k - 1);
      for (std::size_t e = 0; e < p[k - i - 1].size(); ++e)
        next[e] -= factor * p[k - i - 1][e];
    }
    p[k] = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(n + 1);
  for (auto& c : p[n]) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("characteristic polynomial is not integral");
    coeffs.push_back(c.get_num());
  }
  return LaurentPoly(0, std::move(coeffs));
}

std::size_t binomial(std::size_t m, std::size_t n) {
  if (n > m) return 0;
  n = std::min(n, m - n);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    r = r * (m - n + i) / i;
    if (r > std::numeric_limits<std::size_t>::max())
      return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r);
}

namespace {

// Lexicographic unranking of n-subsets of {0..m-1}.
std::vector<std::size_t> combination_at(std::size_t index, std::size_t m,
                                        std::size_t n) {
  std::vector<std::size_t> combo;
  combo.reserve(n);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < n; ++slot) {
    while (true) {
      std::size_t with_next = binomial(m - next - 1, n - slot - 1);
      if (index < with_next) break;
      index -= with_next;
      ++next;
    }
    combo.push_back(next++);
  }
  return combo;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t m) {
  const std::size_t n = combo.size();
  for (std::size_t k = n; k-- > 0;) {
    if (combo[k] < m - n + k) {
      ++combo[k];
      for (std::size_t j = k + 1; j < n; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

LaurentPoly minor(const LambdaMatrix& p, const std::vector<std::size_t>& columns) {
  LambdaMatrix sub(p.rows(), columns.size());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) sub(i, j) = p(i, columns[j]);
  return determinant(sub);
}

}  // namespace

MinorIdeal maximal_minor_gcd(const LambdaMatrix& p, Execution exec,
                             std::size_t cap) {
  MinorIdeal ideal;
  const std::size_t n = p.rows();
  const std::size_t m = p.cols();
  if (n > m) return ideal;
  const std::size_t count = binomial(m, n);
  if (count > cap)
    throw SizeLimitError("maximal minors: C(" + std::to_string(m) + ", " +
                         std::to_string(n) + ") exceeds cap " +
                         std::to_string(cap));
  ideal.generators.resize(count);
  if (exec == Execution::parallel) {
    ExceptionSlot slot;
    const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long idx = 0; idx < total; ++idx) {
      slot.run([&] {
        auto combo = combination_at(static_cast<std::size_t>(idx), m, n);
        ideal.generators[static_cast<std::size_t>(idx)] = minor(p, combo);
      });
    }
    slot.rethrow();
  } else {
    std::vector<std::size_t> combo(n);
    for (std::size_t j = 0; j < n; ++j) combo[j] = j;
    std::size_t idx = 0;
    do {
      ideal.generators[idx++] = minor(p, combo);
    } while (next_combination(combo, m));
  }
  LaurentPoly g;
  for (const auto& minor_value : ideal.generators) {
    g = gcd(g, minor_value).poly();
    if (g == LaurentPoly(1)) break;
  }
  ideal.delta = canonicalize(g);
  return ideal;
}

std::string to_string(const IntMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ", ";
      out += a(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace twist
