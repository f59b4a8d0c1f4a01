#include "twist/seifert.hpp"

#include <stdexcept>
#include <string>

#include "twist/errors.hpp"

namespace twist {

SeifertMatrix::SeifertMatrix(IntMatrix s) : s_(std::move(s)) {
  if (!s_.is_square()) throw InvariantError("Seifert matrix must be square");
  if (s_.rows() % 2 != 0) throw InvariantError("Seifert matrix must have even size 2g");
  Integer det = determinant(s_ - s_.transpose());
  if (abs(det) != 1)
    throw InvariantError("det(S - S^T) = " + det.get_str() + ", expected +-1");
}

CanonicalForm alexander_polynomial(const SeifertMatrix& s) {
  const IntMatrix& a = s.matrix();
  const std::size_t n = a.rows();
  LambdaMatrix m(n, n);
  const LaurentPoly t = LaurentPoly::variable();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = t * LaurentPoly(a(i, j)) - LaurentPoly(a(j, i));
  return canonicalize(determinant(m));
}

IntMatrix branched_presentation(const SeifertMatrix& s, unsigned d) {
  if (d < 2) throw std::invalid_argument("branched cover degree must be >= 2");
  const IntMatrix& a = s.matrix();
  const IntMatrix at = a.transpose();
  const IntMatrix sym = a + at;
  const std::size_t g2 = a.rows();
  const std::size_t blocks = d - 1;
  IntMatrix m(blocks * g2, blocks * g2);
  auto place = [&](std::size_t br, std::size_t bc, const IntMatrix& block, int sign) {
    for (std::size_t i = 0; i < g2; ++i)
      for (std::size_t j = 0; j < g2; ++j) m(br * g2 + i, bc * g2 + j) = sign * block(i, j);
  };
  for (std::size_t k = 0; k < blocks; ++k) {
    place(k, k, sym, 1);
    if (k + 1 < blocks) {
      place(k, k + 1, at, -1);
      place(k + 1, k, a, -1);
    }
  }
  return m;
}

CokernelInvariants branched_homology(const SeifertMatrix& s, unsigned d) {
  return cokernel_invariants(branched_presentation(s, d));
}

ResultantCheck resultant_order_check(const SeifertMatrix& s, unsigned d) {
  ResultantCheck check;
  check.d = d;
  check.snf_order = branched_homology(s, d).order();
  check.resultant = resultant_with_cyclotomic(alexander_polynomial(s).poly(), d);
  check.agree = check.snf_order == check.resultant;
  return check;
}

std::vector<ResultantCheck> resultant_sweep(const SeifertMatrix& s, unsigned dmax,
                                            Execution exec) {
  if (dmax < 2) return {};
  std::vector<ResultantCheck> rows(dmax - 1);
  if (exec == Execution::parallel) {
    ExceptionSlot slot;
    const auto total = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < total; ++k)
      slot.run([&] {
        rows[static_cast<std::size_t>(k)] = resultant_order_check(s, static_cast<unsigned>(k + 2));
      });
    slot.rethrow();
  } else {
    for (std::size_t k = 0; k < rows.size(); ++k)
      rows[k] = resultant_order_check(s, static_cast<unsigned>(k + 2));
  }
  return rows;
}

MonodromyPower monodromy_power_presentation(const SeifertMatrix& s, unsigned n) {
  if (n == 0) throw std::invalid_argument("power must be >= 1");
  const IntMatrix& a = s.matrix();
  if (abs(determinant(a)) != 1)
    throw InvariantError("det(S) must be +-1 for S^-1 S^T to be integral");
  MonodromyPower out;
  out.h = unimodular_inverse(a) * a.transpose();
  out.power_minus_identity = matrix_power(out.h, n) - identity_matrix(a.rows());
  out.det = determinant(out.power_minus_identity);
  return out;
}

std::optional<CharacterJump> character_jump(const SeifertMatrix& s, unsigned d,
                                            const Integer& r) {
  if (d < 2) throw std::invalid_argument("branched cover degree must be >= 2");
  const IntMatrix m = branched_presentation(s, d);
  if (m.rows() == 0) return std::nullopt;
  auto chi = surjection_onto_cyclic(m, r);
  if (!chi) return std::nullopt;

  const std::size_t g2 = s.size();
  auto value = [&](std::size_t i, std::size_t j) -> Integer {
    return j == d ? Integer(0) : (*chi)[(j - 1) * g2 + (i - 1)];
  };
  auto make = [&](std::size_t i, std::size_t j) {
    CharacterJump jump;
    jump.character = *chi;
    jump.handle = i;
    jump.sheet = j;
    jump.padded = j + 1 == d;
    mpz_fdiv_r(jump.difference.get_mpz_t(), Integer(value(i, j) - value(i, j + 1)).get_mpz_t(),
               r.get_mpz_t());
    Integer g;
    mpz_gcd(g.get_mpz_t(), jump.difference.get_mpz_t(), r.get_mpz_t());
    jump.order = r / g;
    return jump;
  };
  for (std::size_t j = 1; j + 1 < d; ++j)
    for (std::size_t i = 1; i <= g2; ++i)
      if (value(i, j) != value(i, j + 1)) return make(i, j);
  if (d == 2)
    for (std::size_t i = 1; i <= g2; ++i)
      if (value(i, 1) != 0) return make(i, 1);
  throw std::logic_error("surjective character is constant across sheets");
}

}  // namespace twist
