#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twist {

using Integer = mpz_class;

/// Element of Z[s, s^-1] with exact integer coefficients.
///
/// Stored trimmed: coefficient i is the coefficient of s^(lowest + i), and
/// the first and last stored coefficients are nonzero. Zero is the empty
/// sequence with lowest exponent 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::int64_t lowest_exponent, std::vector<Integer> coefficients);

  static LaurentPoly monomial(Integer coefficient, std::int64_t exponent);
  /// The variable s.
  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t lowest_exponent() const noexcept { return lowest_; }
  /// Undefined (returns lowest - 1) for zero.
  std::int64_t highest_exponent() const noexcept {
    return lowest_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// highest - lowest; the degree of the associated ordinary polynomial.
  std::int64_t width() const noexcept {
    return is_zero() ? 0 : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::int64_t exponent) const;
  /// Coefficient of the highest power. Zero polynomial: 0.
  Integer leading_coefficient() const;
  /// Coefficient of the lowest power. Zero polynomial: 0.
  Integer trailing_coefficient() const;
  /// Nonnegative gcd of all coefficients.
  Integer content() const;

  LaurentPoly shifted(std::int64_t n) const;  // s^n * p

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

  std::complex<double> evaluate(std::complex<double> z) const;

 private:
  void trim();

  std::int64_t lowest_ = 0;
  std::vector<Integer> coeffs_;
};

/// Unique associate of a polynomial under the units +-s^n: lowest exponent 0
/// and positive leading coefficient. Zero stays zero.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  const LaurentPoly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  explicit CanonicalForm(LaurentPoly p) : poly_(std::move(p)) {}
  friend CanonicalForm canonicalize(const LaurentPoly& p);
  LaurentPoly poly_;
};

CanonicalForm canonicalize(const LaurentPoly& p);

/// Greatest common divisor in Z[s, s^-1], canonicalized. gcd(0, 0) = 0.
CanonicalForm gcd(const LaurentPoly& p, const LaurentPoly& q);

/// Quotient num / den in Z[s, s^-1] if den divides num exactly.
/// Throws std::domain_error for den = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num,
                                        const LaurentPoly& den);

/// Nonzero with both extreme coefficients equal to +-1.
bool is_monic(const LaurentPoly& p);

/// |Res(p(t), t^d - 1)| where p is taken with lowest exponent 0. This is
/// the absolute value of the product of p over the d-th roots of unity.
/// Throws std::invalid_argument for p = 0 or d = 0.
Integer resultant_with_cyclotomic(const LaurentPoly& p, unsigned d);

/// Descending exponents, e.g. "s^4 - s^3 - s + 1", "2s^-1 + 3".
std::string to_string(const LaurentPoly& p, char variable = 's');
inline std::string to_string(const CanonicalForm& p, char variable = 's') {
  return to_string(p.poly(), variable);
}
/// Same as to_string with all spaces removed, usable as a matrix token.
std::string to_token(const LaurentPoly& p, char variable = 's');

/// Parses terms like `s^4`, `-s^3`, `+1`, `2s^-1`, `3*t`; whitespace is
/// ignored. Either `s` or `t` is accepted as the variable (not both).
/// Throws ParseError with a 1-based column.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace twist
