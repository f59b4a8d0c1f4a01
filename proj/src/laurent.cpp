#include "twist/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "twist/errors.hpp"
#include "twist/exactla.hpp"

namespace twist {

namespace {

// Dense polynomials in Z[t], index = degree, trimmed (no trailing zeros).
using Dense = std::vector<Integer>;

void trim_dense(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::int64_t degree(const Dense& p) {
  return static_cast<std::int64_t>(p.size()) - 1;
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense primitive_part(Dense p) {
  Integer c = dense_content(p);
  if (c > 1) {
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const Integer& lb = b.back();
  std::int64_t db = degree(b);
  std::int64_t steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    Integer la = a.back();
    std::int64_t shift = degree(a) - db;
    for (auto& x : a) x *= lb;
    for (std::int64_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim_dense(a);
    --steps;
  }
  // Complete the power of lc(b) so the result is the classical prem.
  for (; steps > 0; --steps)
    for (auto& x : a) x *= lb;
  return a;
}

Integer ipow(const Integer& base, std::int64_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Subresultant PRS gcd of primitive polynomials, result primitive with
// positive leading coefficient.
Dense subresultant_gcd(Dense a, Dense b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  if (b.empty()) return primitive_part(std::move(a));
  Integer g = 1;
  Integer h = 1;
  while (true) {
    std::int64_t delta = degree(a) - degree(b);
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return Dense{1};
    Integer divisor = g * ipow(h, delta);
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  Dense result = primitive_part(std::move(b));
  if (result.back() < 0)
    for (auto& x : result) x = -x;
  return result;
}

Dense to_dense(const LaurentPoly& p) { return p.coefficients(); }

}  // namespace

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(std::int64_t lowest_exponent,
                         std::vector<Integer> coefficients)
    : lowest_(lowest_exponent), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, std::int64_t exponent) {
  return LaurentPoly(exponent, {std::move(coefficient)});
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  lowest_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

Integer LaurentPoly::coefficient(std::int64_t exponent) const {
  if (is_zero() || exponent < lowest_ || exponent > highest_exponent())
    return 0;
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

Integer LaurentPoly::leading_coefficient() const {
  return is_zero() ? Integer(0) : coeffs_.back();
}

Integer LaurentPoly::trailing_coefficient() const {
  return is_zero() ? Integer(0) : coeffs_.front();
}

Integer LaurentPoly::content() const { return dense_content(coeffs_); }

LaurentPoly LaurentPoly::shifted(std::int64_t n) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lowest_ += n;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::int64_t lo = std::min(lowest_, other.lowest_);
  std::int64_t hi = std::max(highest_exponent(), other.highest_exponent());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(lowest_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(other.lowest_ - lo) + i] += other.coeffs_[i];
  lowest_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.lowest_ + b.lowest_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  return *this = *this * other;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + it->get_d();
  return acc * std::pow(z, static_cast<double>(lowest_));
}

CanonicalForm canonicalize(const LaurentPoly& p) {
  if (p.is_zero()) return CanonicalForm{};
  LaurentPoly q = p.shifted(-p.lowest_exponent());
  if (q.leading_coefficient() < 0) q = -q;
  return CanonicalForm{std::move(q)};
}

CanonicalForm gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return canonicalize(q);
  if (q.is_zero()) return canonicalize(p);
  Integer c;
  Integer cp = p.content();
  Integer cq = q.content();
  mpz_gcd(c.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
  Dense g = subresultant_gcd(primitive_part(to_dense(p)),
                             primitive_part(to_dense(q)));
  for (auto& x : g) x *= c;
  return canonicalize(LaurentPoly(0, std::move(g)));
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num,
                                        const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return LaurentPoly{};
  if (num.width() < den.width()) return std::nullopt;
  Dense rem = num.coefficients();
  const Dense& d = den.coefficients();
  const Integer& lead = d.back();
  std::int64_t dd = degree(d);
  Dense quot(static_cast<std::size_t>(degree(rem) - dd + 1));
  Integer q;
  Integer r;
  for (std::int64_t k = degree(rem) - dd; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::int64_t i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * d[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(k)] = q;
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& x) { return x != 0; }))
    return std::nullopt;
  return LaurentPoly(num.lowest_exponent() - den.lowest_exponent(),
                     std::move(quot));
}

bool is_monic(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  return abs(p.leading_coefficient()) == 1 && abs(p.trailing_coefficient()) == 1;
}

Integer resultant_with_cyclotomic(const LaurentPoly& p, unsigned d) {
  if (p.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  if (d == 0) throw std::invalid_argument("resultant needs d >= 1");
  // Sylvester matrix of p(t) (degree m) and t^d - 1 (degree d).
  const Dense& a = p.coefficients();
  std::size_t m = a.size() - 1;
  std::size_t n = m + d;
  IntMatrix syl(n, n);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t k = 0; k <= m; ++k) syl(row, row + k) = a[m - k];
  for (std::size_t row = 0; row < m; ++row) {
    syl(d + row, row) = 1;
    syl(d + row, row + d) = -1;
  }
  return abs(determinant(syl));
}

std::string to_string(const LaurentPoly& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    const Integer& coef = c[k];
    if (coef == 0) continue;
    std::int64_t e = p.lowest_exponent() + static_cast<std::int64_t>(k);
    Integer mag = abs(coef);
    if (out.empty()) {
      if (coef < 0) out += "-";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += variable;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_token(const LaurentPoly& p, char variable) {
  std::string s = to_string(p, variable);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

namespace {

class TermReader {
 public:
  explicit TermReader(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      bool had_sign = false;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        had_sign = true;
        advance();
        skip_space();
      }
      if (!first && !had_sign) fail("expected '+' or '-'");
      result += read_term() * LaurentPoly(sign);
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  LaurentPoly read_term() {
    Integer coef = 1;
    bool has_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = read_digits();
      has_coef = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        advance();
        skip_space();
        if (at_end() || !is_variable(peek())) fail("expected variable after '*'");
      }
    }
    if (at_end() || !is_variable(peek())) {
      if (!has_coef) fail("expected coefficient or variable");
      return LaurentPoly(coef);
    }
    note_variable(peek());
    advance();
    skip_space();
    std::int64_t exponent = 1;
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      int esign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        advance();
        skip_space();
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent");
      Integer e = read_digits();
      if (!e.fits_slong_p()) fail("exponent out of range");
      exponent = esign * e.get_si();
    }
    return LaurentPoly::monomial(coef, exponent);
  }

  Integer read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_variable(char c) { return c == 's' || c == 't'; }

  void note_variable(char c) {
    if (variable_ != 0 && variable_ != c) fail("mixed variables");
    variable_ = c;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char variable_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return TermReader(text).parse(); }

}  // namespace twist
