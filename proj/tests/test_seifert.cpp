#include <gtest/gtest.h>

#include <array>

#include "support.hpp"
#include "twist/cover.hpp"
#include "twist/errors.hpp"
#include "twist/seifert.hpp"

using namespace twist;
using twist::testing::uniform;

namespace {

const SeifertMatrix trefoil(IntMatrix{{-1, 1}, {0, -1}});
const SeifertMatrix figure8(IntMatrix{{1, 1}, {0, -1}});

std::string alex(const SeifertMatrix& s) { return to_string(alexander_polynomial(s), 't'); }

bool kills(const IntMatrix& a, const std::vector<Integer>& chi, const Integer& r) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) sum += chi[i] * a(i, j);
    if (sum % r != 0) return false;
  }
  return true;
}

std::vector<long> prime_divisors(Integer n) {
  std::vector<long> out;
  for (long p = 2; n > 1 && p < 100000; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  return out;
}

}  // namespace

TEST(Seifert, Validation) {
  EXPECT_THROW(SeifertMatrix(IntMatrix{{1, 0}, {0, 1}}), InvariantError);
  EXPECT_THROW(SeifertMatrix(IntMatrix{{1}}), InvariantError);
  EXPECT_THROW(SeifertMatrix(IntMatrix(2, 3)), InvariantError);
  EXPECT_EQ(SeifertMatrix().size(), 0u);
}

TEST(Seifert, AlexanderExamples) {
  EXPECT_EQ(alex(trefoil), "t^2 - t + 1");
  EXPECT_EQ(alex(figure8), "t^2 - 3t + 1");
  EXPECT_EQ(alex(SeifertMatrix()), "1");
}

TEST(Seifert, AlexanderSymmetricUnderCongruence) {
  auto g = twist::testing::rng(50);
  for (int k = 0; k < 60; ++k) {
    SeifertMatrix base = twist::testing::random_seifert(g, static_cast<std::size_t>(uniform(g, 1, 2)));
    const IntMatrix& s = base.matrix();
    const std::size_t n = s.rows();
    IntMatrix p = twist::testing::random_unimodular(g, n, 6);
    SeifertMatrix moved(p.transpose() * s * p);
    EXPECT_EQ(alexander_polynomial(moved), alexander_polynomial(base));

    // det(t^-1 S - S^T) * t^2g, built independently over Z[t, t^-1].
    LambdaMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = LaurentPoly::monomial(s(i, j), -1) - LaurentPoly(s(j, i));
    LaurentPoly flipped = determinant(m).shifted(static_cast<std::int64_t>(n));
    EXPECT_EQ(canonicalize(flipped), alexander_polynomial(base));
    EXPECT_EQ(abs(alexander_polynomial(base).poly().coefficient(0)),
              abs(alexander_polynomial(base).poly().leading_coefficient()));
  }
}

TEST(Seifert, BranchedPresentation) {
  EXPECT_EQ(branched_presentation(trefoil, 2), (IntMatrix{{-2, 1}, {1, -2}}));
  EXPECT_EQ(branched_presentation(figure8, 2), (IntMatrix{{2, 1}, {1, -2}}));
  IntMatrix s = figure8.matrix();
  IntMatrix b = branched_presentation(figure8, 4);
  ASSERT_EQ(b.rows(), 6u);
  for (std::size_t bi = 0; bi < 3; ++bi)
    for (std::size_t bj = 0; bj < 3; ++bj)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          Integer expected = 0;
          if (bi == bj) expected = s(i, j) + s(j, i);
          else if (bj == bi + 1) expected = -s(j, i);
          else if (bi == bj + 1) expected = -s(i, j);
          EXPECT_EQ(b(2 * bi + i, 2 * bj + j), expected);
        }
  EXPECT_THROW(branched_presentation(trefoil, 1), std::invalid_argument);
}

TEST(Seifert, BranchedHomologyExamples) {
  EXPECT_EQ(branched_homology(trefoil, 2).to_string(), "Z/3");
  EXPECT_EQ(branched_homology(figure8, 2).to_string(), "Z/5");
  EXPECT_EQ(branched_homology(figure8, 2).order(), 5);
  for (unsigned d = 2; d <= 6; ++d) EXPECT_TRUE(branched_homology(SeifertMatrix(), d).is_trivial());
  EXPECT_EQ(branched_homology(trefoil, 6).to_string(), "Z^2");
  FreeEndo h(2, {Word::letter(1).inverse(), Word::letter(0) * Word::letter(1)});
  for (unsigned d = 2; d <= 8; ++d)
    EXPECT_EQ(branched_homology(trefoil, d), branched_cover_homology_from_monodromy(h, d)) << d;
}

TEST(Seifert, ResultantChecks) {
  auto c = resultant_order_check(trefoil, 2);
  EXPECT_EQ(c.snf_order, 3);
  EXPECT_EQ(c.resultant, 3);
  EXPECT_TRUE(c.agree);
  auto f3 = resultant_order_check(figure8, 3);
  EXPECT_TRUE(f3.agree);
  EXPECT_EQ(f3.resultant, 16);
  auto t6 = resultant_order_check(trefoil, 6);
  EXPECT_EQ(t6.snf_order, 0);
  EXPECT_EQ(t6.resultant, 0);
  EXPECT_TRUE(t6.agree);

  // Genus-2 matrix with S - S^T = J and trivial Alexander polynomial.
  SeifertMatrix untwisted(IntMatrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  EXPECT_EQ(alex(untwisted), "1");
  for (unsigned d = 2; d <= 10; ++d) {
    auto u = resultant_order_check(untwisted, d);
    EXPECT_EQ(u.resultant, 1);
    EXPECT_TRUE(branched_homology(untwisted, d).is_trivial());
  }
}

TEST(Seifert, ResultantAgreesOnRandomMatrices) {
  auto g = twist::testing::rng(51);
  for (int k = 0; k < 40; ++k) {
    SeifertMatrix s = twist::testing::random_seifert(g, static_cast<std::size_t>(uniform(g, 1, 2)));
    auto serial = resultant_sweep(s, 6, Execution::serial);
    auto parallel = resultant_sweep(s, 6, Execution::parallel);
    ASSERT_EQ(serial.size(), 5u);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(serial[i].d, i + 2);
      EXPECT_TRUE(serial[i].agree) << to_string(s.matrix()) << " d=" << serial[i].d;
      EXPECT_EQ(serial[i].snf_order, parallel[i].snf_order);
      EXPECT_EQ(serial[i].resultant, parallel[i].resultant);
    }
  }
}

TEST(Seifert, FigureEightMonodromy) {
  auto m2 = monodromy_power_presentation(figure8, 2);
  EXPECT_EQ(m2.h, (IntMatrix{{2, -1}, {-1, 1}}));
  EXPECT_EQ(m2.det, -5);
  EXPECT_EQ(m2.power_minus_identity, (IntMatrix{{4, -3}, {-3, 1}}));
  std::array<std::array<long, 2>, 2> hn{{{1, 0}, {0, 1}}};
  for (unsigned n = 1; n <= 12; ++n) {
    hn = {{{2 * hn[0][0] - hn[1][0], 2 * hn[0][1] - hn[1][1]},
           {-hn[0][0] + hn[1][0], -hn[0][1] + hn[1][1]}}};
    if (n < 2) continue;
    auto mp = monodromy_power_presentation(figure8, n);
    long closed_form = 2 - hn[0][0] - hn[1][1];
    EXPECT_EQ(mp.det, closed_form) << n;
    EXPECT_LE(mp.det, -5) << n;
    EXPECT_EQ(abs(mp.det), branched_homology(figure8, n).order()) << n;
  }
  EXPECT_THROW(monodromy_power_presentation(SeifertMatrix(IntMatrix{{2, 1}, {0, 1}}), 2), InvariantError);
}

TEST(Seifert, FiniteOrderMonodromy) {
  // The trefoil monodromy has order 6, so H^6 - I = 0.
  auto m6 = monodromy_power_presentation(trefoil, 6);
  EXPECT_EQ(m6.det, 0);
  EXPECT_EQ(matrix_power(m6.h, 6), identity_matrix(2));
}

TEST(Seifert, CharacterJumpExamples) {
  auto t = character_jump(trefoil, 2, 3);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->order, 3);
  EXPECT_TRUE(t->padded);
  EXPECT_TRUE(kills(branched_presentation(trefoil, 2), t->character, 3));

  auto f = character_jump(figure8, 2, 5);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->order, 5);

  SeifertMatrix untwisted(IntMatrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  EXPECT_FALSE(character_jump(untwisted, 3, 2));
  EXPECT_FALSE(character_jump(trefoil, 2, 2));
  EXPECT_FALSE(character_jump(SeifertMatrix(), 2, 2));

  auto t3 = character_jump(trefoil, 3, 2);
  ASSERT_TRUE(t3);
  EXPECT_FALSE(t3->padded);
  EXPECT_EQ(t3->order, 2);
}

TEST(Seifert, CharacterJumpOnRandomMatrices) {
  auto g = twist::testing::rng(52);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    SeifertMatrix s = twist::testing::random_seifert(g, static_cast<std::size_t>(uniform(g, 1, 2)));
    for (unsigned d = 2; d <= 3; ++d) {
      auto h1 = branched_homology(s, d);
      if (!h1.is_finite() || h1.is_trivial()) continue;
      for (long r : prime_divisors(h1.order())) {
        auto jump = character_jump(s, d, r);
        ASSERT_TRUE(jump);
        IntMatrix a = branched_presentation(s, d);
        EXPECT_TRUE(kills(a, jump->character, r));
        EXPECT_GE(jump->order, 2);
        EXPECT_EQ(jump->padded, d == 2);
        const std::size_t g2 = s.size();
        Integer lhs = jump->character[(jump->sheet - 1) * g2 + jump->handle - 1];
        Integer rhs = jump->padded ? Integer(0) : jump->character[jump->sheet * g2 + jump->handle - 1];
        Integer diff = lhs - rhs;
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), Integer(r).get_mpz_t());
        EXPECT_EQ(diff, jump->difference);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}
