#include <gtest/gtest.h>

#include "support.hpp"
#include "twist/cover.hpp"
#include "twist/obstruction.hpp"

using namespace twist;

namespace {

const LaurentPoly s = LaurentPoly::variable();

LambdaMatrix single(const LaurentPoly& p) {
  LambdaMatrix m(1, 1);
  m(0, 0) = p;
  return m;
}

LambdaMatrix trefoil_presentation() {
  FreeEndo h(2, {Word::letter(1).inverse(), Word::letter(0) * Word::letter(1)});
  return twisted_invariants(h, 2, FiniteHom::cyclic(3, {1, 1})).presentation;
}

LambdaMatrix cofactor_minor(const LambdaMatrix& m, std::size_t row, std::size_t col) {
  LambdaMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j)
      if (j != col) out(oi, oj++) = m(i, j);
    ++oi;
  }
  return out;
}

bool mentions(const ObstructionReport& r, const std::string& word) {
  for (const auto& line : r.reasons)
    if (line.find(word) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Obstruction, TrefoilIsConsistent) {
  ObstructionReport r = evaluate_fibred_obstruction(trefoil_presentation());
  EXPECT_EQ(r.torsion, Torsion::yes);
  EXPECT_EQ(r.principal, Principal::yes);
  EXPECT_EQ(r.monic, Monic::yes);
  EXPECT_EQ(to_string(r.delta), "s^4 - s^3 - s + 1");
  EXPECT_EQ(r.verdict, Verdict::consistent_with_fibred);
  EXPECT_EQ(to_string(r.verdict), "consistent-with-fibred");
}

TEST(Obstruction, NegativeControls) {
  ObstructionReport a = evaluate_fibred_obstruction(single(2 * s - 2));
  EXPECT_EQ(a.monic, Monic::no);
  EXPECT_EQ(a.torsion, Torsion::yes);
  EXPECT_EQ(a.verdict, Verdict::not_fibred_certificate);
  EXPECT_TRUE(mentions(a, "monic"));
  EXPECT_EQ(to_string(a.verdict), "NOT-fibred-certificate");

  ObstructionReport b = evaluate_fibred_obstruction(LambdaMatrix(1, 2));
  EXPECT_EQ(b.torsion, Torsion::no);
  EXPECT_EQ(b.principal, Principal::unknown);
  EXPECT_EQ(b.monic, Monic::undefined);
  EXPECT_EQ(b.verdict, Verdict::not_fibred_certificate);
  EXPECT_TRUE(mentions(b, "torsion"));
}

TEST(Obstruction, NonSquareMonicIsInconclusive) {
  LambdaMatrix m(1, 2);
  m(0, 0) = s - 1;
  m(0, 1) = s * s - 1;
  ObstructionReport r = evaluate_fibred_obstruction(m);
  EXPECT_EQ(r.torsion, Torsion::yes);
  EXPECT_EQ(r.principal, Principal::unknown);
  EXPECT_EQ(r.monic, Monic::yes);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
}

TEST(Obstruction, SizeCapIsInconclusive) {
  LambdaMatrix m(2, 40);
  for (std::size_t j = 0; j < 40; ++j) {
    m(0, j) = s - static_cast<long>(j);
    m(1, j) = s + 1;
  }
  ObstructionReport r = evaluate_fibred_obstruction(m, 100);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_EQ(r.torsion, Torsion::yes);
  EXPECT_TRUE(mentions(r, "not computed"));
}

TEST(Obstruction, VerdictTable) {
  for (Torsion t : {Torsion::yes, Torsion::no, Torsion::unknown})
    for (Principal p : {Principal::yes, Principal::unknown})
      for (Monic m : {Monic::yes, Monic::no, Monic::undefined}) {
        Verdict v = decide(t, p, m);
        EXPECT_EQ(v == Verdict::not_fibred_certificate, t == Torsion::no || m == Monic::no);
        EXPECT_EQ(v == Verdict::consistent_with_fibred,
                  t == Torsion::yes && p == Principal::yes && m == Monic::yes);
      }
  // Degrading any single field moves away from consistent.
  EXPECT_NE(decide(Torsion::no, Principal::yes, Monic::yes), Verdict::consistent_with_fibred);
  EXPECT_NE(decide(Torsion::unknown, Principal::yes, Monic::yes), Verdict::consistent_with_fibred);
  EXPECT_NE(decide(Torsion::yes, Principal::unknown, Monic::yes), Verdict::consistent_with_fibred);
  EXPECT_NE(decide(Torsion::yes, Principal::yes, Monic::no), Verdict::consistent_with_fibred);
  EXPECT_NE(decide(Torsion::yes, Principal::yes, Monic::undefined), Verdict::consistent_with_fibred);
}

TEST(Obstruction, CoverReportsAreConsistent) {
  auto g = twist::testing::rng(60);
  for (int k = 0; k < 30; ++k) {
    FreeEndo f = twist::testing::random_automorphism(g, 2, 8);
    for (std::int64_t a = 0; a < 2; ++a)
      for (std::int64_t b = 0; b < 2; ++b) {
        FiniteHom alpha = FiniteHom::cyclic(2, {a, b});
        if (!is_surjective(alpha) || !check_compatibility(power(f, 2), alpha)) continue;
        auto inv = twisted_invariants(f, 2, alpha);
        EXPECT_EQ(evaluate_fibred_obstruction(inv).verdict, Verdict::consistent_with_fibred);
        auto from_matrix = evaluate_fibred_obstruction(inv.presentation);
        EXPECT_EQ(from_matrix.verdict, Verdict::consistent_with_fibred);
        EXPECT_EQ(from_matrix.delta, inv.delta);
      }
  }
}

TEST(Obstruction, DeltaAnnihilatesSquarePresentation) {
  // adj(P) * P = det(P) * I, so det(P) kills every generator of coker P.
  LambdaMatrix p = trefoil_presentation();
  const std::size_t n = p.rows();
  LaurentPoly det = determinant(p);
  EXPECT_EQ(canonicalize(det), evaluate_fibred_obstruction(p).delta);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly sum;
      for (std::size_t k = 0; k < n; ++k) {
        LaurentPoly cof = determinant(cofactor_minor(p, k, i));
        if ((i + k) % 2) cof = -cof;
        sum += cof * p(k, j);
      }
      EXPECT_EQ(sum, i == j ? det : LaurentPoly());
    }
}

TEST(Annihilator, Consequence) {
  ObstructionReport monic = evaluate_fibred_obstruction(trefoil_presentation());
  EXPECT_FALSE(annihilator_consequence(monic, GroupOrder::finite(5)));
  EXPECT_TRUE(annihilator_consequence(monic, GroupOrder::finite(1)));
  EXPECT_FALSE(annihilator_consequence(monic, GroupOrder::infinite_order()));
  EXPECT_FALSE(admits_nonzero_annihilator(GroupOrder::infinite_order()));
  EXPECT_TRUE(admits_nonzero_annihilator(GroupOrder::finite(5)));
  ObstructionReport failed = evaluate_fibred_obstruction(single(2 * s - 2));
  EXPECT_FALSE(annihilator_consequence(failed, GroupOrder::finite(1)));
}
