#include <gtest/gtest.h>

#include <map>

#include "support.hpp"
#include "twist/cover.hpp"
#include "twist/errors.hpp"

using namespace twist;
using twist::testing::uniform;

namespace {

const Word x = Word::letter(0);
const Word y = Word::letter(1);

FreeEndo trefoil() { return FreeEndo(2, {y.inverse(), x * y}); }

LaurentPoly P(const char* text) { return parse_laurent(text); }

// Chain-level action on C_1 = Z[G]^n from Fox derivatives: edge (g, j) goes to
// sum over letters of f(x_j), no spanning tree or cycle basis involved.
IntMatrix fox_chain_matrix(const FreeEndo& f, const FiniteHom& alpha) {
  std::vector<Perm> elements = image_elements(alpha);
  std::map<Perm, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  const std::size_t n = f.rank();
  const std::size_t order = elements.size();
  IntMatrix j(n * order, n * order);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t gen = 0; gen < n; ++gen) {
      Perm prefix = elements[g];
      for (auto [i, e] : f.image(gen).letters()) {
        if (e > 0) {
          j(index.at(prefix) * n + i, g * n + gen) += 1;
          prefix = prefix * alpha.image(i);
        } else {
          prefix = prefix * alpha.image(i).inverse();
          j(index.at(prefix) * n + i, g * n + gen) -= 1;
        }
      }
    }
  return j;
}

LaurentPoly power_of(const LaurentPoly& p, std::size_t k) {
  LaurentPoly out(1);
  for (std::size_t i = 0; i < k; ++i) out *= p;
  return out;
}

std::vector<FiniteHom> compatible_cyclic(const FreeEndo& fd, std::uint32_t r) {
  std::vector<FiniteHom> out;
  const std::size_t n = fd.rank();
  std::vector<std::int64_t> v(n, 0);
  for (;;) {
    FiniteHom alpha = FiniteHom::cyclic(r, v);
    if (is_surjective(alpha) && check_compatibility(fd, alpha)) out.push_back(alpha);
    std::size_t k = 0;
    while (k < n && ++v[k] == r) v[k++] = 0;
    if (k == n) return out;
  }
}

}  // namespace

TEST(Cover, Examples) {
  CoverGraph z3 = build_cover(2, FiniteHom::cyclic(3, {1, 1}));
  EXPECT_EQ(z3.group_order(), 3u);
  EXPECT_EQ(z3.edge_count(), 6u);
  EXPECT_EQ(z3.h1_rank(), 4u);
  EXPECT_TRUE(z3.vertices.front().is_identity());

  CoverGraph bouquet = build_cover(1, FiniteHom::cyclic(1, {0}));
  EXPECT_EQ(bouquet.group_order(), 1u);
  EXPECT_EQ(bouquet.h1_rank(), 1u);

  CoverGraph z2 = build_cover(2, FiniteHom::cyclic(2, {1, 0}));
  EXPECT_EQ(z2.group_order(), 2u);
  EXPECT_EQ(z2.edge_count(), 4u);
  EXPECT_EQ(z2.h1_rank(), 3u);

  EXPECT_THROW(build_cover(2, FiniteHom::cyclic(4, {2, 0})), PreconditionError);
  EXPECT_THROW(build_cover(3, FiniteHom::cyclic(3, {1, 1})), PreconditionError);
}

TEST(Cover, TreeStructure) {
  for (TreeOrder order : {TreeOrder::breadth_first, TreeOrder::depth_first}) {
    FiniteHom alpha(GroupTarget::symmetric(3), {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    CoverGraph c = build_cover(2, alpha, order);
    EXPECT_EQ(c.group_order(), 6u);
    EXPECT_EQ(c.h1_rank(), 2 * 6 - 6 + 1u);
    std::size_t tree_edges = 0;
    for (std::size_t v = 0; v < c.group_order(); ++v) {
      if (c.parent_edge[v] < 0) {
        EXPECT_EQ(v, 0u);
        continue;
      }
      ++tree_edges;
      EXPECT_EQ(c.basis_index[static_cast<std::size_t>(c.parent_edge[v])], -1);
    }
    EXPECT_EQ(tree_edges, c.group_order() - 1);
    for (std::size_t e = 0; e < c.edge_count(); ++e) {
      std::size_t v = e / 2;
      EXPECT_EQ(c.vertices[c.successor[e]], c.vertices[v] * alpha.image(e % 2));
      EXPECT_EQ(c.vertices[c.predecessor[e]], c.vertices[v] * alpha.image(e % 2).inverse());
    }
  }
}

TEST(Lift, Examples) {
  FiniteHom alpha = FiniteHom::cyclic(3, {1, 1});
  CoverGraph c = build_cover(2, alpha);
  IntMatrix h = lift_action_matrix(c, power(trefoil(), 2));
  EXPECT_EQ(h.rows(), 4u);
  EXPECT_EQ(characteristic_polynomial(h), P("s^4 - s^3 - s + 1"));
  EXPECT_EQ(lift_action_matrix(c, FreeEndo::identity(2)), identity_matrix(4));
  CoverGraph trivial = build_cover(2, FiniteHom::cyclic(1, {0, 0}));
  EXPECT_EQ(lift_action_matrix(trivial, trefoil()), (IntMatrix{{0, 1}, {-1, 1}}));
  EXPECT_THROW(lift_action_matrix(c, trefoil()), PreconditionError);
}

TEST(Lift, SerialAndParallelAgree) {
  auto g = twist::testing::rng(40);
  for (int k = 0; k < 20; ++k) {
    FreeEndo f = twist::testing::random_automorphism(g, 3, 8);
    FreeEndo f4 = power(f, 4);
    for (const auto& alpha : compatible_cyclic(f4, 4)) {
      CoverGraph c = build_cover(3, alpha);
      EXPECT_EQ(lift_action_matrix(c, f4, Execution::serial),
                lift_action_matrix(c, f4, Execution::parallel));
    }
  }
}

TEST(Twisted, TrefoilExample) {
  TwistedInvariants inv = twisted_invariants(trefoil(), 2, FiniteHom::cyclic(3, {1, 1}));
  EXPECT_EQ(to_string(inv.delta), "s^4 - s^3 - s + 1");
  EXPECT_EQ(inv.det_h, 1);
  EXPECT_EQ(inv.group_order, 3u);
  EXPECT_EQ(inv.h1_rank, 4u);
  EXPECT_EQ(inv.presentation.rows(), 4u);
  EXPECT_EQ(canonicalize(determinant(inv.presentation)), inv.delta);
  ASSERT_EQ(inv.ideal_generators.size(), 1u);
  EXPECT_EQ(inv.ideal_generators[0], inv.delta.poly());

  // The same module written in the Schreier basis a = xy^-1, b = xax^-1,
  // c = x^2ax^-2, d = x^3.
  IntMatrix schreier{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {-1, -1, -1, -2}};
  EXPECT_EQ(characteristic_polynomial(schreier), characteristic_polynomial(inv.h_matrix));
}

TEST(Twisted, SmallExamples) {
  EXPECT_EQ(to_string(twisted_invariants(trefoil(), 1, FiniteHom::cyclic(1, {0, 0})).delta),
            "s^2 - s + 1");
  EXPECT_EQ(to_string(twisted_invariants(FreeEndo::identity(1), 1, FiniteHom::cyclic(1, {0})).delta),
            "s - 1");
  EXPECT_THROW(twisted_invariants(trefoil(), 1, FiniteHom::cyclic(3, {1, 1})), PreconditionError);
}

TEST(Twisted, MatchesFoxChainOracle) {
  auto g = twist::testing::rng(41);
  int checked = 0;
  for (int k = 0; k < 40; ++k) {
    std::size_t rank = static_cast<std::size_t>(uniform(g, 2, 3));
    FreeEndo f = twist::testing::random_automorphism(g, rank, 8);
    for (unsigned d = 1; d <= 3; ++d) {
      FreeEndo fd = power(f, d);
      for (std::uint32_t r = 1; r <= 4; ++r)
        for (const auto& alpha : compatible_cyclic(fd, r)) {
          TwistedInvariants inv = twisted_invariants(f, d, alpha);
          IntMatrix j = fox_chain_matrix(fd, alpha);
          LaurentPoly lhs = characteristic_polynomial(j);
          LaurentPoly rhs = characteristic_polynomial(inv.h_matrix) *
                            power_of(LaurentPoly::variable() - 1, inv.group_order - 1);
          EXPECT_EQ(lhs, rhs);
          ++checked;
        }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Twisted, FibredConclusionsOnRandomAutomorphisms) {
  auto g = twist::testing::rng(42);
  for (int k = 0; k < 40; ++k) {
    std::size_t rank = static_cast<std::size_t>(uniform(g, 2, 3));
    FreeEndo f = twist::testing::random_automorphism(g, rank, 8);
    for (unsigned d = 1; d <= 3; ++d)
      for (std::uint32_t r = 1; r <= 4; ++r)
        for (const auto& alpha : compatible_cyclic(power(f, d), r)) {
          TwistedInvariants inv = twisted_invariants(f, d, alpha);
          EXPECT_EQ(inv.h1_rank, rank * r - r + 1);
          EXPECT_EQ(abs(inv.det_h), 1);
          EXPECT_TRUE(is_monic(inv.delta.poly()));
          EXPECT_EQ(canonicalize(inv.delta.poly()), inv.delta);
          EXPECT_EQ(rank_over_fractions(inv.presentation), inv.h1_rank);
          EXPECT_EQ(inv.delta.poly().coefficient(0), inv.h1_rank % 2 ? -inv.det_h : inv.det_h);
        }
  }
}

TEST(Twisted, SpanningTreeOnlyConjugatesH) {
  auto g = twist::testing::rng(43);
  for (int k = 0; k < 30; ++k) {
    FreeEndo f = twist::testing::random_automorphism(g, 3, 8);
    for (std::uint32_t r = 2; r <= 4; ++r)
      for (const auto& alpha : compatible_cyclic(power(f, 2), r)) {
        auto bfs = twisted_invariants(f, 2, alpha, Execution::parallel, TreeOrder::breadth_first);
        auto dfs = twisted_invariants(f, 2, alpha, Execution::serial, TreeOrder::depth_first);
        EXPECT_EQ(bfs.delta, dfs.delta);
        EXPECT_EQ(bfs.det_h, dfs.det_h);
        EXPECT_EQ(cokernel_invariants(bfs.h_matrix - identity_matrix(bfs.h1_rank)),
                  cokernel_invariants(dfs.h_matrix - identity_matrix(dfs.h1_rank)));
      }
  }
  // S3 has a genuinely different depth-first tree.
  FiniteHom s3(GroupTarget::symmetric(3), {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  auto a = twisted_invariants(FreeEndo::identity(2), 1, s3, Execution::serial, TreeOrder::breadth_first);
  auto b = twisted_invariants(FreeEndo::identity(2), 1, s3, Execution::serial, TreeOrder::depth_first);
  EXPECT_EQ(a.delta, b.delta);
}

TEST(Twisted, InnerTwistByKernelElement) {
  auto g = twist::testing::rng(44);
  int checked = 0;
  for (int k = 0; k < 40; ++k) {
    FreeEndo f = twist::testing::random_automorphism(g, 2, 6);
    FreeEndo f2 = power(f, 2);
    for (std::uint32_t r = 2; r <= 4; ++r)
      for (const auto& alpha : compatible_cyclic(f2, r)) {
        Word w;
        do {
          w = twist::testing::random_word(g, 2, 8);
        } while (!evaluate(alpha, w).is_identity());
        std::vector<Word> conj;
        for (const auto& img : f2.images()) conj.push_back(w * img * w.inverse());
        FreeEndo twisted(2, conj);
        EXPECT_EQ(twisted_invariants(twisted, 1, alpha).delta, twisted_invariants(f, 2, alpha).delta);
        ++checked;
      }
  }
  EXPECT_GT(checked, 10);
}

TEST(Twisted, TrivialGroupSpecialization) {
  auto g = twist::testing::rng(45);
  for (int k = 0; k < 50; ++k) {
    std::size_t rank = static_cast<std::size_t>(uniform(g, 2, 3));
    FreeEndo f = twist::testing::random_automorphism(g, rank, 8);
    unsigned d = static_cast<unsigned>(uniform(g, 1, 4));
    auto inv = twisted_invariants(f, d, FiniteHom::cyclic(1, std::vector<std::int64_t>(rank, 0)));
    IntMatrix td = abelianization_matrix(power(f, d));
    EXPECT_EQ(inv.h_matrix, td);
    EXPECT_EQ(inv.delta, canonicalize(determinant(characteristic_presentation(td))));
  }
}

TEST(Branched, FromMonodromy) {
  EXPECT_EQ(branched_cover_homology_from_monodromy(trefoil(), 2).to_string(), "Z/3");
  EXPECT_EQ(branched_cover_homology_from_monodromy(trefoil(), 6).to_string(), "Z^2");
  EXPECT_EQ(branched_cover_homology_from_monodromy(trefoil(), 3).to_string(), "Z/2 + Z/2");
  EXPECT_EQ(branched_cover_homology_from_monodromy(FreeEndo::identity(3), 4).free_rank, 3u);
  EXPECT_TRUE(branched_cover_homology_from_monodromy(trefoil(), 1).is_trivial());
}
