#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twist/exactla.hpp"
#include "twist/freegrp.hpp"
#include "twist/grouphom.hpp"
#include "twist/laurent.hpp"
#include "twist/parallel.hpp"

namespace twist {

/// How the spanning tree of a cover is grown. Depth-first exists so tests can
/// check that H changes only by conjugation under a different tree.
enum class TreeOrder { breadth_first, depth_first };

/// The G-regular cover of a bouquet of n circles, for a surjection
/// alpha : F_n -> G.
///
/// Vertices are the elements of G (identity first). Edge (v, i) runs from v to
/// v * alpha(x_i) and has flat index v * n + i. The non-tree edges, in flat
/// index order, form the basis of H_1.
struct CoverGraph {
  std::size_t rank = 0;
  std::vector<Perm> vertices;
  std::vector<std::uint32_t> successor;    // [v * rank + i] -> v * alpha(x_i)
  std::vector<std::uint32_t> predecessor;  // [v * rank + i] -> v * alpha(x_i)^-1
  std::vector<std::int64_t> basis_index;   // [edge] -> H_1 basis index, or -1
  std::vector<std::size_t> basis_edges;    // basis index -> edge
  std::vector<std::size_t> discovery;      // vertices in tree discovery order
  std::vector<std::int64_t> parent_edge;   // [v] -> tree edge into v, -1 at root

  std::size_t group_order() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return successor.size(); }
  std::size_t h1_rank() const noexcept { return basis_edges.size(); }
};

/// Throws PreconditionError if alpha is not onto its target (the cover would
/// be disconnected) or its rank differs from `rank`.
CoverGraph build_cover(std::size_t rank, const FiniteHom& alpha,
                       TreeOrder order = TreeOrder::breadth_first);

/// Matrix of the lift of f fixing the identity vertex, acting on H_1 of the
/// cover in the non-tree-edge basis (column j = image of basis vector j).
///
/// Each edge (v, i) is sent to the path spelling f(x_i) from v. That path
/// must end at v * alpha(x_i); otherwise alpha o f != alpha and no such lift
/// exists, reported as PreconditionError.
IntMatrix lift_action_matrix(const CoverGraph& cover, const FreeEndo& f,
                             Execution exec = Execution::parallel);

struct TwistedInvariants {
  std::uint64_t group_order = 0;
  std::size_t h1_rank = 0;
  IntMatrix h_matrix;
  Integer det_h;
  LambdaMatrix presentation;  // sI - H
  CanonicalForm delta;        // canonical det(sI - H)
  std::vector<LaurentPoly> ideal_generators;  // {delta}: the ideal is principal
};

/// Twisted Alexander data of the fibred knot with monodromy f for the d-fold
/// cyclic cover and the regular representation of alpha's target.
TwistedInvariants twisted_invariants(const FreeEndo& f, unsigned d,
                                     const FiniteHom& alpha,
                                     Execution exec = Execution::parallel,
                                     TreeOrder order = TreeOrder::breadth_first);

/// H_1 of the d-fold cyclic branched cover: coker(T^d - I), T the
/// abelianized monodromy.
CokernelInvariants branched_cover_homology_from_monodromy(const FreeEndo& f,
                                                          unsigned d);

}  // namespace twist
