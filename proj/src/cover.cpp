#include "twist/cover.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "twist/errors.hpp"

namespace twist {

CoverGraph build_cover(std::size_t rank, const FiniteHom& alpha, TreeOrder order) {
  if (alpha.rank() != rank)
    throw PreconditionError("homomorphism rank " + std::to_string(alpha.rank()) +
                            " does not match free rank " + std::to_string(rank));
  CoverGraph cover;
  cover.rank = rank;
  cover.vertices = image_elements(alpha);
  if (cover.vertices.size() != alpha.target().order())
    throw PreconditionError("homomorphism is not onto " + alpha.target().name() +
                            " (image order " + std::to_string(cover.vertices.size()) +
                            "); the cover would be disconnected");

  const std::size_t g = cover.vertices.size();
  std::map<Perm, std::uint32_t> index;
  for (std::size_t v = 0; v < g; ++v) index.emplace(cover.vertices[v], static_cast<std::uint32_t>(v));
  cover.successor.resize(g * rank);
  cover.predecessor.resize(g * rank);
  for (std::size_t v = 0; v < g; ++v)
    for (std::size_t i = 0; i < rank; ++i) {
      const std::uint32_t w = index.at(cover.vertices[v] * alpha.image(i));
      cover.successor[v * rank + i] = w;
      cover.predecessor[w * rank + i] = static_cast<std::uint32_t>(v);
    }

  // Spanning tree over forward edges from the identity; generator order
  // breaks ties. Forward edges suffice because G is finite.
  cover.parent_edge.assign(g, -1);
  std::vector<bool> seen(g, false);
  seen[0] = true;
  if (order == TreeOrder::breadth_first) {
    cover.discovery.push_back(0);
    for (std::size_t head = 0; head < cover.discovery.size(); ++head) {
      const std::size_t v = cover.discovery[head];
      for (std::size_t i = 0; i < rank; ++i) {
        const std::size_t e = v * rank + i;
        const std::uint32_t w = cover.successor[e];
        if (seen[w]) continue;
        seen[w] = true;
        cover.parent_edge[w] = static_cast<std::int64_t>(e);
        cover.discovery.push_back(w);
      }
    }
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    cover.discovery.push_back(0);
    while (!stack.empty()) {
      auto& [v, next_gen] = stack.back();
      if (next_gen == rank) {
        stack.pop_back();
        continue;
      }
      const std::size_t e = v * rank + next_gen++;
      const std::uint32_t w = cover.successor[e];
      if (seen[w]) continue;
      seen[w] = true;
      cover.parent_edge[w] = static_cast<std::int64_t>(e);
      cover.discovery.push_back(w);
      stack.emplace_back(w, 0);
    }
  }

  std::vector<bool> is_tree(g * rank, false);
  for (auto e : cover.parent_edge)
    if (e >= 0) is_tree[static_cast<std::size_t>(e)] = true;
  cover.basis_index.assign(g * rank, -1);
  for (std::size_t e = 0; e < g * rank; ++e) {
    if (is_tree[e]) continue;
    cover.basis_index[e] = static_cast<std::int64_t>(cover.basis_edges.size());
    cover.basis_edges.push_back(e);
  }
  return cover;
}

namespace {

// Walks `w` from vertex `start`, adding +-1 on every non-tree edge crossed.
// Returns the end vertex.
std::uint32_t walk(const CoverGraph& cover, const Word& w, std::uint32_t start,
                   std::int64_t* chain) {
  const std::size_t n = cover.rank;
  std::uint32_t v = start;
  for (const auto& s : w.syllables()) {
    if (s.exponent > 0) {
      for (std::int64_t k = 0; k < s.exponent; ++k) {
        const std::size_t e = v * n + s.generator;
        if (cover.basis_index[e] >= 0) ++chain[cover.basis_index[e]];
        v = cover.successor[e];
      }
    } else {
      for (std::int64_t k = 0; k < -s.exponent; ++k) {
        const std::uint32_t u = cover.predecessor[v * n + s.generator];
        const std::size_t e = u * n + s.generator;
        if (cover.basis_index[e] >= 0) --chain[cover.basis_index[e]];
        v = u;
      }
    }
  }
  return v;
}

}  // namespace

IntMatrix lift_action_matrix(const CoverGraph& cover, const FreeEndo& f,
                             Execution exec) {
  if (f.rank() != cover.rank)
    throw PreconditionError("endomorphism rank does not match the cover");
  const std::size_t n = cover.rank;
  const std::size_t edges = cover.edge_count();
  const std::size_t b = cover.h1_rank();

  // image[e] = non-tree coordinates of the lifted edge e.
  std::vector<std::int64_t> image(edges * b, 0);
  std::vector<char> closes(edges, 1);
  auto lift_edge = [&](std::size_t e) {
    const auto v = static_cast<std::uint32_t>(e / n);
    const std::uint32_t end = walk(cover, f.image(e % n), v, image.data() + e * b);
    closes[e] = end == cover.successor[e];
  };
  if (exec == Execution::parallel) {
    ExceptionSlot slot;
    const auto total = static_cast<long long>(edges);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long e = 0; e < total; ++e) slot.run([&] { lift_edge(static_cast<std::size_t>(e)); });
    slot.rethrow();
  } else {
    for (std::size_t e = 0; e < edges; ++e) lift_edge(e);
  }
  for (std::size_t e = 0; e < edges; ++e)
    if (!closes[e])
      throw PreconditionError("monodromy does not preserve the covering homomorphism (generator " +
                              std::to_string(e % n) + ")");

  // Lifted tree path from the identity to each vertex.
  std::vector<std::int64_t> path(cover.group_order() * b, 0);
  for (std::size_t v : cover.discovery) {
    const std::int64_t pe = cover.parent_edge[v];
    if (pe < 0) continue;
    const std::size_t e = static_cast<std::size_t>(pe);
    const std::size_t u = e / n;
    for (std::size_t k = 0; k < b; ++k) path[v * b + k] = path[u * b + k] + image[e * b + k];
  }

  IntMatrix h(b, b);
  for (std::size_t col = 0; col < b; ++col) {
    const std::size_t e = cover.basis_edges[col];
    const std::size_t tail = e / n;
    const std::size_t head = cover.successor[e];
    for (std::size_t row = 0; row < b; ++row)
      h(row, col) = static_cast<long>(path[tail * b + row] + image[e * b + row] -
                                      path[head * b + row]);
  }
  return h;
}

TwistedInvariants twisted_invariants(const FreeEndo& f, unsigned d,
                                     const FiniteHom& alpha, Execution exec,
                                     TreeOrder order) {
  if (d == 0) throw std::invalid_argument("d must be >= 1");
  CoverGraph cover = build_cover(f.rank(), alpha, order);
  FreeEndo fd = power(f, d);
  if (!check_compatibility(fd, alpha))
    throw PreconditionError("h^" + std::to_string(d) +
                            " does not preserve the covering homomorphism");
  TwistedInvariants out;
  out.group_order = cover.group_order();
  out.h1_rank = cover.h1_rank();
  out.h_matrix = lift_action_matrix(cover, fd, exec);
  out.det_h = determinant(out.h_matrix);
  out.presentation = characteristic_presentation(out.h_matrix);
  out.delta = canonicalize(characteristic_polynomial(out.h_matrix));
  out.ideal_generators = {out.delta.poly()};
  return out;
}

CokernelInvariants branched_cover_homology_from_monodromy(const FreeEndo& f,
                                                          unsigned d) {
  IntMatrix t = abelianization_matrix(f);
  return cokernel_invariants(matrix_power(t, d) - identity_matrix(f.rank()));
}

}  // namespace twist
