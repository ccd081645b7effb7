#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tnineq/index_set.hpp"
#include "tnineq/matrix.hpp"
#include "tnineq/rational.hpp"

namespace tnineq {

/// One directed edge inside a layer, from wire `from` on the left boundary
/// to wire `to` on the right boundary.
struct NetworkEdge {
  int from = 0;
  int to = 0;
  Scalar weight;
};

struct NetworkLayer {
  std::vector<NetworkEdge> edges;
};

/// Weighted planar network with n sources and n sinks, organized as a
/// left-to-right sequence of layers. Every path moves one layer per step, so
/// vertex-disjoint path families are exactly the families that occupy
/// pairwise distinct wires on every layer boundary.
class PlanarNetwork {
 public:
  PlanarNetwork(int n, std::vector<NetworkLayer> layers);

  int n() const { return n_; }
  const std::vector<NetworkLayer>& layers() const { return layers_; }
  std::size_t boundary_vertex_count() const;

  /// Appends the other network's layers on the right (sinks glued to sources).
  PlanarNetwork concatenated(const PlanarNetwork& other) const;

 private:
  int n_ = 0;
  std::vector<NetworkLayer> layers_;
};

/// One layer per factor: a lower factor contributes the unit horizontal edges
/// plus one falling edge (k+1 -> k) of weight w, an upper factor the mirror
/// rising edge, and the diagonal contributes horizontal edges weighted d_k.
PlanarNetwork build_network(const BidiagFactorization& f);

inline constexpr std::size_t kDefaultVertexBudget = 1 << 16;

/// Sum over all vertex-disjoint path families from sources I to sinks J of
/// the product of edge weights, via a memoized per-layer sweep over occupied
/// wire sets. Refuses networks whose boundary vertex count exceeds the budget.
Scalar path_weight_sum(const PlanarNetwork& net, const IndexSet& I,
                       const IndexSet& J,
                       std::size_t vertex_budget = kDefaultVertexBudget);

/// True iff path_weight_sum equals the Bareiss minor of compose(f) for every
/// (I, J) pair. Refuses n > 5.
bool lindstrom_check(const BidiagFactorization& f);

/// Graphviz DOT rendering; vertex ids are "L{wire}C{boundary}" and edges carry
/// a weight="p/q" attribute.
std::string to_dot(const PlanarNetwork& net);

}  // namespace tnineq
