#include "tnineq/planar.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace tnineq {

PlanarNetwork::PlanarNetwork(int n, std::vector<NetworkLayer> layers)
    : n_(n), layers_(std::move(layers)) {
  if (n < 1 || n > IndexSet::kMaxAmbient)
    throw std::invalid_argument("network order out of range");
  for (const NetworkLayer& layer : layers_)
    for (const NetworkEdge& e : layer.edges) {
      if (e.from < 1 || e.from > n || e.to < 1 || e.to > n)
        throw std::invalid_argument("network edge endpoint out of range");
      if (e.weight < 0)
        throw std::invalid_argument("network edge weights must be nonnegative");
    }
}

std::size_t PlanarNetwork::boundary_vertex_count() const {
  return static_cast<std::size_t>(n_) * (layers_.size() + 1);
}

PlanarNetwork PlanarNetwork::concatenated(const PlanarNetwork& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("cannot concatenate networks of different order");
  std::vector<NetworkLayer> layers = layers_;
  layers.insert(layers.end(), other.layers_.begin(), other.layers_.end());
  return PlanarNetwork(n_, std::move(layers));
}

PlanarNetwork build_network(const BidiagFactorization& f) {
  const int n = f.n();
  std::vector<NetworkLayer> layers;
  layers.reserve(f.factors().size());
  for (const BidiagFactor& factor : f.factors()) {
    NetworkLayer layer;
    switch (factor.kind) {
      case BidiagFactor::Kind::Lower:
        for (int k = 1; k <= n; ++k)
          layer.edges.push_back(NetworkEdge{k, k, Scalar(1)});
        layer.edges.push_back(NetworkEdge{factor.k + 1, factor.k, factor.weight});
        break;
      case BidiagFactor::Kind::Upper:
        for (int k = 1; k <= n; ++k)
          layer.edges.push_back(NetworkEdge{k, k, Scalar(1)});
        layer.edges.push_back(NetworkEdge{factor.k, factor.k + 1, factor.weight});
        break;
      case BidiagFactor::Kind::Diag:
        for (int k = 1; k <= n; ++k)
          layer.edges.push_back(NetworkEdge{k, k, factor.diag[k - 1]});
        break;
    }
    layers.push_back(std::move(layer));
  }
  return PlanarNetwork(n, std::move(layers));
}

namespace {

// Sums, over ways of routing every occupied source wire of `state` through
// the layer onto pairwise distinct target wires, the product of edge weights;
// accumulates the reached states.
void route_layer(const NetworkLayer& layer, std::uint64_t state,
                 const Scalar& weight_so_far,
                 std::unordered_map<std::uint64_t, Scalar>& next) {
  std::vector<int> sources;
  for (int b = 0; b < 64; ++b)
    if ((state >> b) & 1) sources.push_back(b + 1);

  struct Frame {
    std::size_t source_index;
    std::uint64_t targets;
    Scalar weight;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{0, 0, weight_so_far});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.source_index == sources.size()) {
      next[fr.targets] += fr.weight;
      continue;
    }
    const int src = sources[fr.source_index];
    for (const NetworkEdge& e : layer.edges) {
      if (e.from != src || e.weight == 0) continue;
      const std::uint64_t bit = std::uint64_t{1} << (e.to - 1);
      if (fr.targets & bit) continue;
      stack.push_back(Frame{fr.source_index + 1, fr.targets | bit,
                            fr.weight * e.weight});
    }
  }
}

}  // namespace

Scalar path_weight_sum(const PlanarNetwork& net, const IndexSet& I,
                       const IndexSet& J, std::size_t vertex_budget) {
  if (I.ambient() != net.n() || J.ambient() != net.n())
    throw std::invalid_argument("index set ambient differs from network order");
  if (I.size() != J.size())
    throw std::invalid_argument("path weight sum requires |I| = |J|");
  if (net.boundary_vertex_count() > vertex_budget)
    throw std::domain_error("network exceeds the vertex budget");

  std::unordered_map<std::uint64_t, Scalar> states;
  states.emplace(I.mask(), Scalar(1));
  for (const NetworkLayer& layer : net.layers()) {
    std::unordered_map<std::uint64_t, Scalar> next;
    for (const auto& [state, weight] : states)
      route_layer(layer, state, weight, next);
    states = std::move(next);
  }
  const auto it = states.find(J.mask());
  return it == states.end() ? Scalar(0) : it->second;
}

bool lindstrom_check(const BidiagFactorization& f) {
  const int n = f.n();
  if (n > 5) throw std::domain_error("lindstrom_check refused for n > 5");
  const Matrix A = compose(f);
  const PlanarNetwork net = build_network(f);
  for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << n); ++rm) {
    for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << n); ++cm) {
      if (std::popcount(rm) != std::popcount(cm)) continue;
      const IndexSet I = IndexSet::from_mask(rm, n);
      const IndexSet J = IndexSet::from_mask(cm, n);
      if (path_weight_sum(net, I, J) != minor(A, I, J)) return false;
    }
  }
  return true;
}

std::string to_dot(const PlanarNetwork& net) {
  std::string out = "digraph planar_network {\n  rankdir=LR;\n  node [shape=point];\n";
  const int n = net.n();
  for (std::size_t c = 0; c <= net.layers().size(); ++c)
    for (int k = 1; k <= n; ++k)
      out += "  L" + std::to_string(k) + "C" + std::to_string(c) + ";\n";
  for (std::size_t c = 0; c < net.layers().size(); ++c) {
    for (const NetworkEdge& e : net.layers()[c].edges) {
      out += "  L" + std::to_string(e.from) + "C" + std::to_string(c) + " -> L" +
             std::to_string(e.to) + "C" + std::to_string(c + 1) + " [weight=\"" +
             scalar_to_string(e.weight) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace tnineq
