#include "gcontract/generators.hpp"

#include <limits>
#include <numeric>
#include <unordered_set>

namespace gcontract {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw GraphError("empty range for a bounded draw");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ColouredGraph gen_erdos_renyi(const RandomSpec& spec) {
  const std::size_t n = spec.n;
  const std::uint64_t max_edges = n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2;
  Rng rng(spec.seed);
  std::vector<Edge> edges;

  if (const auto* count = std::get_if<EdgeCount>(&spec.edges)) {
    if (count->m > max_edges)
      throw GraphError("m = " + std::to_string(count->m) + " exceeds n(n-1)/2 = " +
                       std::to_string(max_edges));
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count->m);
    edges.reserve(count->m);
    while (edges.size() < count->m) {
      auto u = static_cast<Vertex>(rng.below(n));
      auto v = static_cast<Vertex>(rng.below(n));
      if (u == v)
        continue;
      if (u > v)
        std::swap(u, v);
      if (chosen.insert((std::uint64_t{u} << 32) | v).second)
        edges.emplace_back(u, v);
    }
  } else {
    const double p = std::get<EdgeProbability>(spec.edges).p;
    if (!(p >= 0.0 && p <= 1.0))
      throw GraphError("edge probability must lie in [0, 1]");
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.unit() < p)
          edges.emplace_back(u, v);
  }
  return ColouredGraph::from_edges(n, edges, std::vector<Colour>(n, 0));
}

ColouredGraph assign_random_colours(const ColouredGraph& g, std::uint32_t colour_count,
                                    std::uint64_t seed) {
  if (colour_count == 0)
    throw GraphError("colour count must be at least 1");
  Rng rng(seed);
  std::vector<Colour> colours(g.order());
  for (auto& c : colours)
    c = static_cast<Colour>(rng.below(colour_count));
  auto adjacency = g.adjacency();
  return ColouredGraph::from_adjacency(std::move(adjacency), std::move(colours));
}

ColouredGraph gen_random_coloured(const RandomSpec& spec) {
  const auto g = gen_erdos_renyi(spec);
  if (spec.colour_count == 1)
    return g;
  // Colours draw from a different seed than the edges.
  return assign_random_colours(g, spec.colour_count, spec.seed ^ 0x9e3779b97f4a7c15ULL);
}

Permuted permute_enumeration(const ColouredGraph& g, std::uint64_t seed) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  return {relabel(g, perm), std::move(perm)};
}

std::vector<Vertex> invert_permutation(std::span<const Vertex> permutation) {
  std::vector<Vertex> inverse(permutation.size());
  for (Vertex v = 0; v < permutation.size(); ++v)
    inverse[permutation[v]] = v;
  return inverse;
}

} // namespace gcontract
