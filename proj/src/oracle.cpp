#include "gcontract/oracle.hpp"

#include <algorithm>

namespace gcontract {

std::vector<Vertex> ColourPartition::block_of(std::size_t n) const {
  std::vector<Vertex> out(n, 0);
  for (Vertex b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b])
      out[v] = b;
  return out;
}

std::vector<Vertex> eval_colour_component(const ColouredGraph& g, Vertex v) {
  if (v >= g.order())
    throw GraphError("vertex " + std::to_string(v) + " out of range");

  // S <- {v}; N <- N_gamma(S); repeat S <- S u N; N <- N_gamma(S) until N empty.
  // Only the last frontier can contribute new colour neighbours, so N_gamma(S)
  // is evaluated over it.
  std::vector<char> in_component(g.order(), 0);
  std::vector<Vertex> component{v};
  in_component[v] = 1;
  std::vector<Vertex> frontier = colour_neighbourhood(g, v);
  while (!frontier.empty()) {
    for (Vertex u : frontier)
      in_component[u] = 1;
    component.insert(component.end(), frontier.begin(), frontier.end());
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex w : g.neighbours(u))
        if (!in_component[w] && g.colour(w) == g.colour(v))
          next.push_back(w);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  std::sort(component.begin(), component.end());
  return component;
}

ColourPartition eval_colour_partition(const ColouredGraph& g) {
  ColourPartition partition;
  std::vector<char> covered(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (covered[v])
      continue;
    auto block = eval_colour_component(g, v);
    for (Vertex u : block)
      covered[u] = 1;
    partition.block_colour.push_back(g.colour(v));
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

ColouredGraph quotient_by_partition(const ColouredGraph& g, const ColourPartition& partition) {
  const auto block_of = partition.block_of(g.order());
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edge_list())
    if (block_of[u] != block_of[v])
      edges.emplace_back(block_of[u], block_of[v]);
  std::vector<Colour> colours;
  colours.reserve(partition.blocks.size());
  for (const auto& block : partition.blocks)
    colours.push_back(g.colour(block.front()));
  return ColouredGraph::from_edges(partition.blocks.size(), edges, std::move(colours));
}

GammaContraction simple_gamma_contraction(const ColouredGraph& g) {
  const auto partition = eval_colour_partition(g);
  return {quotient_by_partition(g, partition), partition.block_of(g.order())};
}

} // namespace gcontract
