#include "gcontract/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace gcontract {

namespace {

void check_vertex(const ColouredGraph& g, Vertex v) {
  if (v >= g.order())
    throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.order()) + ")");
}

} // namespace

ColouredGraph::ColouredGraph(std::vector<std::vector<Vertex>> adjacency, std::vector<Colour> colours)
    : colours_(std::move(colours)), adjacency_(std::move(adjacency)) {
  std::size_t degree_sum = 0;
  for (const auto& list : adjacency_)
    degree_sum += list.size();
  m_ = degree_sum / 2;
}

ColouredGraph ColouredGraph::from_edges(std::size_t n, std::span<const Edge> edges,
                                        std::vector<Colour> colours) {
  if (colours.size() != n)
    throw GraphError("colour count " + std::to_string(colours.size()) +
                     " does not match vertex count " + std::to_string(n));
  if (n > std::size_t{UINT32_MAX})
    throw GraphError("vertex count exceeds index type");

  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint out of range [0, " + std::to_string(n) + ")");
    if (u == v)
      throw GraphError("self-loop on vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return ColouredGraph(std::move(adjacency), std::move(colours));
}

ColouredGraph ColouredGraph::from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                                            std::vector<Colour> colours) {
  if (adjacency.size() != colours.size())
    throw GraphError("adjacency and colour arrays differ in length");
  ColouredGraph g(std::move(adjacency), std::move(colours));
  assert(!g.invariant_violation());
  return g;
}

std::vector<Edge> ColouredGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::optional<std::string> ColouredGraph::invariant_violation() const {
  const std::size_t n = order();
  if (adjacency_.size() != n)
    return "adjacency has " + std::to_string(adjacency_.size()) + " lists for " +
           std::to_string(n) + " vertices";
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = adjacency_[v];
    degree_sum += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex u = list[i];
      if (u >= n)
        return "neighbour " + std::to_string(u) + " of " + std::to_string(v) + " out of range";
      if (u == v)
        return "self-loop on " + std::to_string(v);
      if (i > 0 && list[i - 1] >= u)
        return "adjacency of " + std::to_string(v) + " not strictly ascending";
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v))
        return "edge " + std::to_string(v) + "->" + std::to_string(u) + " has no reverse";
    }
  }
  if (degree_sum != 2 * m_)
    return "degree sum " + std::to_string(degree_sum) + " != 2m";
  return std::nullopt;
}

ColouredGraph new_graph(std::size_t n, std::span<const Edge> edges, std::vector<Colour> colours) {
  return ColouredGraph::from_edges(n, edges, std::move(colours));
}

std::vector<Vertex> colour_neighbourhood(const ColouredGraph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<Vertex> out;
  const Colour c = g.colour(v);
  for (Vertex u : g.neighbours(v))
    if (g.colour(u) == c)
      out.push_back(u);
  return out;
}

std::vector<Vertex> colour_neighbourhood_set(const ColouredGraph& g, std::span<const Vertex> set) {
  for (Vertex v : set)
    check_vertex(g, v);
  if (set.empty())
    return {};
  const Colour c = g.colour(set.front());
  for (Vertex v : set)
    if (g.colour(v) != c)
      throw GraphError("vertex set is not monochromatic");

  std::vector<char> in_set(g.order(), 0);
  for (Vertex v : set)
    in_set[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : set)
    for (Vertex u : g.neighbours(v))
      if (g.colour(u) == c && !in_set[u])
        out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_properly_coloured(const ColouredGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbours(v))
      if (g.colour(u) == g.colour(v))
        return false;
  return true;
}

ColouredGraph relabel(const ColouredGraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n)
    throw GraphError("permutation length does not match vertex count");
  std::vector<char> seen(n, 0);
  for (Vertex p : perm) {
    if (p >= n || seen[p])
      throw GraphError("relabelling is not a permutation");
    seen[p] = 1;
  }
  std::vector<std::vector<Vertex>> adjacency(n);
  std::vector<Colour> colours(n);
  for (Vertex v = 0; v < n; ++v) {
    colours[perm[v]] = g.colour(v);
    auto& list = adjacency[perm[v]];
    list.reserve(g.degree(v));
    for (Vertex u : g.neighbours(v))
      list.push_back(perm[u]);
    std::sort(list.begin(), list.end());
  }
  return ColouredGraph::from_adjacency(std::move(adjacency), std::move(colours));
}

} // namespace gcontract
