#pragma once

// Shared graphs and independent oracles for the test suites. Nothing here
// calls into the contraction engine.

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "gcontract/graph.hpp"

namespace gcontract::testing {

/// Path 0-2-3-1 with one colour.
inline ColouredGraph p4() {
  const std::vector<Edge> edges{{0, 2}, {1, 3}, {2, 3}};
  return new_graph(4, edges, {0, 0, 0, 0});
}

/// 24-vertex, 3-colour graph contracted in one step to 8 vertices.
/// Colour ids 0, 1, 2 stand for the three fills of the drawing.
inline ColouredGraph figure_graph() {
  constexpr Colour a = 0, b = 1, c = 2;
  const std::vector<Colour> colours{b, b, b, a, b, a, b, c, c, c, a, a,
                                    a, b, b, b, b, b, b, c, c, c, a, b};
  const std::vector<Edge> edges{{0, 1},   {0, 6},   {1, 2},   {2, 3},   {2, 12},  {3, 4},
                                {3, 15},  {4, 16},  {4, 18},  {5, 21},  {5, 22},  {6, 7},
                                {6, 23},  {7, 8},   {8, 9},   {9, 10},  {10, 11}, {11, 12},
                                {13, 14}, {14, 15}, {16, 17}, {17, 18}, {18, 19}, {19, 20},
                                {20, 21}, {21, 22}, {22, 23}};
  return new_graph(24, edges, colours);
}

/// The contracted graph drawn next to figure_graph, vertices numbered by root order.
inline ColouredGraph figure_graph_contracted() {
  constexpr Colour a = 0, b = 1, c = 2;
  const std::vector<Edge> edges{{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                                {1, 6}, {2, 7}, {3, 7}, {4, 5}};
  return new_graph(8, edges, {b, a, b, a, c, a, b, c});
}

/// Fibres of figure_graph under one step, listed by root.
inline std::vector<std::vector<Vertex>> figure_graph_fibres() {
  return {{0, 1, 2, 6, 23}, {3}, {4, 16, 17, 18}, {5, 22},
          {7, 8, 9},        {10, 11, 12}, {13, 14, 15}, {19, 20, 21}};
}

/// Colour-restricted breadth-first search from v.
inline std::vector<Vertex> bfs_component(const ColouredGraph& g, Vertex v) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> queue;
  std::vector<Vertex> out;
  seen[v] = 1;
  queue.push(v);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    out.push_back(u);
    for (Vertex w : g.neighbours(u))
      if (!seen[w] && g.colour(w) == g.colour(v)) {
        seen[w] = 1;
        queue.push(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

/// Components of the subgraph keeping only monochromatic edges, as a set of sets.
inline std::set<std::vector<Vertex>> monochromatic_components(const ColouredGraph& g) {
  UnionFind uf(g.order());
  for (const auto& [u, v] : g.edge_list())
    if (g.colour(u) == g.colour(v))
      uf.unite(u, v);
  std::vector<std::vector<Vertex>> groups(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    groups[uf.find(v)].push_back(v);
  std::set<std::vector<Vertex>> out;
  for (auto& grp : groups)
    if (!grp.empty())
      out.insert(grp);
  return out;
}

/// Groups vertices by label, as a set of sets.
inline std::set<std::vector<Vertex>> fibres_of(const std::vector<Vertex>& labels) {
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (labels[v] >= groups.size())
      groups.resize(labels[v] + 1);
    groups[labels[v]].push_back(v);
  }
  std::set<std::vector<Vertex>> out;
  for (auto& grp : groups)
    if (!grp.empty())
      out.insert(grp);
  return out;
}

/// Quotient edges by explicit relabel and set dedupe.
inline std::set<Edge> quotient_edges(const ColouredGraph& g, const std::vector<Vertex>& labels) {
  std::set<Edge> out;
  for (const auto& [u, v] : g.edge_list()) {
    Vertex a = labels[u], b = labels[v];
    if (a == b)
      continue;
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

} // namespace gcontract::testing
