#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcontract {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

/// Unordered vertex pair as given on input; orientation is irrelevant.
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graphs and invalid arguments to graph operations.
class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/**
   Simple undirected vertex-coloured graph.

   Vertices are the contiguous range [0, n) in input order; adjacency lists are
   strictly ascending and symmetric. Values are immutable after construction.
 */
class ColouredGraph {
public:
  ColouredGraph() = default;

  /**
     Validating constructor. Duplicate pairs collapse to one edge; self-loops,
     out-of-range endpoints and a colours/n mismatch are rejected with
     GraphError.
   */
  static ColouredGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                  std::vector<Colour> colours);

  /**
     Builds from already-canonical adjacency lists (sorted, symmetric, simple).
     Used by the contraction kernels; the invariants are re-checked in debug
     builds only.
   */
  static ColouredGraph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                                      std::vector<Colour> colours);

  std::size_t order() const { return colours_.size(); }
  std::size_t size() const { return m_; }

  Colour colour(Vertex v) const { return colours_[v]; }
  std::span<const Colour> colours() const { return colours_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const std::vector<std::vector<Vertex>>& adjacency() const { return adjacency_; }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edge_list() const;

  /// Describes the first violated representation invariant, if any.
  std::optional<std::string> invariant_violation() const;

  /// Labelled equality: same n, m, colours and adjacency index by index.
  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

private:
  ColouredGraph(std::vector<std::vector<Vertex>> adjacency, std::vector<Colour> colours);

  std::size_t m_ = 0;
  std::vector<Colour> colours_;
  std::vector<std::vector<Vertex>> adjacency_;
};

ColouredGraph new_graph(std::size_t n, std::span<const Edge> edges, std::vector<Colour> colours);

inline bool graphs_equal(const ColouredGraph& a, const ColouredGraph& b) { return a == b; }

/// Same-coloured neighbours of v, ascending.
std::vector<Vertex> colour_neighbourhood(const ColouredGraph& g, Vertex v);

/**
   Union of the colour neighbourhoods of a monochromatic set, minus the set.
   Throws GraphError if the set mixes colours or holds an out-of-range vertex.
 */
std::vector<Vertex> colour_neighbourhood_set(const ColouredGraph& g, std::span<const Vertex> set);

/// True iff no edge joins two vertices of the same colour.
bool is_properly_coloured(const ColouredGraph& g);

/// Relabels vertex v as perm[v]. perm must be a permutation of [0, n).
ColouredGraph relabel(const ColouredGraph& g, std::span<const Vertex> perm);

} // namespace gcontract
