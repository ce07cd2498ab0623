#pragma once

// Reference colour-component routines. These follow the plain frontier
// expansion and are kept deliberately separate from the iterative engine in
// beta.hpp, which is checked against them.

#include <utility>
#include <vector>

#include "gcontract/graph.hpp"

namespace gcontract {

struct ColourPartition {
  /// Disjoint blocks covering V, each sorted ascending, in discovery order.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Colour> block_colour;

  /// block_of[v] is the index of the block containing v.
  std::vector<Vertex> block_of(std::size_t n) const;
};

/// Maximal monochromatic connected vertex set containing v, ascending.
std::vector<Vertex> eval_colour_component(const ColouredGraph& g, Vertex v);

/// All colour components, each grown from the lowest-index uncovered vertex.
ColourPartition eval_colour_partition(const ColouredGraph& g);

/**
   Quotient of g by an arbitrary vertex partition: one vertex per block,
   block colour from the block's first member, edges between distinct blocks
   deduplicated.
 */
ColouredGraph quotient_by_partition(const ColouredGraph& g, const ColourPartition& partition);

struct GammaContraction {
  ColouredGraph graph;
  /// Original vertex -> contracted vertex (block index).
  std::vector<Vertex> block_of;
};

/// One-shot colour contraction through eval_colour_partition.
GammaContraction simple_gamma_contraction(const ColouredGraph& g);

} // namespace gcontract
