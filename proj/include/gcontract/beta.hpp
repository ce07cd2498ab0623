#pragma once

// Iterative colour contraction through locally computed contraction maps.
//
// One iteration evaluates a contraction mapping on the current graph (every
// vertex points at the smallest vertex in its same-colour closed
// neighbourhood; the resulting forest is projected onto its roots; roots are
// renumbered in ascending order) and then applies it, merging each fibre into
// one vertex. Iterating until the mapping is trivial yields the colour
// contraction, in at most floor(log_phi(n)) iterations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcontract/graph.hpp"
#include "gcontract/oracle.hpp"

namespace gcontract {

/**
   Forward and inverse form of one contraction step V -> V'.

   becomes[v] is the target index of v; fibres[i] lists the sources mapped to
   i in ascending order, and fibres are ordered by their minimum element.
 */
struct ContractionMapping {
  std::size_t n = 0;
  std::size_t n_prime = 0;
  std::vector<Vertex> becomes;
  std::vector<std::vector<Vertex>> fibres;
  std::vector<std::size_t> cluster_sizes;

  bool is_trivial() const { return n == n_prime; }

  friend bool operator==(const ContractionMapping&, const ContractionMapping&) = default;
};

/// How adjacency lists of a fibre are merged.
enum class Scratchpad {
  /// Dense n'-length marker array cleared for every target vertex, O(n'^2 + m).
  faithful,
  /// Version-stamped marker array, never cleared, O(n + m + n') plus a sort per list.
  epoch,
};

/// parents[v] = min(colour_neighbourhood(v) u {v}); always parents[v] <= v.
std::vector<Vertex> build_functional_digraph(const ColouredGraph& g);

/**
   Maps every vertex straight to the root of its tree with one ascending pass.
   The pass is order-dependent and must stay sequential. Throws GraphError if
   some parents[v] > v.
 */
std::vector<Vertex> project_to_roots(std::vector<Vertex> parents);

/// Renumbers the distinct roots to 0..n'-1 in ascending order and builds fibres.
ContractionMapping compact_mapping(const ColouredGraph& g, const std::vector<Vertex>& roots);

/// compact_mapping(g, project_to_roots(build_functional_digraph(g))).
ContractionMapping evaluate_contraction_mapping(const ColouredGraph& g);

/**
   First violated mapping invariant relative to g, if any: index ranges, fibre
   and becomes agreement, sizes, root order, and that every fibre is
   monochromatic and connected in g.
 */
std::optional<std::string> mapping_violation(const ColouredGraph& g, const ContractionMapping& map);

/**
   Quotient g / map. Edges are relabelled, merged per fibre with duplicates and
   self-loops dropped, and each target takes its fibre's colour. Throws
   GraphError when map does not fit g.
 */
ColouredGraph apply_contraction(const ColouredGraph& g, const ContractionMapping& map,
                                Scratchpad scratchpad = Scratchpad::faithful);

/// Largest k with phi^k <= n, computed exactly; 0 for n <= 1.
std::size_t golden_ratio_bound(std::size_t n);

struct IterationRecord {
  std::size_t n_before = 0;
  std::size_t m_before = 0;
  std::size_t n_after = 0;
  std::size_t m_after = 0;
  double wall_time_ms = 0.0;
  /// Present only when tracing.
  std::optional<ContractionMapping> mapping;
};

struct ContractionTrace {
  std::size_t original_order = 0;
  /// Number of applied contractions; the final trivial evaluation is not counted.
  std::size_t iterations = 0;
  std::vector<IterationRecord> per_iteration;
  /// G_0 .. G_k when tracing, empty otherwise.
  std::vector<ColouredGraph> graphs;
  /// Original vertex -> vertex of the final graph.
  std::vector<Vertex> total_map;
};

struct ContractOptions {
  /// Defaults to golden_ratio_bound(n) + 2.
  std::optional<std::size_t> max_iterations;
  Scratchpad scratchpad = Scratchpad::faithful;
  bool trace = false;
};

struct ContractionResult {
  ColouredGraph graph;
  ContractionTrace trace;
};

/**
   Contracts until the mapping is trivial. Throws InternalError if more than
   max_iterations contractions would be needed.
 */
ContractionResult contract_to_fixpoint(const ColouredGraph& g, const ContractOptions& options = {});

/**
   Left-to-right composition of the traced per-iteration maps. Requires a
   trace recorded with tracing on; throws GraphError on a broken chain.
 */
std::vector<Vertex> compose_total_mapping(const ContractionTrace& trace);

/**
   Checks a contraction result against an oracle partition of g: same fibre
   partition, same quotient edges under the block correspondence, same
   colours.
 */
bool equivalent_contractions(const ColouredGraph& g, const ContractionResult& result,
                             const ColourPartition& oracle);

} // namespace gcontract
