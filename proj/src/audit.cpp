#include "gcontract/audit.hpp"

namespace gcontract {

std::vector<std::string> audit_contraction(const ColouredGraph& g, const ContractionResult& result) {
  std::vector<std::string> issues;
  const auto& trace = result.trace;
  const std::size_t k_total = trace.iterations;
  if (trace.per_iteration.size() != k_total || trace.graphs.size() != k_total + 1) {
    issues.push_back("trace incomplete: run with tracing enabled");
    return issues;
  }
  if (!(trace.graphs.front() == g))
    issues.push_back("trace does not start at the input graph");
  if (!(trace.graphs.back() == result.graph))
    issues.push_back("trace does not end at the result graph");

  // Mapping evaluated on G_k, including the trailing trivial one on G_k_total.
  auto mapping_at = [&](std::size_t k) -> ContractionMapping {
    if (k < k_total)
      return *trace.per_iteration[k].mapping;
    return evaluate_contraction_mapping(trace.graphs[k]);
  };

  for (std::size_t k = 0; k < k_total; ++k) {
    const std::string at = "iteration " + std::to_string(k + 1) + ": ";
    const auto& gk = trace.graphs[k];
    const auto& record = trace.per_iteration[k];
    if (!record.mapping) {
      issues.push_back(at + "mapping missing");
      continue;
    }
    const auto& map = *record.mapping;
    if (auto violation = mapping_violation(gk, map)) {
      issues.push_back(at + *violation);
      continue;
    }
    if (!(map == evaluate_contraction_mapping(gk)))
      issues.push_back(at + "recorded mapping differs from a fresh evaluation");
    if (!(apply_contraction(gk, map) == trace.graphs[k + 1]))
      issues.push_back(at + "next graph is not the quotient by the mapping");
    if (!(map.n_prime < map.n))
      issues.push_back(at + "order did not strictly decrease");
    if (record.n_before != gk.order() || record.n_after != map.n_prime)
      issues.push_back(at + "record orders disagree with the graphs");

    std::vector<char> is_root(gk.order(), 0);
    for (const auto& fibre : map.fibres)
      is_root[fibre.front()] = 1;
    for (const auto& [u, v] : gk.edge_list())
      if (gk.colour(u) == gk.colour(v) && is_root[u] && is_root[v])
        issues.push_back(at + "adjacent same-coloured roots " + std::to_string(u) + " and " +
                         std::to_string(v));

    const auto next = mapping_at(k + 1);
    for (const auto& fibre : map.fibres) {
      if (fibre.size() != 1)
        continue;
      const Vertex v = fibre.front();
      if (colour_neighbourhood(gk, v).empty())
        continue;
      const Vertex image = map.becomes[v];
      if (next.fibres[next.becomes[image]].size() == 1)
        issues.push_back(at + "isolated root " + std::to_string(v) +
                         " with a same-coloured neighbour stays isolated");
    }
  }

  if (!is_properly_coloured(result.graph))
    issues.push_back("final graph has a monochromatic edge");
  if (!mapping_at(k_total).is_trivial())
    issues.push_back("final graph is not a fixpoint");
  if (k_total > golden_ratio_bound(g.order()))
    issues.push_back("iterations " + std::to_string(k_total) + " exceed floor(log_phi(n)) = " +
                     std::to_string(golden_ratio_bound(g.order())));
  if (compose_total_mapping(trace) != trace.total_map)
    issues.push_back("total map is not the composition of the per-iteration maps");
  return issues;
}

} // namespace gcontract
