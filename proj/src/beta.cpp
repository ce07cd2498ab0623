#include "gcontract/beta.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

namespace gcontract {

namespace {

/// Adjacency relabelled through becomes, stored CSR-style: the destinations of
/// source vertex v are targets[offsets[v] .. offsets[v + 1]).
struct RelabelledEdges {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
};

RelabelledEdges update_edge_destinations(const ColouredGraph& g, const ContractionMapping& map) {
  RelabelledEdges out;
  out.offsets.resize(g.order() + 1, 0);
  out.targets.reserve(2 * g.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    out.offsets[v] = out.targets.size();
    for (Vertex u : g.neighbours(v))
      out.targets.push_back(map.becomes[u]);
  }
  out.offsets[g.order()] = out.targets.size();
  return out;
}

std::vector<std::vector<Vertex>> merge_clusters_faithful(const RelabelledEdges& edges,
                                                         const ContractionMapping& map) {
  const std::size_t n_prime = map.n_prime;
  std::vector<std::vector<Vertex>> adjacency(n_prime);
  std::vector<char> marked(n_prime);
  for (Vertex target = 0; target < n_prime; ++target) {
    std::fill(marked.begin(), marked.end(), 0);
    std::size_t degree = 0;
    for (Vertex source : map.fibres[target]) {
      for (std::size_t e = edges.offsets[source]; e < edges.offsets[source + 1]; ++e) {
        const Vertex dest = edges.targets[e];
        if (dest != target && !marked[dest]) {
          marked[dest] = 1;
          ++degree;
        }
      }
    }
    auto& list = adjacency[target];
    list.reserve(degree);
    for (Vertex a = 0; a < n_prime; ++a)
      if (marked[a])
        list.push_back(a);
  }
  return adjacency;
}

std::vector<std::vector<Vertex>> merge_clusters_epoch(const RelabelledEdges& edges,
                                                      const ContractionMapping& map) {
  const std::size_t n_prime = map.n_prime;
  std::vector<std::vector<Vertex>> adjacency(n_prime);
  // stamp[a] == target + 1 marks a as already collected for target.
  std::vector<std::size_t> stamp(n_prime, 0);
  for (Vertex target = 0; target < n_prime; ++target) {
    const std::size_t epoch = std::size_t{target} + 1;
    auto& list = adjacency[target];
    for (Vertex source : map.fibres[target]) {
      for (std::size_t e = edges.offsets[source]; e < edges.offsets[source + 1]; ++e) {
        const Vertex dest = edges.targets[e];
        if (dest != target && stamp[dest] != epoch) {
          stamp[dest] = epoch;
          list.push_back(dest);
        }
      }
    }
    std::sort(list.begin(), list.end());
  }
  return adjacency;
}

std::vector<Colour> contract_vertex_colours(const ColouredGraph& g, const ContractionMapping& map) {
  std::vector<Colour> colours(map.n_prime);
  for (std::size_t i = 0; i < map.n_prime; ++i)
    colours[i] = g.colour(map.fibres[i].front());
  return colours;
}

ColouredGraph apply_unchecked(const ColouredGraph& g, const ContractionMapping& map,
                              Scratchpad scratchpad) {
  const auto edges = update_edge_destinations(g, map);
  auto adjacency = scratchpad == Scratchpad::faithful ? merge_clusters_faithful(edges, map)
                                                      : merge_clusters_epoch(edges, map);
  return ColouredGraph::from_adjacency(std::move(adjacency), contract_vertex_colours(g, map));
}

} // namespace

std::vector<Vertex> build_functional_digraph(const ColouredGraph& g) {
  std::vector<Vertex> parents(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const Colour c = g.colour(v);
    Vertex best = v;
    for (Vertex u : g.neighbours(v))
      if (u < best && g.colour(u) == c)
        best = u;
    parents[v] = best;
  }
  return parents;
}

std::vector<Vertex> project_to_roots(std::vector<Vertex> parents) {
  for (Vertex v = 0; v < parents.size(); ++v)
    if (parents[v] > v)
      throw GraphError("parent of " + std::to_string(v) + " is " + std::to_string(parents[v]) +
                       ", parents must not exceed their child");
  // parents[parents[v]] is already final when v is reached.
  for (Vertex v = 1; v < parents.size(); ++v)
    parents[v] = parents[parents[v]];
  return parents;
}

ContractionMapping compact_mapping(const ColouredGraph& g, const std::vector<Vertex>& roots) {
  const std::size_t n = g.order();
  if (roots.size() != n)
    throw GraphError("root array length " + std::to_string(roots.size()) +
                     " does not match graph order " + std::to_string(n));
  for (Vertex v = 0; v < n; ++v)
    if (roots[v] >= n || roots[roots[v]] != roots[v])
      throw GraphError("root array is not projected at vertex " + std::to_string(v));

  std::vector<std::size_t> sizes(n, 0);
  for (Vertex v = 0; v < n; ++v)
    ++sizes[roots[v]];

  std::vector<std::vector<Vertex>> by_root(n);
  for (Vertex r = 0; r < n; ++r)
    by_root[r].reserve(sizes[r]);
  for (Vertex v = 0; v < n; ++v)
    by_root[roots[v]].push_back(v);

  ContractionMapping map;
  map.n = n;
  for (Vertex r = 0; r < n; ++r) {
    if (sizes[r] == 0)
      continue;
    map.cluster_sizes.push_back(sizes[r]);
    map.fibres.push_back(std::move(by_root[r]));
  }
  map.n_prime = map.fibres.size();

  map.becomes.resize(n);
  for (Vertex target = 0; target < map.n_prime; ++target)
    for (Vertex v : map.fibres[target])
      map.becomes[v] = target;
  return map;
}

ContractionMapping evaluate_contraction_mapping(const ColouredGraph& g) {
  return compact_mapping(g, project_to_roots(build_functional_digraph(g)));
}

std::optional<std::string> mapping_violation(const ColouredGraph& g, const ContractionMapping& map) {
  const std::size_t n = g.order();
  if (map.n != n)
    return "mapping source order " + std::to_string(map.n) + " != graph order " + std::to_string(n);
  if (map.becomes.size() != n)
    return "becomes has length " + std::to_string(map.becomes.size());
  if (map.fibres.size() != map.n_prime || map.cluster_sizes.size() != map.n_prime)
    return "fibre or size arrays do not have length n'";
  if (map.n_prime > n)
    return "n' exceeds n";

  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  Vertex previous_min = 0;
  for (Vertex target = 0; target < map.n_prime; ++target) {
    const auto& fibre = map.fibres[target];
    if (fibre.empty())
      return "fibre " + std::to_string(target) + " is empty";
    if (fibre.size() != map.cluster_sizes[target])
      return "cluster size of " + std::to_string(target) + " disagrees with its fibre";
    if (!std::is_sorted(fibre.begin(), fibre.end()))
      return "fibre " + std::to_string(target) + " is not ascending";
    if (target > 0 && fibre.front() <= previous_min)
      return "fibres are not ordered by their minimum";
    previous_min = fibre.front();
    for (Vertex v : fibre) {
      if (v >= n)
        return "fibre member " + std::to_string(v) + " out of range";
      if (seen[v])
        return "vertex " + std::to_string(v) + " appears in two fibres";
      seen[v] = 1;
      ++covered;
      if (map.becomes[v] != target)
        return "becomes[" + std::to_string(v) + "] disagrees with its fibre";
      if (g.colour(v) != g.colour(fibre.front()))
        return "fibre " + std::to_string(target) + " is not monochromatic";
    }
  }
  if (covered != n)
    return "fibres do not cover the vertex set";

  // Connectivity of each fibre in the subgraph it induces.
  std::vector<char> reached(n, 0);
  std::vector<Vertex> stack;
  for (Vertex target = 0; target < map.n_prime; ++target) {
    const auto& fibre = map.fibres[target];
    std::size_t count = 1;
    reached[fibre.front()] = 1;
    stack.assign(1, fibre.front());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbours(v)) {
        if (map.becomes[u] == target && !reached[u]) {
          reached[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count != fibre.size())
      return "fibre " + std::to_string(target) + " is not connected";
  }
  return std::nullopt;
}

ColouredGraph apply_contraction(const ColouredGraph& g, const ContractionMapping& map,
                                Scratchpad scratchpad) {
  if (map.n != g.order() || map.becomes.size() != g.order())
    throw GraphError("mapping of order " + std::to_string(map.n) + " applied to graph of order " +
                     std::to_string(g.order()));
  if (auto violation = mapping_violation(g, map))
    throw GraphError("invalid contraction mapping: " + *violation);
  return apply_unchecked(g, map, scratchpad);
}

std::size_t golden_ratio_bound(std::size_t n) {
  if (n <= 1)
    return 0;
  // phi^k = (L_k + F_k sqrt5) / 2 with Lucas L and Fibonacci F, so
  // phi^k <= n  <=>  L_k <= 2n and 5 F_k^2 <= (2n - L_k)^2 (never equal for k >= 1).
  __extension__ using u128 = unsigned __int128;
  const u128 twice_n = u128{n} * 2;
  u128 fib = 1, fib_prev = 0;   // F_1, F_0
  u128 lucas = 1, lucas_prev = 2; // L_1, L_0
  std::size_t k = 0;
  while (lucas <= twice_n) {
    const u128 slack = twice_n - lucas;
    if (5 * fib * fib > slack * slack)
      break;
    ++k;
    const u128 next_fib = fib + fib_prev;
    fib_prev = fib;
    fib = next_fib;
    const u128 next_lucas = lucas + lucas_prev;
    lucas_prev = lucas;
    lucas = next_lucas;
  }
  return k;
}

ContractionResult contract_to_fixpoint(const ColouredGraph& g, const ContractOptions& options) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n0 = g.order();
  const std::size_t bound = options.max_iterations.value_or(golden_ratio_bound(n0) + 2);

  ContractionResult result{g, {}};
  auto& trace = result.trace;
  trace.original_order = n0;
  trace.total_map.resize(n0);
  std::iota(trace.total_map.begin(), trace.total_map.end(), Vertex{0});
  if (options.trace)
    trace.graphs.push_back(g);
  if (n0 <= 1)
    return result;

  for (;;) {
    const auto start = Clock::now();
    auto map = evaluate_contraction_mapping(result.graph);
    if (map.is_trivial())
      break;
    if (trace.iterations == bound)
      throw InternalError("contraction did not converge within " + std::to_string(bound) +
                          " iterations");

    ColouredGraph next = apply_unchecked(result.graph, map, options.scratchpad);
    for (auto& target : trace.total_map)
      target = map.becomes[target];

    IterationRecord record;
    record.n_before = result.graph.order();
    record.m_before = result.graph.size();
    record.n_after = next.order();
    record.m_after = next.size();
    record.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (options.trace) {
      record.mapping = std::move(map);
      trace.graphs.push_back(next);
    }
    trace.per_iteration.push_back(std::move(record));
    ++trace.iterations;
    result.graph = std::move(next);
  }
  return result;
}

std::vector<Vertex> compose_total_mapping(const ContractionTrace& trace) {
  std::vector<Vertex> total(trace.original_order);
  std::iota(total.begin(), total.end(), Vertex{0});
  std::size_t current_order = trace.original_order;
  for (std::size_t k = 0; k < trace.per_iteration.size(); ++k) {
    const auto& mapping = trace.per_iteration[k].mapping;
    if (!mapping)
      throw GraphError("iteration " + std::to_string(k + 1) + " has no recorded mapping");
    if (mapping->n != current_order || mapping->becomes.size() != current_order)
      throw GraphError("mapping chain broken at iteration " + std::to_string(k + 1));
    for (auto& target : total)
      target = mapping->becomes[target];
    current_order = mapping->n_prime;
  }
  return total;
}

bool equivalent_contractions(const ColouredGraph& g, const ContractionResult& result,
                             const ColourPartition& oracle) {
  const std::size_t n = g.order();
  const auto& total = result.trace.total_map;
  const auto& final_graph = result.graph;
  const std::size_t blocks = oracle.blocks.size();
  if (total.size() != n || final_graph.order() != blocks || oracle.block_colour.size() != blocks)
    return false;

  std::vector<char> in_range(n, 0);
  for (const auto& block : oracle.blocks)
    for (Vertex v : block) {
      if (v >= n || in_range[v])
        return false;
      in_range[v] = 1;
    }
  if (std::count(in_range.begin(), in_range.end(), 1) != static_cast<std::ptrdiff_t>(n))
    return false;
  const auto block_of = oracle.block_of(n);

  // (a) final vertex <-> oracle block must be a bijection consistent with every vertex.
  constexpr Vertex unset = UINT32_MAX;
  std::vector<Vertex> block_for_final(blocks, unset);
  std::vector<Vertex> final_for_block(blocks, unset);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex f = total[v];
    const Vertex b = block_of[v];
    if (f >= blocks)
      return false;
    if (block_for_final[f] == unset && final_for_block[b] == unset) {
      block_for_final[f] = b;
      final_for_block[b] = f;
    } else if (block_for_final[f] != b || final_for_block[b] != f) {
      return false;
    }
  }

  // (c) colours.
  for (Vertex f = 0; f < blocks; ++f)
    if (final_graph.colour(f) != oracle.block_colour[block_for_final[f]])
      return false;

  // (b) edges, re-expressed over oracle block indices.
  const ColouredGraph reference = quotient_by_partition(g, oracle);
  std::vector<Edge> translated;
  translated.reserve(final_graph.size());
  for (const auto& [u, v] : final_graph.edge_list()) {
    Vertex a = block_for_final[u], b = block_for_final[v];
    if (a > b)
      std::swap(a, b);
    translated.emplace_back(a, b);
  }
  std::sort(translated.begin(), translated.end());
  return translated == reference.edge_list();
}

} // namespace gcontract
