#include "gcontract/fibonacci.hpp"

#include <algorithm>

#include "gcontract/beta.hpp"

namespace gcontract {

char role_symbol(FibRole role) {
  switch (role) {
  case FibRole::P:
    return 'P';
  case FibRole::Q:
    return 'Q';
  case FibRole::R_minus_P:
    return 'R';
  }
  return '?';
}

std::uint64_t fib_number(std::size_t j) {
  if (j > 93)
    throw GraphError("F_" + std::to_string(j) + " does not fit in 64 bits");
  std::uint64_t prev = 0, cur = 1;
  if (j == 0)
    return 0;
  for (std::size_t k = 1; k < j; ++k) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

FibInstance next_instance(const FibInstance& current) {
  const auto& g = current.graph;
  const std::size_t n = g.order();
  const auto map = evaluate_contraction_mapping(g);
  const std::size_t roots = map.n_prime;
  for (Vertex j = 0; j < roots; ++j)
    if (map.fibres[j].front() != j)
      throw InternalError("roots of the level " + std::to_string(current.level) +
                          " instance are not the prefix [0, n_R)");

  std::vector<Vertex> renumber(n);
  for (Vertex v = 0; v < n; ++v)
    renumber[v] = v < roots ? static_cast<Vertex>(n + v) : v;

  std::vector<Edge> edges;
  edges.reserve(g.size() + roots);
  for (const auto& [u, v] : g.edge_list())
    edges.emplace_back(renumber[u], renumber[v]);
  for (Vertex j = 0; j < roots; ++j)
    edges.emplace_back(j, static_cast<Vertex>(n + j));

  const std::size_t order = n + roots;
  FibInstance next;
  next.graph = ColouredGraph::from_edges(order, edges, std::vector<Colour>(order, 0));
  next.level = current.level + 1;
  next.prev_order = n;
  next.roles.resize(order);
  for (Vertex v = 0; v < order; ++v) {
    if (v < roots)
      next.roles[v] = FibRole::P;
    else if (v < n)
      next.roles[v] = FibRole::R_minus_P;
    else
      next.roles[v] = FibRole::Q;
  }
  return next;
}

} // namespace

FibInstance generate_fib_instance(std::size_t level) {
  if (level > kMaxFibLevel)
    throw GraphError("level " + std::to_string(level) + " exceeds the supported maximum " +
                     std::to_string(kMaxFibLevel));
  FibInstance instance;
  instance.graph = ColouredGraph::from_edges(1, {}, {0});
  instance.roles = {FibRole::R_minus_P};
  instance.prev_order = 1;
  while (instance.level < level)
    instance = next_instance(instance);
  return instance;
}

bool FibReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FibCheck& c) { return c.passed; });
}

FibReport verify_fib_instance(const FibInstance& instance) {
  FibReport report;
  report.level = instance.level;
  const auto& g = instance.graph;
  const std::size_t level = instance.level;
  const std::size_t n = g.order();
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const auto expected_order = fib_number(level + 2);
  add("order", n == expected_order,
      "|V| = " + std::to_string(n) + ", F_{i+2} = " + std::to_string(expected_order));
  add("prev_order", instance.prev_order == fib_number(level + 1),
      "n_{i-1} = " + std::to_string(instance.prev_order));
  add("monochromatic", std::all_of(g.colours().begin(), g.colours().end(),
                                   [](Colour c) { return c == 0; }));

  const auto map = evaluate_contraction_mapping(g);
  if (level >= 1) {
    const std::size_t prev = instance.prev_order;
    bool closed_form = map.becomes.size() == n;
    for (Vertex v = 0; closed_form && v < n; ++v)
      closed_form = map.becomes[v] == (v < prev ? v : v - prev);
    add("closed_form_map", closed_form, "v_j -> v_j (j < n_{i-1}), v_{j-n_{i-1}} otherwise");

    const auto previous = generate_fib_instance(level - 1);
    add("step_reproduces_previous", apply_contraction(g, map) == previous.graph,
        "G_i / beta == G_{i-1}");
  }

  // Role windows: P = [0, F_i), R = [0, n_{i-1}), Q = [n_{i-1}, n).
  const std::size_t p_end = level == 0 ? 0 : fib_number(level);
  const std::size_t r_end = instance.prev_order;
  bool windows = instance.roles.size() == n;
  for (Vertex v = 0; windows && v < n; ++v) {
    const FibRole expected = v < p_end ? FibRole::P : v < r_end ? FibRole::R_minus_P : FibRole::Q;
    windows = instance.roles[v] == expected;
  }
  add("role_windows", windows, "P=[0," + std::to_string(p_end) + ") R=[0," +
                                   std::to_string(r_end) + ") Q=[" + std::to_string(r_end) + "," +
                                   std::to_string(n) + ")");

  // Roles against the actual forest: P roots of 2-trees, Q non-roots, R\P 1-trees.
  bool forest = map.becomes.size() == n && instance.roles.size() == n;
  for (Vertex v = 0; forest && v < n; ++v) {
    const auto& fibre = map.fibres[map.becomes[v]];
    const bool is_root = fibre.front() == v;
    switch (instance.roles[v]) {
    case FibRole::P:
      forest = is_root && fibre.size() == 2;
      break;
    case FibRole::Q:
      forest = !is_root && fibre.size() == 2;
      break;
    case FibRole::R_minus_P:
      forest = is_root && fibre.size() == 1;
      break;
    }
  }
  add("roles_match_forest", forest, "trees of order 1 or 2 only");

  const auto result = contract_to_fixpoint(g);
  report.iterations = result.trace.iterations;
  add("iterations", report.iterations == level,
      std::to_string(report.iterations) + " iterations for level " + std::to_string(level));
  add("golden_ratio_bound", golden_ratio_bound(n) == level,
      "floor(log_phi(" + std::to_string(n) + ")) = " + std::to_string(golden_ratio_bound(n)));
  add("single_vertex_result", result.graph.order() == 1);
  return report;
}

} // namespace gcontract
