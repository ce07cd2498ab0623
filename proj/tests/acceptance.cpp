// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gcontract/audit.hpp"
#include "gcontract/beta.hpp"
#include "gcontract/fibonacci.hpp"
#include "gcontract/generators.hpp"
#include "gcontract/io.hpp"
#include "gcontract/oracle.hpp"

using namespace gcontract;
namespace fx = gcontract::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass)
      detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ContractionResult traced(const ColouredGraph& g, Scratchpad scratchpad = Scratchpad::faithful) {
  ContractOptions options;
  options.trace = true;
  options.scratchpad = scratchpad;
  return contract_to_fixpoint(g, options);
}

// Graphs exercised by criteria 1 to 3; criterion 4 audits all of them.
std::vector<ColouredGraph> audited;

struct RandomCase {
  ColouredGraph graph;
  std::string label;
};

std::vector<RandomCase> random_corpus() {
  static const double kProbabilities[] = {0.05, 0.1, 0.3, 0.5};
  std::vector<RandomCase> corpus;
  std::uint64_t seed = 0;
  for (std::size_t n = 1; n <= 64; ++n)
    for (double p : kProbabilities)
      for (std::uint32_t colours = 1; colours <= 4; ++colours) {
        ++seed;
        corpus.push_back({gen_random_coloured({n, EdgeProbability{p}, colours, seed}),
                          "seed " + std::to_string(seed)});
      }
  return corpus;
}

Outcome criterion_fibonacci() {
  Outcome out;
  const auto start = Clock::now();
  for (std::size_t i = 0; i <= 12; ++i) {
    const auto inst = generate_fib_instance(i);
    const auto& g = inst.graph;
    audited.push_back(g);
    const std::string tag = "level " + std::to_string(i) + ": ";
    if (g.order() != fib_number(i + 2))
      out.fail(tag + "order " + std::to_string(g.order()));
    const auto result = contract_to_fixpoint(g);
    if (result.trace.iterations != i)
      out.fail(tag + "iterations " + std::to_string(result.trace.iterations));
    if (i >= 1) {
      const auto step = apply_contraction(g, evaluate_contraction_mapping(g));
      if (!(step == generate_fib_instance(i - 1).graph))
        out.fail(tag + "one step does not give the previous level");
      if (golden_ratio_bound(g.order()) != i)
        out.fail(tag + "bound " + std::to_string(golden_ratio_bound(g.order())));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0)
    out.fail("runtime " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = "levels 0..12 exact, " + std::to_string(elapsed) + " s";
  return out;
}

Outcome criterion_oracle(const std::vector<RandomCase>& corpus) {
  Outcome out;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& g = corpus[k].graph;
    audited.push_back(g);
    const auto oracle = eval_colour_partition(g);
    const auto result = contract_to_fixpoint(g);
    ++checked;
    if (!equivalent_contractions(g, result, oracle))
      out.fail(corpus[k].label + ": not equivalent to the oracle");
    if (result.trace.iterations > golden_ratio_bound(g.order()))
      out.fail(corpus[k].label + ": iterations above bound");
    if (k % 10 != 3 || k / 10 >= 100)
      continue;
    const auto permuted = permute_enumeration(g, 1000 + k);
    audited.push_back(permuted.graph);
    auto presult = contract_to_fixpoint(permuted.graph);
    ++checked;
    if (presult.trace.iterations > golden_ratio_bound(g.order()))
      out.fail(corpus[k].label + " permuted: iterations above bound");
    auto pulled = presult.trace.total_map;
    for (Vertex v = 0; v < g.order(); ++v)
      pulled[v] = presult.trace.total_map[permuted.permutation[v]];
    presult.trace.total_map = std::move(pulled);
    if (!equivalent_contractions(g, presult, oracle))
      out.fail(corpus[k].label + " permuted: not equivalent to the oracle");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0)
    out.fail("runtime " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(checked - corpus.size()) +
                 " permuted, " + std::to_string(elapsed) + " s";
  return out;
}

Outcome criterion_fixtures() {
  Outcome out;
  const auto start = Clock::now();

  const auto p4 = fx::p4();
  audited.push_back(p4);
  const auto r = traced(p4);
  const std::vector<Edge> one_edge{{0, 1}};
  if (r.trace.iterations != 2)
    out.fail("P4 iterations " + std::to_string(r.trace.iterations));
  else if (!(r.trace.graphs[1] == new_graph(2, one_edge, {0, 0})))
    out.fail("P4 intermediate is not a monochromatic edge");
  if (r.graph.order() != 1)
    out.fail("P4 final order " + std::to_string(r.graph.order()));

  const auto fig = fx::figure_graph();
  audited.push_back(fig);
  const auto f = traced(fig);
  if (f.trace.iterations != 1)
    out.fail("figure iterations " + std::to_string(f.trace.iterations));
  if (f.graph.order() != 8 || f.graph.size() != 9)
    out.fail("figure result has wrong order or size");
  if (!is_properly_coloured(f.graph))
    out.fail("figure result not properly coloured");
  if (!(f.graph == fx::figure_graph_contracted()))
    out.fail("figure result differs from the expected graph");
  const auto expected = fx::figure_graph_fibres();
  const std::set<std::vector<Vertex>> expected_set(expected.begin(), expected.end());
  if (f.trace.per_iteration.empty() || !f.trace.per_iteration[0].mapping ||
      std::set<std::vector<Vertex>>(f.trace.per_iteration[0].mapping->fibres.begin(),
                                    f.trace.per_iteration[0].mapping->fibres.end()) != expected_set)
    out.fail("figure fibres differ from the expected clusters");

  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0)
    out.fail("runtime " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = "P4 in 2 iterations, figure graph to 8 vertices and 9 edges";
  return out;
}

Outcome criterion_invariants() {
  Outcome out;
  std::size_t iterations = 0;
  for (const auto& g : audited) {
    const auto result = traced(g);
    iterations += result.trace.iterations;
    const auto issues = audit_contraction(g, result);
    if (!issues.empty())
      out.fail("n=" + std::to_string(g.order()) + ": " + issues.front());
  }
  if (out.pass)
    out.detail = std::to_string(audited.size()) + " graphs, " + std::to_string(iterations) +
                 " iterations audited";
  return out;
}

Outcome criterion_scratchpads(const std::vector<RandomCase>& corpus) {
  Outcome out;
  for (const auto& c : corpus) {
    const auto faithful = traced(c.graph, Scratchpad::faithful);
    const auto epoch = traced(c.graph, Scratchpad::epoch);
    if (!(faithful.graph == epoch.graph) || faithful.trace.graphs != epoch.trace.graphs)
      out.fail(c.label + ": scratchpads disagree");
  }
  if (out.pass)
    out.detail = std::to_string(corpus.size()) + " graphs, every intermediate graph equal";
  return out;
}

Outcome criterion_empirical() {
  Outcome out;
  const std::size_t n = 50000;
  const auto m = static_cast<std::uint64_t>(std::ceil(n * std::log(static_cast<double>(n))));
  const std::size_t bound = golden_ratio_bound(n);
  const auto start = Clock::now();
  std::size_t within_six = 0, worst = 0;
  std::vector<std::size_t> histogram(bound + 2, 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = gen_erdos_renyi({n, EdgeCount{m}, 1, seed});
    const auto result = contract_to_fixpoint(g);
    const auto it = result.trace.iterations;
    if (!is_properly_coloured(result.graph))
      out.fail("seed " + std::to_string(seed) + " did not converge");
    worst = std::max(worst, it);
    within_six += it <= 6 ? 1 : 0;
    ++histogram[std::min(it, bound + 1)];
  }
  const double elapsed = seconds_since(start);
  if (worst > bound)
    out.fail("worst case " + std::to_string(worst) + " exceeds " + std::to_string(bound));
  if (within_six < 19)
    out.fail(std::to_string(within_six) + "/20 seeds within 6 iterations");
  if (elapsed >= 60.0)
    out.fail("runtime " + std::to_string(elapsed) + " s");
  std::string hist;
  for (std::size_t k = 0; k < histogram.size(); ++k)
    if (histogram[k] != 0)
      hist += " " + std::to_string(k) + ":" + std::to_string(histogram[k]);
  const std::string summary = "m=" + std::to_string(m) + ", iterations{" + hist + " }, worst " +
                              std::to_string(worst) + ", " + std::to_string(elapsed) + " s";
  out.detail = out.pass ? summary : out.detail + " (" + summary + ")";
  return out;
}

nlohmann::json stats_without_times(const ColouredGraph& g, const ContractionResult& r) {
  auto doc = stats_json(g, r);
  doc.erase("total_wall_time_ms");
  for (auto& it : doc["per_iteration"])
    it.erase("wall_time_ms");
  return doc;
}

Outcome criterion_round_trip() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const RandomSpec spec{seed % 60, EdgeProbability{0.1 + 0.004 * seed}, static_cast<std::uint32_t>(1 + seed % 5), seed};
    const auto g = gen_random_coloured(spec);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    if (!(parse_graph_string(serialize_graph(g)) == g))
      out.fail(tag + "parse after serialize changed the graph");
    if (!(gen_random_coloured(spec) == g))
      out.fail(tag + "generator not deterministic");
    const auto a = traced(g);
    const auto b = traced(gen_random_coloured(spec));
    if (a.trace.graphs != b.trace.graphs || a.trace.total_map != b.trace.total_map)
      out.fail(tag + "traces differ");
    if (stats_without_times(g, a) != stats_without_times(g, b))
      out.fail(tag + "stats differ");
  }
  const auto fib = generate_fib_instance(10);
  if (!(generate_fib_instance(10).graph == fib.graph) || fib.roles != generate_fib_instance(10).roles)
    out.fail("fibonacci generator not deterministic");
  if (out.pass)
    out.detail = "100 graphs round-trip; graphs, traces and stats reproduce";
  return out;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    Outcome out;
    out.fail(std::string("exception: ") + e.what());
    return out;
  }
}

} // namespace

int main() {
  const auto corpus = random_corpus();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 fibonacci tightness", criterion_fibonacci},
      {"2 oracle equivalence", [&] { return criterion_oracle(corpus); }},
      {"3 fixtures", criterion_fixtures},
      {"4 structural invariants", criterion_invariants},
      {"5 scratchpad equivalence", [&] { return criterion_scratchpads(corpus); }},
      {"6 empirical iterations", criterion_empirical},
      {"7 round-trip and determinism", criterion_round_trip},
  };
  int failures = 0;
  for (const auto& [name, body] : criteria) {
    const auto outcome = guarded(body);
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
