#include "gcontract/experiment.hpp"

#include <algorithm>
#include <chrono>

#include "gcontract/generators.hpp"

namespace gcontract {

namespace {

SeedOutcome run_seed(const ExperimentConfig& config, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  SeedOutcome out;
  out.seed = seed;
  try {
    const auto t0 = Clock::now();
    const auto g = gen_random_coloured({config.n, EdgeCount{config.m}, config.colours, seed});
    const auto t1 = Clock::now();
    ContractOptions options;
    options.scratchpad = config.scratchpad;
    const auto result = contract_to_fixpoint(g, options);
    const auto t2 = Clock::now();
    out.n = g.order();
    out.m = g.size();
    out.iterations = result.trace.iterations;
    out.final_order = result.graph.order();
    out.final_size = result.graph.size();
    out.generate_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.contract_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    out.converged = is_properly_coloured(result.graph);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

} // namespace

bool SeedOutcome::same_outcome(const SeedOutcome& other) const {
  return seed == other.seed && n == other.n && m == other.m && iterations == other.iterations &&
         final_order == other.final_order && final_size == other.final_size &&
         converged == other.converged && error == other.error;
}

std::vector<SeedOutcome> run_experiment_serial(const ExperimentConfig& config) {
  std::vector<SeedOutcome> outcomes;
  outcomes.reserve(config.seeds);
  for (std::size_t s = 0; s < config.seeds; ++s)
    outcomes.push_back(run_seed(config, config.first_seed + s));
  return outcomes;
}

std::vector<SeedOutcome> run_experiment_parallel(const ExperimentConfig& config) {
  std::vector<SeedOutcome> outcomes(config.seeds);
  const auto count = static_cast<std::int64_t>(config.seeds);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < count; ++s)
    outcomes[s] = run_seed(config, config.first_seed + static_cast<std::uint64_t>(s));
  return outcomes;
}

nlohmann::json experiment_json(const ExperimentConfig& config,
                               const std::vector<SeedOutcome>& outcomes) {
  nlohmann::json doc;
  doc["config"] = {{"n", config.n},
                   {"m", config.m},
                   {"colours", config.colours},
                   {"seeds", config.seeds},
                   {"first_seed", config.first_seed},
                   {"scratchpad", config.scratchpad == Scratchpad::faithful ? "faithful" : "epoch"}};
  auto runs = nlohmann::json::array();
  std::size_t max_iterations = 0, failures = 0;
  double total_ms = 0.0;
  for (const auto& o : outcomes) {
    nlohmann::json run = {{"seed", o.seed},
                          {"n", o.n},
                          {"m", o.m},
                          {"iterations", o.iterations},
                          {"final_n", o.final_order},
                          {"final_m", o.final_size},
                          {"generate_ms", o.generate_ms},
                          {"contract_ms", o.contract_ms},
                          {"converged", o.converged}};
    if (!o.error.empty())
      run["error"] = o.error;
    runs.push_back(std::move(run));
    max_iterations = std::max(max_iterations, o.iterations);
    failures += !o.converged;
    total_ms += o.contract_ms;
  }
  doc["runs"] = std::move(runs);
  doc["summary"] = {{"max_iterations", max_iterations},
                    {"bound", golden_ratio_bound(config.n)},
                    {"failures", failures},
                    {"total_contract_ms", total_ms}};
  return doc;
}

} // namespace gcontract
