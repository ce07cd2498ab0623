#pragma once

// Iteration-count experiment over seeded random graphs. Seeds are
// independent, so the parallel runner hands them to OpenMP threads; the
// serial runner is the reference it is tested against.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcontract/beta.hpp"

namespace gcontract {

struct ExperimentConfig {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t colours = 1;
  std::size_t seeds = 1;
  std::uint64_t first_seed = 1;
  Scratchpad scratchpad = Scratchpad::faithful;
};

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t iterations = 0;
  std::size_t final_order = 0;
  std::size_t final_size = 0;
  double generate_ms = 0.0;
  double contract_ms = 0.0;
  bool converged = false;
  std::string error;

  /// Everything except timings.
  bool same_outcome(const SeedOutcome& other) const;
};

std::vector<SeedOutcome> run_experiment_serial(const ExperimentConfig& config);
std::vector<SeedOutcome> run_experiment_parallel(const ExperimentConfig& config);

nlohmann::json experiment_json(const ExperimentConfig& config,
                               const std::vector<SeedOutcome>& outcomes);

} // namespace gcontract
