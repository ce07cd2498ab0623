#pragma once

// Seeded random instances. All draws go through std::mt19937_64 with
// hand-written bounded-integer and unit-interval conversions, so a seed gives
// the same graph on every platform and standard library.

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "gcontract/graph.hpp"

namespace gcontract {

struct EdgeCount {
  std::uint64_t m = 0;
};
struct EdgeProbability {
  double p = 0.0;
};

struct RandomSpec {
  std::size_t n = 0;
  std::variant<EdgeCount, EdgeProbability> edges = EdgeCount{};
  std::uint32_t colour_count = 1;
  std::uint64_t seed = 0;
};

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

private:
  std::mt19937_64 engine_;
};

/// G(n, m) by rejection over uniform pair draws, or G(n, p) over pairs u < v in
/// lexicographic order. All colours are 0. Throws GraphError when m exceeds
/// n(n-1)/2 or p lies outside [0, 1].
ColouredGraph gen_erdos_renyi(const RandomSpec& spec);

/// Independent uniform colour in [0, c) per vertex, drawn in vertex order.
ColouredGraph assign_random_colours(const ColouredGraph& g, std::uint32_t colour_count,
                                    std::uint64_t seed);

/// gen_erdos_renyi followed by assign_random_colours with the same seed mixed.
ColouredGraph gen_random_coloured(const RandomSpec& spec);

struct Permuted {
  ColouredGraph graph;
  /// Vertex v of the input is vertex permutation[v] of the output.
  std::vector<Vertex> permutation;
};

/// Relabels by a uniform random permutation (Fisher-Yates).
Permuted permute_enumeration(const ColouredGraph& g, std::uint64_t seed);

std::vector<Vertex> invert_permutation(std::span<const Vertex> permutation);

} // namespace gcontract
