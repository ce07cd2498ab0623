#pragma once

// Adversarial instances on which the contraction needs exactly
// floor(log_phi(n)) iterations.
//
// G_0 is a single vertex. G_{i+1} attaches a new leaf to every root of the
// contraction forest of G_i and renumbers: the leaf of the root numbered j
// takes index j, the root itself moves to n_i + j, non-roots keep their index.
// One contraction step then maps G_{i+1} back onto G_i exactly, and
// |V(G_i)| = F_{i+2}.

#include <cstdint>
#include <string>
#include <vector>

#include "gcontract/graph.hpp"

namespace gcontract {

/// Role of a vertex in the contraction forest of its own instance.
enum class FibRole : std::uint8_t {
  P,          ///< leaf added at this level; root of a 2-vertex tree
  Q,          ///< non-root
  R_minus_P,  ///< root of a 1-vertex tree
};

char role_symbol(FibRole role);

struct FibInstance {
  ColouredGraph graph;
  std::size_t level = 0;
  std::vector<FibRole> roles;
  /// Order of the previous instance, n_{i-1} = F_{i+1}; 1 at level 0.
  std::size_t prev_order = 1;
};

constexpr std::size_t kMaxFibLevel = 30;

/// F_j with F_0 = 0, F_1 = 1.
std::uint64_t fib_number(std::size_t j);

/// Throws GraphError above kMaxFibLevel.
FibInstance generate_fib_instance(std::size_t level);

struct FibCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FibReport {
  std::size_t level = 0;
  std::size_t iterations = 0;
  std::vector<FibCheck> checks;

  bool ok() const;
};

/**
   Checks an instance: its order is F_{i+2}; one step on it reproduces the
   level i-1 instance exactly, through the closed-form map v_j -> v_j for
   j < n_{i-1} and v_j -> v_{j - n_{i-1}} otherwise; role windows sit where the
   enumeration puts them; and the full run takes exactly i iterations.
 */
FibReport verify_fib_instance(const FibInstance& instance);

} // namespace gcontract
