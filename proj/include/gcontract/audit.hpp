#pragma once

#include <string>
#include <vector>

#include "gcontract/beta.hpp"

namespace gcontract {

/**
   Re-checks the structural guarantees of a traced contraction run
   (ContractOptions::trace must have been on) and lists every violation found:

   - each mapping satisfies mapping_violation (fibres monochromatic, connected,
     root ordered) and was applied faithfully to produce the next graph;
   - no same-coloured edge joins two fibre minima;
   - a singleton fibre whose vertex has a same-coloured neighbour maps to a
     vertex whose fibre in the next iteration is not a singleton;
   - n strictly decreases, the final graph is properly coloured, the iteration
     count respects golden_ratio_bound, and total_map matches the composition
     of the traced maps.
 */
std::vector<std::string> audit_contraction(const ColouredGraph& g, const ContractionResult& result);

} // namespace gcontract
