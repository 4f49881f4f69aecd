#pragma once

#include "pathfree/certificates.hpp"
#include "pathfree/graph.hpp"

#include <optional>

namespace pathfree {

/// Exhaustive backtracking search for an induced path on k vertices. Start
/// vertices are tried in increasing degree order; absence certifies that g is
/// P_k-free.
std::optional<PathWitness> find_induced_path(const Graph & g, std::size_t k);

} // namespace pathfree
