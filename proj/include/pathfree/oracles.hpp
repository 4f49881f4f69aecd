#pragma once

#include "pathfree/certificates.hpp"
#include "pathfree/graph.hpp"

#include <optional>

namespace pathfree {

/// Size caps for the exponential oracles. Exceeding a cap throws CapExceeded.
struct OracleCaps {
    std::size_t homogeneous = 30;
    std::size_t restricted = 18;
    std::size_t path_vertices = 14;
    std::size_t path_k = 6;

    /// Defaults overridden by PATHFREE_CAP_HOMOGENEOUS, PATHFREE_CAP_RESTRICTED,
    /// PATHFREE_CAP_PATH and PATHFREE_CAP_PATH_K.
    static OracleCaps from_env();
};

struct HomogeneousOptimum {
    VertexSet clique;
    VertexSet stable;
};

/// Maximum clique and maximum stable set by branch and bound.
HomogeneousOptimum brute_max_homogeneous(const Graph & g, const OracleCaps & caps = OracleCaps::from_env());

/// A maximum-cardinality ε-restricted subset (either mode). Ties prefer the
/// sparse mode, then the lexicographically smallest mask.
RestrictedSet brute_best_restricted(const Graph & g, const Rational & epsilon, const OracleCaps & caps = OracleCaps::from_env());

/// Exhaustive: a k-subset induces P_k iff it spans k−1 edges, is connected and
/// has maximum degree ≤ 2.
std::optional<PathWitness> brute_induced_path(const Graph & g, std::size_t k, const OracleCaps & caps = OracleCaps::from_env());

} // namespace pathfree
