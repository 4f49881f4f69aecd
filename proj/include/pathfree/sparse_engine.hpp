#pragma once

#include "pathfree/certificates.hpp"
#include "pathfree/graph.hpp"
#include "pathfree/rational.hpp"

#include <variant>
#include <vector>

namespace pathfree {

struct PeelLayer {
    VertexSet a; // poorly expanding in the residual graph before this layer
    VertexSet b; // its neighbourhood there
};

struct PeelTrace {
    std::vector<PeelLayer> layers;
    VertexSet residual;
    Rational mu;

    VertexSet peeled_a() const; // union of the A-sets
};

/// Repeatedly removes a set A with |A| ≤ cap and |N(A)| ≤ mu|A| (in the current
/// residual) together with N(A). Candidates are grown by BFS from seeds taken in
/// increasing degree order; seeds next to removed vertices are revisited.
PeelTrace peel_poorly_expanding(const Graph & g, const Rational & mu, std::int64_t cap);

/// Continues an existing trace on its residual.
void continue_peel(const Graph & g, PeelTrace & trace, std::int64_t cap);

/// Packs the components of g[a], in order of their smallest vertex, into
/// groups of size in [lo, hi]. Throws ContractError when a component is larger
/// than lo or hi < 2 lo.
std::vector<VertexSet> group_components(const Graph & g, const VertexSet & a, std::int64_t lo, std::int64_t hi);

/// A round of path growth whose expansion fell below the cap. `witness` is
/// the first `cap` vertices of the set that failed to expand.
struct ExpansionShortfall {
    std::size_t round = 0;
    VertexSet witness;
    std::int64_t reached = 0;
};

/// Path growth inside `residual`: S_0 = the cap lowest residual vertices,
/// R_i ⊆ S_{i−1} minimal with |N(R_i) \ (S_0 ∪ … ∪ S_{i−1})| ≥ cap, and the path
/// read back from S_{k−1}.
std::variant<PathWitness, ExpansionShortfall> try_grow_expander_path(
    const Graph & g, const VertexSet & residual, std::size_t k, std::int64_t cap);

/// As above on the whole graph; a shortfall throws InternalContradiction
/// naming the offending set.
PathWitness grow_expander_path(const Graph & g, std::size_t k, const Rational & y, std::int64_t cap);

struct SparseOptions {
    /// Require y ≤ 1/(60k). Disabling it is for desk-scale experiments; the
    /// either/or guarantee then no longer applies.
    bool enforce_y_bound = true;
};

struct SparseResult {
    std::variant<PathWitness, Blockade> outcome;
    PeelTrace trace;
    std::size_t shortfall_peels = 0; // sets peeled after a path-growth shortfall
};

/// On a y²-sparse graph: an induced P_k, or an anticomplete blockade of length
/// ≥ ⌈1/y⌉ and width ≥ ⌊y²|G|⌋ (flagged degenerate when that floor is 0).
SparseResult sparse_case(const Graph & g, std::size_t k, const Rational & y, const SparseOptions & options = {});

} // namespace pathfree
