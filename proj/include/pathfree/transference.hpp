#pragma once

#include "pathfree/certificates.hpp"
#include "pathfree/graph.hpp"
#include "pathfree/rational.hpp"

#include <functional>
#include <optional>
#include <string>

namespace pathfree {

/// ε, the calibration constant C and the level s of h = h_s; the target
/// fraction is δ = ε^{C log(1/ε) / log h(ε)}.
struct TransferParams {
    Rational epsilon;
    Rational C{1};
    unsigned h_level = 0;

    double log2_delta() const;
    double delta() const;
    /// ⌈log(1/ε)/log h(ε)⌉
    std::size_t depth_cap() const;
};

/// Stable set (sparse mode) or clique (dense mode) of size ≥ ⌈|S|/(ε|S|+1)⌉ by
/// repeated minimum-degree extraction. Throws DomainError when S does not verify.
HomogeneousSet greedy_homogeneous(const Graph & g, const RestrictedSet & s);

/// Returns an ε-restricted set on ε, or nullopt.
using RestrictedFinder = std::function<std::optional<RestrictedSet>(const Rational & epsilon)>;

struct HomogeneousResult {
    HomogeneousSet set;
    double bound = 0;           // 2^{c (log n)^β}
    std::int64_t bound_ceil = 0;
    Rational epsilon;          // 0 when short-circuited
    bool short_circuit = false;
};

/// Converts restricted sets of size ≥ ε^{a(log 1/ε)^α}|G| into a clique or
/// stable set of size ≥ 2^{c(log|G|)^β}, c = 1/(2a+2), β = 1/(1+α). Throws
/// ContractError when the finder fails or undershoots.
HomogeneousResult restricted_to_homogeneous(const Graph & g, const RestrictedFinder & finder, double a, double alpha);

struct BasePairResult {
    Blockade blockade;
    std::int64_t required_width = 0; // ⌊x^d|G|⌋
    bool width_met = false;
};

/// Two-block x-sparse or (1−x)-dense blockade, as wide as a deterministic
/// search finds. The blockade always verifies; the width requirement may be
/// missed and is then reported through `width_met`.
BasePairResult base_pair_divider(const Graph & g, const Rational & x, const Rational & d);

/// Returns a verified x-restricted blockade of an induced subgraph. May throw
/// PathFound.
using BlockadeFinder = std::function<Blockade(const Graph & g, const Rational & x)>;

struct TransferOptions {
    std::optional<Rational> x_max; // cap on the x handed to the finder
    std::size_t exhaustive_limit = 18;
};

struct TransferResult {
    RestrictedSet set;
    bool below_target = false;
    double target = 0; // δ|G|
    std::size_t depth = 0;
    std::string route; // "whole", "refined", "peeled" or "exhaustive"
};

/// An ε-restricted set by recursive refinement through the finder's
/// blockades. The result always verifies; a size below δ|G| is flagged.
TransferResult transfer(const Graph & g, const BlockadeFinder & finder, const TransferParams & params,
    const TransferOptions & options = {});

/// Greedily removes the vertex of largest inner degree (antidegree in dense
/// mode) until the rest is ε-restricted in that mode.
VertexSet peel_to_restricted(const Graph & g, const VertexSet & s, const Rational & epsilon, Mode mode);

} // namespace pathfree
