#pragma once

#include "pathfree/certificates.hpp"
#include "pathfree/graph.hpp"
#include "pathfree/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pathfree {

/// Size thresholds a_t, b_t (t = 1..k) built by the recurrences
/// a_1 = x/2, b_1 = x²y/8, a_{t+1} = (x/2)b_t, b_{t+1} = (x²/2)b_t.
struct BrushSchedule {
    std::size_t k = 0;
    Rational x;
    Rational y;
    std::size_t a = 0;
    std::vector<Rational> a_t; // a_t[t-1]
    std::vector<Rational> b_t;

    /// a defaults to 3k.
    static BrushSchedule make(std::size_t k, const Rational & x, const Rational & y, std::size_t a = 0);

    const Rational & a_of(std::size_t t) const { return a_t.at(t - 1); }
    const Rational & b_of(std::size_t t) const { return b_t.at(t - 1); }
};

/// Given S, returns S' ⊆ S with |S'| ≥ x|S| that is (1−y³)-dense, or nullopt
/// when it cannot. The engine checks every returned set.
using DenseProvider = std::function<std::optional<VertexSet>(const VertexSet & s)>;

/// A core C of a (1−x)-dense blockade (prefix..., C) grown inside provider(host).
struct DenseCore {
    VertexSet c;
    VertexSet host;       // the S it came from
    VertexSet s_prime;    // provider(S)
    Blockade blockade_prefix;
};

/// Evidence that C violates its X/Y property: fewer than y|X|/4 vertices of X
/// have at least x|Y| non-neighbours in Y.
struct RetrySignal {
    std::size_t level = 0;
    VertexSet x_set;
    VertexSet y_set;
    std::string reason;
};

struct NoDenseSubset {
    VertexSet s;
};

struct DenseOptions {
    std::size_t a = 0;             // 0 means 3k
    bool paper_ranges = true;      // require 0 < x ≤ y ≤ 1/100
    std::size_t iteration_budget = 1'000'000;
};

/// Claim-(1) starting point: provider(S) as a one-block core, or the failure.
std::variant<DenseCore, NoDenseSubset> build_max_dense_blockade(
    const Graph & g, const VertexSet & s, const Rational & x, const Rational & y, std::size_t a, const DenseProvider & provider);

/// Extends the core with retry evidence: Y becomes the next block and the
/// vertices of X that are (1−x)-dense to Y the new core. Returns the finished
/// blockade once it has ⌈1/y⌉ blocks. Throws InternalContradiction when the
/// evidence does not extend the blockade.
std::optional<Blockade> extend_core(const Graph & g, DenseCore & core, const RetrySignal & retry,
    const Rational & x, const Rational & y, std::size_t a);

/// A 1-brush from the core, or retry evidence against it.
std::variant<Brush, RetrySignal> find_one_brush(const Graph & g, const BrushSchedule & schedule, const DenseCore & core);

/// Extends a t-brush using the core C ⊆ B built at level t. Retry evidence
/// targets level t − 1.
std::variant<Brush, RetrySignal> extend_brush(const Graph & g, const BrushSchedule & schedule, const Brush & brush, const DenseCore & core);

struct DenseResult {
    std::variant<DenseCoreClaim, Blockade, PathWitness> outcome;
    std::vector<Brush> brushes; // every brush emitted, in order
    std::size_t retries = 0;
    std::size_t provider_calls = 0;
};

/// Outcome (a) on provider failure, outcome (b) as a (1−x)-dense blockade of
/// length ⌈1/y⌉ and width ⌊x^a|G|⌋, or the induced P_k a k-brush carries.
/// Throws ContractError on bad provider output and InternalContradiction when
/// the iteration budget runs out.
DenseResult dense_case(const Graph & g, std::size_t k, const Rational & x, const Rational & y,
    const DenseProvider & provider, const DenseOptions & options = {});

} // namespace pathfree
