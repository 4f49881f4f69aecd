#pragma once

#include "pathfree/certificates.hpp"
#include "pathfree/graph.hpp"
#include "pathfree/rational.hpp"
#include "pathfree/transference.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pathfree {

/// h_s(x) = 2^{(log2 1/x)^{s/(s+1)}} for 0 < x < 1/2.
double h_eval(unsigned s, const Rational & x);

/// Constants of the level-s step: b = 3^{1+1/s}C, d = 3bk + b + 5 and the
/// dyadic threshold c = 2^{-c_log2}.
struct LevelConstants {
    unsigned s = 0;
    std::size_t k = 0;
    Rational C;
    double b = 0;
    double d = 0;
    std::optional<Rational> b_exact; // when 3^{1+1/s} is rational (s = 1)
    std::optional<Rational> d_exact;
    Rational c;
    unsigned c_log2 = 0;
};

/// Smallest dyadic exponent with c^b ≤ 1/h_s(c) ≤ min(1/(60k), 1/100).
LevelConstants constants_for(unsigned s, std::size_t k, const Rational & C);

/// Re-checks the c inequalities (tolerance 1e-9 in log space).
bool level_invariant_holds(const LevelConstants & constants);

enum class DivideMode { paper_exact, relaxed };

struct DivideOptions {
    DivideMode mode = DivideMode::paper_exact;
    std::optional<std::size_t> a_override; // exponent a of the dense engine
    std::optional<Rational> d_override;    // width exponent
    std::optional<Rational> b_override;    // restricted-set exponent of step (1)
    Rational C{1};
    Rational base_d{2};                    // width exponent at s = 0
};

struct DivideResult {
    std::variant<Blockade, PathWitness> outcome;
    std::string route;          // base, sparse, dense, fallback_base
    bool fallback = false;
    bool width_met = true;      // blockade width ≥ claimed_width
    std::size_t claimed_length = 0;
    std::int64_t claimed_width = 0;
    Rational y;                 // 1/h_s(x), 0 at s = 0
    std::string note;           // why a fallback happened
};

/// An x-sparse or (1−x)-dense blockade of length h_s(x) and width ⌊x^d|G|⌋,
/// or an induced P_k met on the way.
DivideResult divide(const Graph & g, std::size_t k, unsigned s, const Rational & x, const DivideOptions & options = {});

/// The blockade finder handed to transfer at level s: PathWitness outcomes
/// throw PathFound.
BlockadeFinder divider_finder(std::size_t k, unsigned s, const DivideOptions & options);

struct PipelineOptions {
    DivideOptions divide;
    bool assume_pk_free = false; // skip the exact P_k-freeness check
};

/// Minimal s with 1/(s+1) ≤ alpha.
unsigned level_for_alpha(const Rational & alpha);

struct NearRodlResult {
    TransferResult transfer;
    unsigned s = 0;
};

/// A verified ε-restricted set through transfer over divide at level s. An
/// input containing an induced P_k throws PathFound with a verified witness.
NearRodlResult near_rodl(const Graph & g, std::size_t k, const Rational & alpha, const Rational & epsilon,
    const PipelineOptions & options = {});

struct NearEhResult {
    HomogeneousSet set;
    double bound = 0;             // 2^{c(log n)^β}
    std::string route;            // theorem, sweep or trivial
    std::size_t theorem_size = 0; // 0 when that route failed
    std::string theorem_note;
    Rational best_epsilon;        // sweep epsilon that produced the set
};

/// Clique or stable set: the conversion through near_rodl, then a dyadic
/// ε sweep through near_rodl and greedy extraction; the largest is returned.
NearEhResult near_eh(const Graph & g, std::size_t k, const Rational & alpha, const PipelineOptions & options = {});

struct CalibrationPoint {
    Rational C;
    std::size_t runs = 0;
    std::size_t below_target = 0;
};

/// Runs near_rodl for every (graph, ε) pair and each C.
std::vector<CalibrationPoint> calibrate(const std::vector<Graph> & suite, const std::vector<Rational> & epsilons,
    const std::vector<Rational> & candidates, std::size_t k, const Rational & alpha, const PipelineOptions & options = {});

} // namespace pathfree
