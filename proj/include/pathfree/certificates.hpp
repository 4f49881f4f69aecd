#pragma once

#include "pathfree/graph.hpp"
#include "pathfree/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pathfree {

enum class Mode { sparse, dense };

/// An ε-sparse set (max inner degree ≤ ε|S|) or a (1−ε)-dense set (the same
/// in the complement). Sets of size at most two qualify in either mode.
struct RestrictedSet {
    VertexSet members;
    Rational epsilon;
    Mode mode = Mode::sparse;
};

enum class BlockadeKind { x_sparse, one_minus_x_dense, complete, anticomplete };

/// Ordered disjoint blocks. For the x-sparse / (1−x)-dense kinds the
/// condition is directional: every later block is sparse (dense) to every
/// earlier one.
struct Blockade {
    std::vector<VertexSet> blocks;
    BlockadeKind kind = BlockadeKind::anticomplete;
    Rational x;              // unused for complete / anticomplete
    bool degenerate = false; // width 0 because the guaranteed width floors to 0

    std::size_t length() const noexcept { return blocks.size(); }
    std::size_t width() const;
};

struct PathWitness {
    std::vector<Vertex> vertices;
};

enum class HomogeneousKind { clique, stable };

struct HomogeneousSet {
    VertexSet members;
    HomogeneousKind kind = HomogeneousKind::stable;
};

/// An induced path v_1..v_t with attendant sets A (complete to v_t,
/// anticomplete to the rest of the path) and B (anticomplete to the path).
struct Brush {
    PathWitness path;
    VertexSet a;
    VertexSet b;
    Rational x;
    Rational y;

    std::size_t t() const noexcept { return path.vertices.size(); }
};

/// Claims every S' ⊆ members with |S'| ≥ x|members| has edge density at most 1 − y³.
struct DenseCoreClaim {
    VertexSet members;
    Rational x;
    Rational y;
};

using Certificate = std::variant<RestrictedSet, Blockade, PathWitness, HomogeneousSet, DenseCoreClaim, Brush>;

struct Verdict {
    bool ok = false;
    std::string reason; // empty when ok

    static Verdict pass() { return {true, {}}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

/// Throws DomainError when members ⊄ V(g).
Verdict verify_restricted(const Graph & g, const RestrictedSet & cert);

/// Disjointness, the kind condition, length ≥ min_length and width ≥ min_width.
/// Overlaps are reported as a failed verdict.
Verdict verify_blockade(const Graph & g, const Blockade & cert, std::size_t min_length, std::size_t min_width);

Verdict verify_path_witness(const Graph & g, const PathWitness & cert, std::size_t k);

Verdict verify_homogeneous(const Graph & g, const HomogeneousSet & cert);

/// Size thresholds of a t-brush: a_t|G| and b_t|G| with the closed forms
/// a_1 = x/2, b_1 = x²y/8, a_t = x^{2t−1}y/2^{t+2}, b_t = x^{2t}y/2^{t+2}.
Rational brush_a_threshold(const Rational & x, const Rational & y, std::size_t t);
Rational brush_b_threshold(const Rational & x, const Rational & y, std::size_t t);

enum class CheckGrade { exhaustive, sampled, refuted };

std::string to_string(CheckGrade grade);

struct BrushVerdict {
    Verdict exact;        // bullets 1, 2, 3, 5 and disjointness
    CheckGrade bullet4 = CheckGrade::exhaustive;
    std::optional<VertexSet> bullet4_counterexample;

    bool ok() const noexcept { return exact.ok; }
};

struct BrushCheckOptions {
    std::size_t samples = 64;
    std::uint64_t seed = 0;
    std::size_t exhaustive_limit = 16;
};

/// `min_y_size` is the smallest |Y| the fourth bullet quantifies over
/// (⌈x^a|G|⌉, at least 1).
BrushVerdict verify_brush(const Graph & g, const Brush & cert, std::int64_t min_y_size, const BrushCheckOptions & options = {});

struct DenseCoreVerdict {
    enum class Status { verified_exact, verified_sampled, refuted };
    Status status = Status::verified_exact;
    std::optional<VertexSet> witness;

    bool ok() const noexcept { return status != Status::refuted; }
};

std::string to_string(DenseCoreVerdict::Status status);

/// Exhaustive over qualifying subsets when |members| ≤ 16; otherwise `samples`
/// random qualifying subsets plus a greedy densest-subset adversary.
DenseCoreVerdict verify_dense_core(const Graph & g, const DenseCoreClaim & cert, std::size_t samples, std::uint64_t seed);

/// |E(S)| / C(|S|, 2), and 0 for |S| ≤ 1.
Rational edge_density(const Graph & g, const VertexSet & s);

std::string to_string(Mode mode);
std::string to_string(BlockadeKind kind);
std::string to_string(HomogeneousKind kind);

} // namespace pathfree
