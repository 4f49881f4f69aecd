#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathfree {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// A sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts `members`; throws DomainError on duplicates.
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    /// {0, ..., n-1}
    static VertexSet range(std::size_t n);
    /// Trusts the caller: `members` must already be strictly increasing.
    static VertexSet from_sorted(std::vector<Vertex> members);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;
    Vertex operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex> & members() const noexcept { return members_; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet & a, const VertexSet & b);
VertexSet set_difference(const VertexSet & a, const VertexSet & b);
VertexSet set_intersection(const VertexSet & a, const VertexSet & b);
bool disjoint(const VertexSet & a, const VertexSet & b);

/// Fixed-capacity bitset over [0, n).
class VertexMask {
public:
    VertexMask() = default;
    explicit VertexMask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    VertexMask(std::size_t n, const VertexSet & members);

    std::size_t capacity() const noexcept { return n_; }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    std::size_t count() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted CSR lists; graphs with at most kDenseRowLimit
/// vertices also carry a bit matrix, so pair queries and row intersections
/// are O(1) and word-parallel respectively.
class Graph {
public:
    static constexpr std::size_t kDefaultVertexCap = 1'000'000;
    static constexpr std::size_t kDenseRowLimit = std::size_t{1} << 14;

    enum class Duplicates { reject, merge };

    Graph() = default;

    /// Throws DomainError on out-of-range ids, self-loops, duplicate edges
    /// (unless merged) or n above `vertex_cap`.
    Graph(std::size_t n, std::span<const Edge> edges, Duplicates policy = Duplicates::reject,
        std::size_t vertex_cap = kDefaultVertexCap);

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    bool has_rows() const noexcept { return !rows_.empty(); }
    std::span<const std::uint64_t> row(Vertex v) const
    {
        return {rows_.data() + v * words_per_row_, words_per_row_};
    }

    /// |N(v) ∩ mask|
    std::size_t count_neighbors_in(Vertex v, const VertexMask & mask) const;

    /// All edges (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Same vertex set, edge iff non-edge in g. Throws DomainError when n exceeds
/// kDenseRowLimit (the output would not be sparse).
Graph complement(const Graph & g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;

    Vertex lift(Vertex local) const { return to_host[local]; }
    VertexSet lift(const VertexSet & local) const;
    std::vector<Vertex> lift(const std::vector<Vertex> & local) const;
};

/// G[members], relabelled to 0..|members|-1 in increasing host order.
InducedSubgraph induced(const Graph & g, const VertexSet & members);

/// Edge-list document: header "n m", then m lines "u v" with u < v.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph & g);

/// Every vertex of `members` has at most `bound` neighbours inside it
/// (non-neighbours when `in_complement`).
bool max_inner_degree_at_most(const Graph & g, const VertexSet & members, std::size_t bound, bool in_complement);

} // namespace pathfree
