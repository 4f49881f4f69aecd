#include "pathfree/certificates.hpp"

#include "pathfree/errors.hpp"
#include "pathfree/random.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pathfree {

// The verifiers deliberately use only Graph::adjacent / Graph::neighbors and
// their own bookkeeping, never the counting helpers the engines use.

std::size_t Blockade::width() const
{
    if (blocks.empty())
        return 0;
    std::size_t w = blocks.front().size();
    for (auto & b : blocks)
        w = std::min(w, b.size());
    return w;
}

std::string to_string(Mode mode)
{
    return mode == Mode::sparse ? "sparse" : "dense";
}

std::string to_string(BlockadeKind kind)
{
    switch (kind) {
    case BlockadeKind::x_sparse: return "x_sparse";
    case BlockadeKind::one_minus_x_dense: return "one_minus_x_dense";
    case BlockadeKind::complete: return "complete";
    case BlockadeKind::anticomplete: return "anticomplete";
    }
    return "?";
}

std::string to_string(HomogeneousKind kind)
{
    return kind == HomogeneousKind::clique ? "clique" : "stable";
}

std::string to_string(CheckGrade grade)
{
    switch (grade) {
    case CheckGrade::exhaustive: return "exhaustive";
    case CheckGrade::sampled: return "sampled";
    case CheckGrade::refuted: return "refuted";
    }
    return "?";
}

std::string to_string(DenseCoreVerdict::Status status)
{
    switch (status) {
    case DenseCoreVerdict::Status::verified_exact: return "verified_exact";
    case DenseCoreVerdict::Status::verified_sampled: return "verified_sampled";
    case DenseCoreVerdict::Status::refuted: return "refuted";
    }
    return "?";
}

namespace {
    void require_subset(const Graph & g, const VertexSet & s, const char * what)
    {
        if (!s.empty() && s.members().back() >= g.n())
            throw DomainError(std::string(what) + ": vertex " + std::to_string(s.members().back())
                + " is not in the graph");
    }

    bool in_range(const Graph & g, const VertexSet & s)
    {
        return s.empty() || s.members().back() < g.n();
    }

    std::string vstr(Vertex v)
    {
        return std::to_string(v);
    }
}

Verdict verify_restricted(const Graph & g, const RestrictedSet & cert)
{
    require_subset(g, cert.members, "verify_restricted");
    if (cert.epsilon <= 0 || cert.epsilon > Rational(1, 2))
        return Verdict::fail("epsilon " + to_string(cert.epsilon) + " outside (0, 1/2]");
    const auto size = static_cast<std::int64_t>(cert.members.size());
    if (size <= 2)
        return Verdict::pass();

    std::vector<std::uint8_t> inside(g.n(), 0);
    for (Vertex v : cert.members)
        inside[v] = 1;
    for (Vertex v : cert.members) {
        std::int64_t deg = 0;
        for (Vertex u : g.neighbors(v))
            deg += inside[u];
        const std::int64_t measured = cert.mode == Mode::sparse ? deg : size - 1 - deg;
        if (!at_most(measured, cert.epsilon, size))
            return Verdict::fail("vertex " + vstr(v) + " has " + std::to_string(measured)
                + (cert.mode == Mode::sparse ? " neighbours" : " non-neighbours") + " inside, bound is "
                + to_string(cert.epsilon) + "*" + std::to_string(size));
    }
    return Verdict::pass();
}

Verdict verify_blockade(const Graph & g, const Blockade & cert, std::size_t min_length, std::size_t min_width)
{
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::size_t> owner(g.n(), none);
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        if (!in_range(g, cert.blocks[i]))
            return Verdict::fail("block " + std::to_string(i) + " contains a vertex outside the graph");
        for (Vertex v : cert.blocks[i]) {
            if (owner[v] != none)
                return Verdict::fail("blocks " + std::to_string(owner[v]) + " and " + std::to_string(i)
                    + " overlap at vertex " + vstr(v));
            owner[v] = i;
        }
    }
    if (cert.length() < min_length)
        return Verdict::fail("length " + std::to_string(cert.length()) + " < " + std::to_string(min_length));
    if (cert.width() < min_width)
        return Verdict::fail("width " + std::to_string(cert.width()) + " < " + std::to_string(min_width));

    const bool proportional = cert.kind == BlockadeKind::x_sparse || cert.kind == BlockadeKind::one_minus_x_dense;
    if (proportional && (cert.x <= 0 || cert.x >= Rational(1, 2)))
        return Verdict::fail("x " + to_string(cert.x) + " outside (0, 1/2)");
    const Rational one_minus_x = Rational(1) - cert.x;

    std::vector<std::int64_t> counts(cert.blocks.size(), 0);
    for (std::size_t j = 0; j < cert.blocks.size(); ++j) {
        for (Vertex v : cert.blocks[j]) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex u : g.neighbors(v))
                if (owner[u] != none)
                    ++counts[owner[u]];
            const std::size_t upto = proportional ? j : cert.blocks.size();
            for (std::size_t i = 0; i < upto; ++i) {
                if (i == j)
                    continue;
                const auto size_i = static_cast<std::int64_t>(cert.blocks[i].size());
                bool good = true;
                switch (cert.kind) {
                case BlockadeKind::x_sparse: good = at_most(counts[i], cert.x, size_i); break;
                case BlockadeKind::one_minus_x_dense: good = at_least(counts[i], one_minus_x, size_i); break;
                case BlockadeKind::anticomplete: good = counts[i] == 0; break;
                case BlockadeKind::complete: good = counts[i] == size_i; break;
                }
                if (!good)
                    return Verdict::fail("vertex " + vstr(v) + " of block " + std::to_string(j) + " has "
                        + std::to_string(counts[i]) + " neighbours in block " + std::to_string(i) + " (size "
                        + std::to_string(size_i) + "), violating " + to_string(cert.kind));
            }
        }
    }
    return Verdict::pass();
}

Verdict verify_path_witness(const Graph & g, const PathWitness & cert, std::size_t k)
{
    const auto & p = cert.vertices;
    if (p.size() != k)
        return Verdict::fail("witness has " + std::to_string(p.size()) + " vertices, expected " + std::to_string(k));
    for (Vertex v : p)
        if (v >= g.n())
            return Verdict::fail("vertex " + vstr(v) + " is not in the graph");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j])
                return Verdict::fail("vertex " + vstr(p[i]) + " repeats");
            const bool edge = g.adjacent(p[i], p[j]);
            if (j == i + 1 && !edge)
                return Verdict::fail("consecutive " + vstr(p[i]) + "," + vstr(p[j]) + " not adjacent");
            if (j > i + 1 && edge)
                return Verdict::fail("chord " + vstr(p[i]) + "-" + vstr(p[j]));
        }
    return Verdict::pass();
}

Verdict verify_homogeneous(const Graph & g, const HomogeneousSet & cert)
{
    require_subset(g, cert.members, "verify_homogeneous");
    const bool want_edge = cert.kind == HomogeneousKind::clique;
    for (std::size_t i = 0; i < cert.members.size(); ++i)
        for (std::size_t j = i + 1; j < cert.members.size(); ++j)
            if (g.adjacent(cert.members[i], cert.members[j]) != want_edge)
                return Verdict::fail("pair " + vstr(cert.members[i]) + "," + vstr(cert.members[j])
                    + (want_edge ? " is not adjacent" : " is adjacent"));
    return Verdict::pass();
}

Rational brush_a_threshold(const Rational & x, const Rational & y, std::size_t t)
{
    if (t == 1)
        return x / 2;
    return pow(x, static_cast<unsigned>(2 * t - 1)) * y / Rational(BigInt(1) << (t + 2));
}

Rational brush_b_threshold(const Rational & x, const Rational & y, std::size_t t)
{
    return pow(x, static_cast<unsigned>(2 * t)) * y / Rational(BigInt(1) << (t + 2));
}

namespace {
    // For every a in A: its non-neighbours inside B as a bitmask over B's
    // positions (|B| <= 64), grouped by identical masks.
    std::map<std::uint64_t, std::int64_t> antineighbour_masks(const Graph & g, const VertexSet & a, const VertexSet & b)
    {
        std::map<std::uint64_t, std::int64_t> groups;
        for (Vertex u : a) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                if (!g.adjacent(u, b[i]))
                    mask |= std::uint64_t{1} << i;
            ++groups[mask];
        }
        return groups;
    }

    bool bullet4_holds_for(const Graph & g, const Brush & cert, const VertexSet & y_set, const Rational & needed)
    {
        const auto ysize = static_cast<std::int64_t>(y_set.size());
        std::int64_t good = 0;
        for (Vertex u : cert.a) {
            std::int64_t anti = 0;
            for (Vertex w : y_set)
                anti += !g.adjacent(u, w);
            if (at_least(anti, cert.x, ysize))
                ++good;
        }
        return Rational(good) >= needed;
    }
}

BrushVerdict verify_brush(const Graph & g, const Brush & cert, std::int64_t min_y_size, const BrushCheckOptions & options)
{
    BrushVerdict out;
    const std::size_t t = cert.t();
    const auto n = static_cast<std::int64_t>(g.n());
    auto fail = [&](std::string why) {
        out.exact = Verdict::fail(std::move(why));
        out.bullet4 = CheckGrade::refuted;
        return out;
    };

    if (t == 0)
        return fail("empty path");
    if (auto path_ok = verify_path_witness(g, cert.path, t); !path_ok)
        return fail("path: " + path_ok.reason);
    if (!in_range(g, cert.a) || !in_range(g, cert.b))
        return fail("A or B contains a vertex outside the graph");
    if (!disjoint(cert.a, cert.b))
        return fail("A and B overlap");
    const VertexSet path_set(cert.path.vertices);
    if (!disjoint(path_set, cert.a) || !disjoint(path_set, cert.b))
        return fail("A or B meets the path");

    const auto & p = cert.path.vertices;
    for (Vertex u : cert.a) {
        if (!g.adjacent(u, p.back()))
            return fail("bullet 1: " + vstr(u) + " in A is not adjacent to v_t");
        for (std::size_t i = 0; i + 1 < t; ++i)
            if (g.adjacent(u, p[i]))
                return fail("bullet 1: " + vstr(u) + " in A is adjacent to v_" + std::to_string(i + 1));
    }
    for (Vertex u : cert.b)
        for (std::size_t i = 0; i < t; ++i)
            if (g.adjacent(u, p[i]))
                return fail("bullet 2: " + vstr(u) + " in B is adjacent to v_" + std::to_string(i + 1));

    const auto asize = static_cast<std::int64_t>(cert.a.size());
    const auto bsize = static_cast<std::int64_t>(cert.b.size());
    if (!at_least(asize, brush_a_threshold(cert.x, cert.y, t), n))
        return fail("bullet 3: |A| = " + std::to_string(asize) + " < a_t|G|");
    if (!at_least(bsize, brush_b_threshold(cert.x, cert.y, t), n))
        return fail("bullet 3: |B| = " + std::to_string(bsize) + " < b_t|G|");

    const Rational three_y3 = 3 * pow(cert.y, 3);
    for (Vertex u : cert.b) {
        std::int64_t anti = 0;
        for (Vertex w : cert.a)
            anti += !g.adjacent(u, w);
        if (!at_most(anti, three_y3, asize))
            return fail("bullet 5: " + vstr(u) + " in B has " + std::to_string(anti) + " non-neighbours in A");
    }
    out.exact = Verdict::pass();

    // Bullet 4: for every Y ⊆ B with |Y| >= min_y_size, at least y|A|/4
    // vertices of A have at least x|Y| non-neighbours in Y.
    const Rational needed = cert.y * asize / 4;
    const std::int64_t lo = std::max<std::int64_t>(min_y_size, 1);
    if (lo > bsize) {
        out.bullet4 = CheckGrade::exhaustive; // vacuous
        return out;
    }
    if (cert.b.size() <= options.exhaustive_limit) {
        auto groups = antineighbour_masks(g, cert.a, cert.b);
        const std::uint64_t full = (std::uint64_t{1} << cert.b.size()) - 1;
        for (std::uint64_t y_mask = 1; y_mask <= full; ++y_mask) {
            const auto ysize = std::popcount(y_mask);
            if (ysize < lo)
                continue;
            std::int64_t good = 0;
            for (auto & [mask, count] : groups)
                if (at_least(std::popcount(mask & y_mask), cert.x, ysize))
                    good += count;
            if (Rational(good) < needed) {
                std::vector<Vertex> ys;
                for (std::size_t i = 0; i < cert.b.size(); ++i)
                    if ((y_mask >> i) & 1u)
                        ys.push_back(cert.b[i]);
                out.bullet4 = CheckGrade::refuted;
                out.bullet4_counterexample = VertexSet::from_sorted(std::move(ys));
                return out;
            }
        }
        out.bullet4 = CheckGrade::exhaustive;
        return out;
    }

    Rng rng(options.seed);
    std::vector<VertexSet> candidates;
    candidates.push_back(cert.b);
    {
        // The lo vertices of B with fewest non-neighbours in A.
        std::vector<std::pair<std::int64_t, Vertex>> ranked;
        for (Vertex u : cert.b) {
            std::int64_t anti = 0;
            for (Vertex w : cert.a)
                anti += !g.adjacent(u, w);
            ranked.emplace_back(anti, u);
        }
        std::sort(ranked.begin(), ranked.end());
        std::vector<Vertex> ys;
        for (std::int64_t i = 0; i < lo; ++i)
            ys.push_back(ranked[static_cast<std::size_t>(i)].second);
        candidates.emplace_back(std::move(ys));
    }
    std::vector<Vertex> pool = cert.b.members();
    for (std::size_t s = 0; s < options.samples; ++s) {
        const auto size = static_cast<std::size_t>(lo) + rng.below(static_cast<std::uint64_t>(bsize - lo + 1));
        rng.shuffle(pool);
        candidates.emplace_back(std::vector<Vertex>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)));
    }
    for (auto & y_set : candidates)
        if (!bullet4_holds_for(g, cert, y_set, needed)) {
            out.bullet4 = CheckGrade::refuted;
            out.bullet4_counterexample = y_set;
            return out;
        }
    out.bullet4 = CheckGrade::sampled;
    return out;
}

Rational edge_density(const Graph & g, const VertexSet & s)
{
    if (s.size() <= 1)
        return Rational(0);
    std::int64_t twice = 0;
    std::vector<std::uint8_t> inside(g.n(), 0);
    for (Vertex v : s)
        inside[v] = 1;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            twice += inside[u];
    const auto k = static_cast<std::int64_t>(s.size());
    return Rational(twice / 2) / Rational(k * (k - 1) / 2);
}

namespace {
    // edges(S) <= bound * C(|S|, 2)
    bool density_within(std::int64_t edges, std::int64_t size, const Rational & bound)
    {
        return at_most(edges, bound, size * (size - 1) / 2);
    }
}

DenseCoreVerdict verify_dense_core(const Graph & g, const DenseCoreClaim & cert, std::size_t samples, std::uint64_t seed)
{
    require_subset(g, cert.members, "verify_dense_core");
    DenseCoreVerdict out;
    const auto & s = cert.members;
    const auto size = static_cast<std::int64_t>(s.size());
    const Rational bound = Rational(1) - pow(cert.y, 3);
    // Sets of size <= 1 have density 0 and never refute.
    const std::int64_t lo = std::max<std::int64_t>(ceil_mul(cert.x, size), 2);
    if (lo > size) {
        out.status = DenseCoreVerdict::Status::verified_exact;
        return out;
    }

    // Local adjacency over positions in s.
    const std::size_t words = (s.size() + 63) / 64;
    std::vector<std::uint64_t> rows(s.size() * words, 0);
    {
        std::vector<std::int64_t> pos(g.n(), -1);
        for (std::size_t i = 0; i < s.size(); ++i)
            pos[s[i]] = static_cast<std::int64_t>(i);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (Vertex u : g.neighbors(s[i]))
                if (pos[u] >= 0) {
                    auto j = static_cast<std::size_t>(pos[u]);
                    rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
                }
    }
    auto edges_of = [&](const std::vector<std::uint64_t> & mask) {
        std::int64_t twice = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if ((mask[i / 64] >> (i % 64)) & 1u)
                for (std::size_t w = 0; w < words; ++w)
                    twice += std::popcount(rows[i * words + w] & mask[w]);
        return twice / 2;
    };
    auto to_set = [&](const std::vector<std::uint64_t> & mask) {
        std::vector<Vertex> members;
        for (std::size_t i = 0; i < s.size(); ++i)
            if ((mask[i / 64] >> (i % 64)) & 1u)
                members.push_back(s[i]);
        return VertexSet::from_sorted(std::move(members));
    };

    if (size <= 16) {
        for (std::int64_t k = lo; k <= size; ++k) {
            // Gosper's hack over k-subsets, smallest sizes first.
            std::uint64_t mask = (std::uint64_t{1} << k) - 1;
            const std::uint64_t limit = std::uint64_t{1} << size;
            while (mask < limit) {
                std::vector<std::uint64_t> m{mask};
                if (!density_within(edges_of(m), k, bound)) {
                    out.status = DenseCoreVerdict::Status::refuted;
                    out.witness = to_set(m);
                    return out;
                }
                const std::uint64_t c = mask & (~mask + 1);
                const std::uint64_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        out.status = DenseCoreVerdict::Status::verified_exact;
        return out;
    }

    Rng rng(seed);
    std::vector<std::size_t> order(s.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    for (std::size_t round = 0; round < samples; ++round) {
        const auto k = static_cast<std::size_t>(lo) + rng.below(static_cast<std::uint64_t>(size - lo + 1));
        rng.shuffle(order);
        std::vector<std::uint64_t> mask(words, 0);
        for (std::size_t i = 0; i < k; ++i)
            mask[order[i] / 64] |= std::uint64_t{1} << (order[i] % 64);
        if (!density_within(edges_of(mask), static_cast<std::int64_t>(k), bound)) {
            out.status = DenseCoreVerdict::Status::refuted;
            out.witness = to_set(mask);
            return out;
        }
    }

    // Greedy adversary: peel minimum inner degree, checking every prefix.
    std::vector<std::uint64_t> mask(words, ~std::uint64_t{0});
    if (s.size() % 64)
        mask.back() = (std::uint64_t{1} << (s.size() % 64)) - 1;
    std::vector<std::int64_t> degree(s.size(), 0);
    std::int64_t edges = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t w = 0; w < words; ++w)
            degree[i] += std::popcount(rows[i * words + w]);
        edges += degree[i];
    }
    edges /= 2;
    std::vector<std::uint8_t> alive(s.size(), 1);
    for (std::int64_t k = size; k >= lo; --k) {
        if (!density_within(edges, k, bound)) {
            out.status = DenseCoreVerdict::Status::refuted;
            out.witness = to_set(mask);
            return out;
        }
        std::size_t victim = SIZE_MAX;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (alive[i] && (victim == SIZE_MAX || degree[i] < degree[victim]))
                victim = i;
        alive[victim] = 0;
        mask[victim / 64] &= ~(std::uint64_t{1} << (victim % 64));
        edges -= degree[victim];
        for (std::size_t j = 0; j < s.size(); ++j)
            if (alive[j] && ((rows[victim * words + j / 64] >> (j % 64)) & 1u))
                --degree[j];
    }
    out.status = DenseCoreVerdict::Status::verified_sampled;
    return out;
}

} // namespace pathfree
