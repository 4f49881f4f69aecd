#include "pathfree/transference.hpp"

#include "pathfree/errors.hpp"
#include "pathfree/hfunction.hpp"
#include "pathfree/oracles.hpp"
#include "pathfree/random.hpp"

#include <algorithm>
#include <cmath>

namespace pathfree {

double TransferParams::log2_delta() const
{
    const double e = to_double(epsilon);
    const double l = std::log2(1.0 / e);
    return -to_double(C) * l * l / log2_h(h_level, e);
}

double TransferParams::delta() const
{
    return std::exp2(log2_delta());
}

std::size_t TransferParams::depth_cap() const
{
    const double e = to_double(epsilon);
    return static_cast<std::size_t>(std::ceil(std::log2(1.0 / e) / log2_h(h_level, e) - 1e-9));
}

namespace {
    std::int64_t isize(const VertexSet & s)
    {
        return static_cast<std::int64_t>(s.size());
    }

    // Inner degrees of s's members, indexed by position.
    std::vector<std::int64_t> inner_degrees(const Graph & g, const VertexSet & s, std::vector<std::int64_t> & pos)
    {
        std::vector<std::int64_t> deg(s.size(), 0);
        for (std::size_t i = 0; i < s.size(); ++i)
            pos[s[i]] = static_cast<std::int64_t>(i);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (Vertex u : g.neighbors(s[i]))
                deg[i] += pos[u] >= 0;
        return deg;
    }
}

VertexSet peel_to_restricted(const Graph & g, const VertexSet & s, const Rational & epsilon, Mode mode)
{
    std::vector<std::int64_t> pos(g.n(), -1);
    auto deg = inner_degrees(g, s, pos);
    std::vector<std::uint8_t> alive(s.size(), 1);
    std::int64_t size = isize(s);
    auto measure = [&](std::size_t i) { return mode == Mode::sparse ? deg[i] : size - 1 - deg[i]; };
    while (size > 2) {
        std::size_t worst = SIZE_MAX;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (alive[i] && (worst == SIZE_MAX || measure(i) > measure(worst)))
                worst = i;
        if (at_most(measure(worst), epsilon, size))
            break;
        alive[worst] = 0;
        --size;
        for (Vertex u : g.neighbors(s[worst]))
            if (pos[u] >= 0 && alive[static_cast<std::size_t>(pos[u])])
                --deg[static_cast<std::size_t>(pos[u])];
    }
    std::vector<Vertex> kept;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (alive[i])
            kept.push_back(s[i]);
    return VertexSet::from_sorted(std::move(kept));
}

HomogeneousSet greedy_homogeneous(const Graph & g, const RestrictedSet & s)
{
    if (auto ok = verify_restricted(g, s); !ok)
        throw DomainError("greedy_homogeneous: input is not restricted: " + ok.reason);
    const bool sparse = s.mode == Mode::sparse;
    std::vector<std::int64_t> pos(g.n(), -1);
    auto deg = inner_degrees(g, s.members, pos);
    std::vector<std::uint8_t> alive(s.members.size(), 1);
    std::int64_t remaining = isize(s.members);
    std::vector<Vertex> chosen;
    auto remove = [&](std::size_t i) {
        alive[i] = 0;
        --remaining;
        for (Vertex u : g.neighbors(s.members[i]))
            if (pos[u] >= 0)
                --deg[static_cast<std::size_t>(pos[u])];
    };
    while (remaining > 0) {
        // Minimum degree (sparse) or minimum antidegree (dense) among the rest.
        std::size_t best = SIZE_MAX;
        for (std::size_t i = 0; i < s.members.size(); ++i) {
            if (!alive[i])
                continue;
            if (best == SIZE_MAX || (sparse ? deg[i] < deg[best] : deg[i] > deg[best]))
                best = i;
        }
        const Vertex v = s.members[best];
        chosen.push_back(v);
        remove(best);
        for (std::size_t i = 0; i < s.members.size(); ++i)
            if (alive[i] && g.adjacent(v, s.members[i]) == sparse)
                remove(i);
    }
    std::sort(chosen.begin(), chosen.end());
    HomogeneousSet out{VertexSet::from_sorted(std::move(chosen)), sparse ? HomogeneousKind::stable : HomogeneousKind::clique};
    const auto size = isize(s.members);
    proof_check(Rational(isize(out.members)) * (s.epsilon * size + 1) >= size, "greedy_homogeneous: below |S|/(eps|S|+1)");
    return out;
}

HomogeneousResult restricted_to_homogeneous(const Graph & g, const RestrictedFinder & finder, double a, double alpha)
{
    const std::size_t n = g.n();
    if (n < 2)
        throw PreconditionError("restricted_to_homogeneous: need at least two vertices");
    if (!(a > 0) || !(alpha >= 0))
        throw DomainError("restricted_to_homogeneous: need a > 0 and alpha >= 0");
    const double c = 1.0 / (2 * a + 2);
    const double beta = 1.0 / (1 + alpha);
    const double log_n = std::log2(static_cast<double>(n));
    HomogeneousResult out;
    out.bound = std::exp2(c * std::pow(log_n, beta));
    out.bound_ceil = static_cast<std::int64_t>(std::ceil(out.bound - 1e-9));

    if (out.bound <= 2) {
        out.short_circuit = true;
        const bool edge = g.adjacent(0, 1);
        out.set = {VertexSet{0, 1}, edge ? HomogeneousKind::clique : HomogeneousKind::stable};
        return out;
    }

    out.epsilon = rational_from_double(std::exp2(-2 * c * std::pow(log_n, beta)));
    const double eps = to_double(out.epsilon);
    auto found = finder(out.epsilon);
    if (!found)
        throw ContractError("restricted_to_homogeneous: finder failed at epsilon = " + std::to_string(eps));
    if (found->epsilon != out.epsilon)
        throw ContractError("restricted_to_homogeneous: finder answered for a different epsilon");
    if (auto ok = verify_restricted(g, *found); !ok)
        throw ContractError("restricted_to_homogeneous: finder output is not restricted: " + ok.reason);

    const double l = std::log2(1.0 / eps);
    const double log2_delta = -a * std::pow(l, 1 + alpha);
    const double needed = std::exp2(log2_delta) * static_cast<double>(n);
    const auto got = static_cast<double>(found->members.size());
    if (got < needed * (1 - 1e-9))
        throw ContractError("restricted_to_homogeneous: finder returned " + std::to_string(found->members.size())
            + " vertices, below the required " + std::to_string(needed));

    // δ ≥ |G|^{-2ac}, |S| ≥ 1/ε, and the final bound.
    proof_check(log2_delta >= -2 * a * c * log_n - 1e-9, "restricted_to_homogeneous: delta < |G|^{-2ac}");
    proof_check(got * eps >= 1 - 1e-9, "restricted_to_homogeneous: |S| < 1/epsilon");
    out.set = greedy_homogeneous(g, *found);
    proof_check(static_cast<std::int64_t>(out.set.members.size()) >= out.bound_ceil,
        "restricted_to_homogeneous: homogeneous set below 2^{c(log n)^beta}");
    return out;
}

namespace {
    struct PairSearch {
        const Graph & g;
        Rational x;

        struct Candidate {
            VertexSet b1, b2;
            BlockadeKind kind = BlockadeKind::x_sparse;
            std::size_t width() const { return std::min(b1.size(), b2.size()); }
        };

        // The widest partner of b1: everything outside b1 that is x-sparse
        // (or (1−x)-dense) to it.
        Candidate complete(const VertexSet & b1) const
        {
            std::vector<std::int64_t> hits(g.n(), 0);
            std::vector<std::uint8_t> inside(g.n(), 0);
            for (Vertex v : b1) {
                inside[v] = 1;
                for (Vertex u : g.neighbors(v))
                    ++hits[u];
            }
            std::vector<Vertex> sparse, dense;
            const auto size = isize(b1);
            const Rational one_minus_x = Rational(1) - x;
            for (Vertex u = 0; u < g.n(); ++u) {
                if (inside[u])
                    continue;
                if (at_most(hits[u], x, size))
                    sparse.push_back(u);
                if (at_least(hits[u], one_minus_x, size))
                    dense.push_back(u);
            }
            Candidate c;
            c.b1 = b1;
            if (dense.size() > sparse.size()) {
                c.kind = BlockadeKind::one_minus_x_dense;
                c.b2 = VertexSet::from_sorted(std::move(dense));
            } else {
                c.b2 = VertexSet::from_sorted(std::move(sparse));
            }
            return c;
        }

        // Local search for a w-set B1 with at least w partners in the given
        // direction. Swaps that do not lower the partner count are accepted.
        std::optional<Candidate> search(std::size_t w, bool dense_side, std::vector<Vertex> start, Rng & rng) const
        {
            const std::size_t n = g.n();
            if (2 * w > n)
                return std::nullopt;
            std::vector<std::uint8_t> inside(n, 0);
            std::vector<std::int64_t> hits(n, 0);
            std::vector<Vertex> members = std::move(start);
            for (Vertex v : members)
                inside[v] = 1;
            for (Vertex v : members)
                for (Vertex u : g.neighbors(v))
                    ++hits[u];
            const auto size = static_cast<std::int64_t>(w);
            const std::int64_t lo = floor_mul(x, size);                   // sparse: hits ≤ lo
            const std::int64_t hi = ceil_mul(Rational(1) - x, size);      // dense: hits ≥ hi
            auto partners = [&] {
                std::size_t count = 0;
                for (Vertex u = 0; u < n; ++u)
                    if (!inside[u] && (dense_side ? hits[u] >= hi : hits[u] <= lo))
                        ++count;
                return count;
            };
            auto swap_in = [&](std::size_t slot, Vertex in) {
                const Vertex out = members[slot];
                inside[out] = 0;
                for (Vertex u : g.neighbors(out))
                    --hits[u];
                inside[in] = 1;
                for (Vertex u : g.neighbors(in))
                    ++hits[u];
                members[slot] = in;
            };
            std::size_t score = partners();
            const std::size_t budget = std::max<std::size_t>(2000, 40 * n);
            for (std::size_t step = 0; step < budget && score < w; ++step) {
                const auto slot = static_cast<std::size_t>(rng.below(w));
                Vertex in;
                do
                    in = static_cast<Vertex>(rng.below(n));
                while (inside[in]);
                const Vertex out = members[slot];
                swap_in(slot, in);
                const std::size_t next = partners();
                if (next >= score)
                    score = next;
                else
                    swap_in(slot, out);
            }
            if (score < w)
                return std::nullopt;
            std::sort(members.begin(), members.end());
            Candidate c = complete(VertexSet::from_sorted(members));
            if (c.kind != (dense_side ? BlockadeKind::one_minus_x_dense : BlockadeKind::x_sparse)) {
                // complete() prefers the larger side; rebuild the requested one.
                std::vector<Vertex> chosen;
                for (Vertex u = 0; u < n; ++u)
                    if (!inside[u] && (dense_side ? hits[u] >= hi : hits[u] <= lo))
                        chosen.push_back(u);
                c.b2 = VertexSet::from_sorted(std::move(chosen));
                c.kind = dense_side ? BlockadeKind::one_minus_x_dense : BlockadeKind::x_sparse;
            }
            return c;
        }
    };
}

BasePairResult base_pair_divider(const Graph & g, const Rational & x, const Rational & d)
{
    const std::size_t n = g.n();
    if (n < 2)
        throw PreconditionError("base_pair_divider: need at least two vertices");
    if (x <= 0 || x >= Rational(1, 2))
        throw DomainError("base_pair_divider: x outside (0, 1/2)");
    if (d <= 0)
        throw DomainError("base_pair_divider: d must be positive");

    BasePairResult out;
    if (denominator(d) == 1)
        out.required_width = floor_mul(pow(x, static_cast<unsigned>(numerator(d))), static_cast<std::int64_t>(n));
    else
        out.required_width = static_cast<std::int64_t>(
            std::floor(std::exp2(to_double(d) * std::log2(to_double(x))) * static_cast<double>(n)));

    PairSearch search{g, x};
    std::vector<PairSearch::Candidate> candidates;
    const auto all = VertexSet::range(n);
    auto first_half = [](const VertexSet & s) {
        return VertexSet::from_sorted(std::vector<Vertex>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>((s.size() + 1) / 2)));
    };
    candidates.push_back(search.complete(first_half(all)));

    // Descent towards extreme relative degree.
    {
        VertexSet t = all;
        const std::size_t floor_size = 2 * static_cast<std::size_t>(std::max<std::int64_t>(out.required_width, 1));
        while (t.size() > floor_size) {
            std::vector<std::int64_t> pos(n, -1);
            auto deg = inner_degrees(g, t, pos);
            const auto size = isize(t);
            std::size_t pick = 0;
            std::int64_t extreme = -1;
            for (std::size_t i = 0; i < t.size(); ++i) {
                const std::int64_t e = std::max(deg[i], size - 1 - deg[i]);
                if (e > extreme) {
                    extreme = e;
                    pick = i;
                }
            }
            const Vertex v = t[pick];
            std::vector<Vertex> next;
            if (at_least(deg[pick], Rational(1) - x / 2, size)) {
                for (Vertex u : t)
                    if (g.adjacent(u, v))
                        next.push_back(u);
            } else if (at_most(deg[pick], x / 2, size)) {
                for (Vertex u : t)
                    if (u != v && !g.adjacent(u, v))
                        next.push_back(u);
            } else {
                break;
            }
            if (next.size() < 2)
                break;
            t = VertexSet::from_sorted(std::move(next));
            candidates.push_back(search.complete(first_half(t)));
        }
        if (t.size() >= 2)
            candidates.push_back(search.complete(first_half(t)));
    }

    // Neighbourhoods of the most extreme vertices.
    {
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
        std::vector<Vertex> probes;
        for (std::size_t i = 0; i < std::min<std::size_t>(16, n); ++i) {
            probes.push_back(order[i]);
            probes.push_back(order[n - 1 - i]);
        }
        for (Vertex v : probes) {
            std::vector<Vertex> nbrs(g.neighbors(v).begin(), g.neighbors(v).end()), rest;
            for (Vertex u = 0; u < n; ++u)
                if (u != v && !g.adjacent(u, v))
                    rest.push_back(u);
            if (!nbrs.empty())
                candidates.push_back(search.complete(VertexSet::from_sorted(nbrs)));
            if (!rest.empty())
                candidates.push_back(search.complete(VertexSet::from_sorted(rest)));
        }
    }

    auto best_of = [&] {
        return std::max_element(candidates.begin(), candidates.end(),
            [](const auto & a, const auto & b) { return a.width() < b.width(); });
    };

    // Push the width up by local search.
    Rng rng(0x9a1f);
    std::size_t width = best_of()->width();
    while (2 * (width + 1) <= n) {
        const std::size_t w = width + 1;
        std::optional<PairSearch::Candidate> found;
        for (bool dense_side : {false, true}) {
            std::vector<Vertex> order(n);
            for (Vertex v = 0; v < n; ++v)
                order[v] = v;
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
                return dense_side ? g.degree(a) > g.degree(b) : g.degree(a) < g.degree(b);
            });
            order.resize(w);
            found = search.search(w, dense_side, order, rng);
            if (found)
                break;
        }
        if (!found)
            break;
        candidates.push_back(std::move(*found));
        width = w;
    }

    auto & best = *best_of();
    out.blockade.kind = best.kind;
    out.blockade.x = x;
    out.blockade.blocks = {best.b1, best.b2};
    if (auto ok = verify_blockade(g, out.blockade, 2, 0); !ok)
        throw InternalContradiction("base_pair_divider: produced blockade fails verification: " + ok.reason);
    out.width_met = static_cast<std::int64_t>(out.blockade.width()) >= out.required_width;
    return out;
}

namespace {
    struct Refiner {
        const Graph & g;
        const BlockadeFinder & finder;
        Rational epsilon;
        Rational x;
        std::size_t depth_cap;
        std::size_t deepest = 0;

        static bool better(const RestrictedSet & a, const RestrictedSet & b)
        {
            return a.members.size() > b.members.size();
        }

        RestrictedSet run(const VertexSet & t, std::size_t depth)
        {
            deepest = std::max(deepest, depth);
            RestrictedSet best{peel_to_restricted(g, t, epsilon, Mode::sparse), epsilon, Mode::sparse};
            RestrictedSet dense{peel_to_restricted(g, t, epsilon, Mode::dense), epsilon, Mode::dense};
            if (better(dense, best))
                best = std::move(dense);
            if (best.members.size() == t.size() || t.size() < 4 || depth >= depth_cap)
                return best;

            const auto sub = induced(g, t);
            Blockade blockade;
            try {
                blockade = finder(sub.graph, x);
            } catch (PathFound & found) {
                throw PathFound(sub.lift(found.path));
            }
            if (auto ok = verify_blockade(sub.graph, blockade, 0, 0); !ok)
                throw ContractError("transfer: divider returned an invalid blockade: " + ok.reason);
            const Mode mode = blockade.kind == BlockadeKind::x_sparse || blockade.kind == BlockadeKind::anticomplete
                ? Mode::sparse
                : Mode::dense;

            std::vector<Vertex> same_mode;
            for (const auto & block : blockade.blocks) {
                if (block.empty() || block.size() == t.size())
                    continue;
                auto inner = run(sub.lift(block), depth + 1);
                if (inner.mode == mode || inner.members.size() <= 2)
                    same_mode.insert(same_mode.end(), inner.members.begin(), inner.members.end());
                if (better(inner, best))
                    best = std::move(inner);
            }
            RestrictedSet merged{peel_to_restricted(g, VertexSet(std::move(same_mode)), epsilon, mode), epsilon, mode};
            if (better(merged, best))
                best = std::move(merged);
            return best;
        }
    };
}

TransferResult transfer(const Graph & g, const BlockadeFinder & finder, const TransferParams & params, const TransferOptions & options)
{
    if (params.epsilon <= 0 || params.epsilon >= Rational(1, 2))
        throw DomainError("transfer: epsilon outside (0, 1/2)");
    if (params.C <= 0)
        throw DomainError("transfer: C must be positive");
    TransferResult out;
    const std::size_t n = g.n();
    out.target = params.delta() * static_cast<double>(n);
    const auto all = VertexSet::range(n);

    RestrictedSet whole{all, params.epsilon, Mode::sparse};
    if (verify_restricted(g, whole) || verify_restricted(g, RestrictedSet{all, params.epsilon, Mode::dense})) {
        if (!verify_restricted(g, whole))
            whole.mode = Mode::dense;
        out.set = std::move(whole);
        out.route = "whole";
        return out;
    }

    Rational x = params.epsilon / 4;
    if (options.x_max && *options.x_max < x)
        x = *options.x_max;
    Refiner refiner{g, finder, params.epsilon, x, params.depth_cap()};
    out.set = refiner.run(all, 0);
    out.depth = refiner.deepest;
    out.route = out.depth == 0 ? "peeled" : "refined";

    const auto achieved = static_cast<double>(out.set.members.size());
    if (achieved + 1e-9 < out.target && n <= options.exhaustive_limit) {
        OracleCaps caps;
        caps.restricted = options.exhaustive_limit;
        auto best = brute_best_restricted(g, params.epsilon, caps);
        if (best.members.size() > out.set.members.size()) {
            out.set = std::move(best);
            out.route = "exhaustive";
        }
    }
    out.below_target = static_cast<double>(out.set.members.size()) + 1e-9 < out.target;
    if (auto ok = verify_restricted(g, out.set); !ok)
        throw InternalContradiction("transfer: result fails verification: " + ok.reason);
    return out;
}

} // namespace pathfree
