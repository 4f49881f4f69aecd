#include "pathfree/oracles.hpp"

#include "pathfree/errors.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace pathfree {

namespace {
    std::size_t env_cap(const char * name, std::size_t fallback)
    {
        const char * raw = std::getenv(name);
        if (!raw || !*raw)
            return fallback;
        char * end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (*end != '\0')
            throw DomainError(std::string(name) + " is not a non-negative integer: '" + raw + "'");
        return static_cast<std::size_t>(value);
    }

    void check_cap(std::size_t n, std::size_t cap, const char * who)
    {
        if (n > cap)
            throw CapExceeded(std::string(who) + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    }

    // Rows of g as 64-bit masks; n ≤ 64.
    std::vector<std::uint64_t> mask_rows(const Graph & g, bool complemented)
    {
        const std::size_t n = g.n();
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        std::vector<std::uint64_t> rows(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex u : g.neighbors(v))
                rows[v] |= std::uint64_t{1} << u;
            if (complemented)
                rows[v] = ~rows[v] & all & ~(std::uint64_t{1} << v);
        }
        return rows;
    }

    VertexSet from_mask(std::uint64_t mask)
    {
        std::vector<Vertex> members;
        while (mask) {
            members.push_back(static_cast<Vertex>(std::countr_zero(mask)));
            mask &= mask - 1;
        }
        return VertexSet::from_sorted(std::move(members));
    }

    class CliqueSearch {
    public:
        explicit CliqueSearch(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

        std::uint64_t run()
        {
            const std::uint64_t all = rows_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows_.size()) - 1;
            expand(0, all);
            return best_;
        }

    private:
        // Greedy colouring bound over the candidate set.
        int colour_bound(std::uint64_t candidates) const
        {
            int colours = 0;
            while (candidates) {
                ++colours;
                std::uint64_t uncoloured = candidates;
                while (uncoloured) {
                    const int v = std::countr_zero(uncoloured);
                    candidates &= ~(std::uint64_t{1} << v);
                    uncoloured &= ~rows_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
                }
            }
            return colours;
        }

        void expand(std::uint64_t current, std::uint64_t candidates)
        {
            if (!candidates) {
                if (std::popcount(current) > std::popcount(best_))
                    best_ = current;
                return;
            }
            while (candidates) {
                if (std::popcount(current) + colour_bound(candidates) <= std::popcount(best_))
                    return;
                const int v = std::countr_zero(candidates);
                const std::uint64_t bit = std::uint64_t{1} << v;
                expand(current | bit, candidates & rows_[static_cast<std::size_t>(v)]);
                candidates &= ~bit;
            }
        }

        std::vector<std::uint64_t> rows_;
        std::uint64_t best_ = 0;
    };
}

OracleCaps OracleCaps::from_env()
{
    OracleCaps caps;
    caps.homogeneous = env_cap("PATHFREE_CAP_HOMOGENEOUS", caps.homogeneous);
    caps.restricted = env_cap("PATHFREE_CAP_RESTRICTED", caps.restricted);
    caps.path_vertices = env_cap("PATHFREE_CAP_PATH", caps.path_vertices);
    caps.path_k = env_cap("PATHFREE_CAP_PATH_K", caps.path_k);
    return caps;
}

HomogeneousOptimum brute_max_homogeneous(const Graph & g, const OracleCaps & caps)
{
    check_cap(g.n(), std::min<std::size_t>(caps.homogeneous, 64), "brute_max_homogeneous");
    HomogeneousOptimum out;
    if (g.n() == 0)
        return out;
    out.clique = from_mask(CliqueSearch(mask_rows(g, false)).run());
    out.stable = from_mask(CliqueSearch(mask_rows(g, true)).run());
    return out;
}

RestrictedSet brute_best_restricted(const Graph & g, const Rational & epsilon, const OracleCaps & caps)
{
    check_cap(g.n(), std::min<std::size_t>(caps.restricted, 30), "brute_best_restricted");
    if (epsilon <= 0 || epsilon > Rational(1, 2))
        throw DomainError("brute_best_restricted: epsilon outside (0, 1/2]");
    const std::size_t n = g.n();
    if (n <= 2)
        return {VertexSet::range(n), epsilon, Mode::sparse};

    const auto rows = mask_rows(g, false);
    for (std::size_t size = n; size >= 3; --size) {
        const auto k = static_cast<std::int64_t>(size);
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            bool sparse_ok = true;
            bool dense_ok = true;
            for (std::uint64_t rest = mask; rest && (sparse_ok || dense_ok); rest &= rest - 1) {
                const auto v = static_cast<std::size_t>(std::countr_zero(rest));
                const std::int64_t deg = std::popcount(rows[v] & mask);
                sparse_ok = sparse_ok && at_most(deg, epsilon, k);
                dense_ok = dense_ok && at_most(k - 1 - deg, epsilon, k);
            }
            if (sparse_ok)
                return {from_mask(mask), epsilon, Mode::sparse};
            if (dense_ok)
                return {from_mask(mask), epsilon, Mode::dense};
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return {VertexSet{0, 1}, epsilon, Mode::sparse};
}

std::optional<PathWitness> brute_induced_path(const Graph & g, std::size_t k, const OracleCaps & caps)
{
    check_cap(g.n(), std::min<std::size_t>(caps.path_vertices, 30), "brute_induced_path");
    if (k > caps.path_k)
        throw CapExceeded("brute_induced_path: k = " + std::to_string(k) + " exceeds cap " + std::to_string(caps.path_k));
    const std::size_t n = g.n();
    if (k == 0)
        return PathWitness{};
    if (k > n)
        return std::nullopt;
    if (k == 1)
        return PathWitness{{0}};

    const auto rows = mask_rows(g, false);
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        std::size_t twice_edges = 0;
        bool low_degree = true;
        Vertex end = 0;
        bool have_end = false;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(rest));
            const int deg = std::popcount(rows[v] & mask);
            twice_edges += static_cast<std::size_t>(deg);
            low_degree = low_degree && deg <= 2;
            if (deg == 1 && !have_end) {
                end = v;
                have_end = true;
            }
        }
        if (low_degree && twice_edges == 2 * (k - 1) && have_end) {
            // Walk from an end; connectivity holds iff the walk covers the subset.
            std::vector<Vertex> walk{end};
            std::uint64_t seen = std::uint64_t{1} << end;
            while (true) {
                const std::uint64_t next = rows[walk.back()] & mask & ~seen;
                if (!next)
                    break;
                const auto v = static_cast<Vertex>(std::countr_zero(next));
                walk.push_back(v);
                seen |= std::uint64_t{1} << v;
            }
            if (walk.size() == k)
                return PathWitness{std::move(walk)};
        }
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return std::nullopt;
}

} // namespace pathfree
