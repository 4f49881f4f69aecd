#include "pathfree/sparse_engine.hpp"

#include "pathfree/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pathfree {

VertexSet PeelTrace::peeled_a() const
{
    std::vector<Vertex> all;
    for (auto & layer : layers)
        all.insert(all.end(), layer.a.begin(), layer.a.end());
    return VertexSet(std::move(all));
}

namespace {
    class Peeler {
    public:
        Peeler(const Graph & g, PeelTrace & trace, std::int64_t cap)
            : g_(g), trace_(trace), cap_(cap), alive_(g.n(), 0), queued_(g.n(), 0), in_a_(g.n(), 0), in_n_(g.n(), 0)
        {
            for (Vertex v : trace.residual)
                alive_[v] = 1;
        }

        void run()
        {
            std::vector<Vertex> seeds = trace_.residual.members();
            std::stable_sort(seeds.begin(), seeds.end(), [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
            for (Vertex v : seeds)
                push(v);
            while (!queue_.empty()) {
                const Vertex v = queue_.front();
                queue_.pop_front();
                queued_[v] = 0;
                if (alive_[v] && try_seed(v))
                    remove_layer();
            }
            std::vector<Vertex> rest;
            for (Vertex v : trace_.residual)
                if (alive_[v])
                    rest.push_back(v);
            trace_.residual = VertexSet::from_sorted(std::move(rest));
        }

    private:
        void push(Vertex v)
        {
            if (!queued_[v]) {
                queued_[v] = 1;
                queue_.push_back(v);
            }
        }

        void clear_marks()
        {
            for (Vertex u : a_)
                in_a_[u] = 0;
            for (Vertex u : n_)
                in_n_[u] = 0;
        }

        void absorb(Vertex w)
        {
            in_a_[w] = 1;
            a_.push_back(w);
            for (Vertex u : g_.neighbors(w))
                if (alive_[u] && !in_a_[u] && !in_n_[u]) {
                    in_n_[u] = 1;
                    n_.push_back(u);
                }
        }

        std::int64_t n_size() const
        {
            std::int64_t size = 0;
            for (Vertex u : n_)
                size += in_n_[u] && !in_a_[u];
            return size;
        }

        bool try_seed(Vertex v)
        {
            clear_marks();
            a_.clear();
            n_.clear();
            absorb(v);
            std::size_t frontier = 0;
            std::int64_t boundary = n_size();
            while (true) {
                if (at_most(boundary, trace_.mu, static_cast<std::int64_t>(a_.size())))
                    return true;
                if (static_cast<std::int64_t>(a_.size()) >= cap_)
                    return false;
                while (frontier < n_.size() && in_a_[n_[frontier]])
                    ++frontier;
                if (frontier == n_.size())
                    return false; // component exhausted
                const Vertex w = n_[frontier++];
                in_n_[w] = 0;
                absorb(w);
                boundary = n_size();
            }
        }

        void remove_layer()
        {
            std::vector<Vertex> a(a_), b;
            for (Vertex u : n_)
                if (in_n_[u] && !in_a_[u])
                    b.push_back(u);
            clear_marks();
            for (Vertex u : a)
                alive_[u] = 0;
            for (Vertex u : b)
                alive_[u] = 0;
            for (Vertex u : b)
                for (Vertex w : g_.neighbors(u))
                    if (alive_[w])
                        push(w);
            trace_.layers.push_back({VertexSet(std::move(a)), VertexSet(std::move(b))});
            a_.clear();
            n_.clear();
        }

        const Graph & g_;
        PeelTrace & trace_;
        std::int64_t cap_;
        std::vector<std::uint8_t> alive_, queued_, in_a_, in_n_;
        std::deque<Vertex> queue_;
        std::vector<Vertex> a_, n_;
    };
}

PeelTrace peel_poorly_expanding(const Graph & g, const Rational & mu, std::int64_t cap)
{
    if (mu <= 0)
        throw DomainError("peel_poorly_expanding: mu must be positive");
    if (cap < 1)
        throw DomainError("peel_poorly_expanding: cap must be at least 1");
    PeelTrace trace;
    trace.mu = mu;
    trace.residual = VertexSet::range(g.n());
    continue_peel(g, trace, cap);
    return trace;
}

void continue_peel(const Graph & g, PeelTrace & trace, std::int64_t cap)
{
    Peeler(g, trace, cap).run();
}

std::vector<VertexSet> group_components(const Graph & g, const VertexSet & a, std::int64_t lo, std::int64_t hi)
{
    if (lo < 1 || hi < 2 * lo)
        throw ContractError("group_components: need lo >= 1 and hi >= 2 lo");
    std::vector<std::uint8_t> inside(g.n(), 0), seen(g.n(), 0);
    for (Vertex v : a)
        inside[v] = 1;

    std::vector<VertexSet> groups;
    std::vector<Vertex> current;
    for (Vertex root : a) {
        if (seen[root])
            continue;
        std::vector<Vertex> component{root};
        seen[root] = 1;
        for (std::size_t i = 0; i < component.size(); ++i)
            for (Vertex u : g.neighbors(component[i]))
                if (inside[u] && !seen[u]) {
                    seen[u] = 1;
                    component.push_back(u);
                }
        if (static_cast<std::int64_t>(component.size()) > lo)
            throw ContractError("group_components: component of vertex " + std::to_string(root) + " has "
                + std::to_string(component.size()) + " vertices, more than " + std::to_string(lo));
        current.insert(current.end(), component.begin(), component.end());
        if (static_cast<std::int64_t>(current.size()) >= lo) {
            groups.emplace_back(std::move(current));
            current.clear();
        }
    }
    return groups;
}

std::variant<PathWitness, ExpansionShortfall> try_grow_expander_path(
    const Graph & g, const VertexSet & residual, std::size_t k, std::int64_t cap)
{
    if (k < 1 || cap < 1 || static_cast<std::int64_t>(residual.size()) < cap)
        throw PreconditionError("try_grow_expander_path: need k >= 1 and 1 <= cap <= |residual|");
    const std::size_t n = g.n();
    std::vector<std::uint8_t> alive(n, 0), used(n, 0);
    for (Vertex v : residual)
        alive[v] = 1;

    std::vector<std::vector<Vertex>> s_sets, r_sets;
    s_sets.emplace_back(residual.begin(), residual.begin() + cap);
    for (Vertex v : s_sets[0])
        used[v] = 1;

    std::vector<std::int64_t> count(n, 0);
    for (std::size_t i = 1; i < k; ++i) {
        const auto & prev = s_sets.back();
        std::vector<Vertex> touched;
        std::int64_t total = 0;
        for (Vertex r : prev)
            for (Vertex u : g.neighbors(r))
                if (alive[u] && !used[u]) {
                    if (count[u]++ == 0) {
                        touched.push_back(u);
                        ++total;
                    }
                }
        if (total < cap) {
            for (Vertex u : touched)
                count[u] = 0;
            return ExpansionShortfall{i, VertexSet(std::vector<Vertex>(prev.begin(), prev.begin() + cap)), total};
        }
        // Greedy deletion; one ascending pass is already minimal because
        // deleting vertices only lowers the counts.
        std::vector<Vertex> kept;
        for (Vertex r : prev) {
            std::int64_t loss = 0;
            for (Vertex u : g.neighbors(r))
                if (alive[u] && !used[u] && count[u] == 1)
                    ++loss;
            if (total - loss >= cap) {
                for (Vertex u : g.neighbors(r))
                    if (alive[u] && !used[u])
                        --count[u];
                total -= loss;
            } else {
                kept.push_back(r);
            }
        }
        std::vector<Vertex> next;
        for (Vertex u : touched) {
            if (count[u] > 0)
                next.push_back(u);
            count[u] = 0;
        }
        std::sort(next.begin(), next.end());
        for (Vertex u : next)
            used[u] = 1;
        r_sets.push_back(std::move(kept));
        s_sets.push_back(std::move(next));
    }

    std::vector<Vertex> path(k);
    path[k - 1] = s_sets[k - 1].front();
    for (std::size_t i = k - 1; i >= 1; --i) {
        const auto & r = r_sets[i - 1];
        auto it = std::find_if(r.begin(), r.end(), [&](Vertex v) { return g.adjacent(v, path[i]); });
        proof_check(it != r.end(), "grow_expander_path: S_i vertex without a neighbour in R_i");
        path[i - 1] = *it;
    }
    return PathWitness{std::move(path)};
}

PathWitness grow_expander_path(const Graph & g, std::size_t k, const Rational & y, std::int64_t cap)
{
    if (y <= 0)
        throw PreconditionError("grow_expander_path: y must be positive");
    auto result = try_grow_expander_path(g, VertexSet::range(g.n()), k, cap);
    if (auto * shortfall = std::get_if<ExpansionShortfall>(&result)) {
        std::string ids;
        for (Vertex v : shortfall->witness)
            ids += (ids.empty() ? "" : ",") + std::to_string(v);
        throw InternalContradiction("grow_expander_path: round " + std::to_string(shortfall->round)
            + " reached only " + std::to_string(shortfall->reached) + " new neighbours from {" + ids + "}");
    }
    return std::get<PathWitness>(result);
}

namespace {
    std::int64_t boundary_in(const Graph & g, const VertexSet & set, const std::vector<std::uint8_t> & alive, std::vector<Vertex> & out)
    {
        std::vector<std::uint8_t> mark(g.n(), 0);
        for (Vertex v : set)
            mark[v] = 1;
        for (Vertex v : set)
            for (Vertex u : g.neighbors(v))
                if (alive[u] && !mark[u]) {
                    mark[u] = 2;
                    out.push_back(u);
                }
        return static_cast<std::int64_t>(out.size());
    }
}

SparseResult sparse_case(const Graph & g, std::size_t k, const Rational & y, const SparseOptions & options)
{
    if (k < 2)
        throw PreconditionError("sparse_case: k must be at least 2");
    if (y <= 0)
        throw PreconditionError("sparse_case: y must be positive");
    if (options.enforce_y_bound && y > Rational(1, static_cast<std::int64_t>(60 * k)))
        throw PreconditionError("sparse_case: y = " + to_string(y) + " exceeds 1/(60k)");
    const auto n = static_cast<std::int64_t>(g.n());
    const Rational y2 = y * y;
    const auto length = static_cast<std::size_t>(ceil(Rational(1) / y));
    SparseResult result;
    result.trace.mu = Rational(1) / (12 * y);
    const std::int64_t w = floor_mul(y2, n);
    // Below 1/y^2 vertices the empty blockade is valid for any graph.
    if (w == 0) {
        Blockade empty;
        empty.kind = BlockadeKind::anticomplete;
        empty.blocks.assign(length, VertexSet{});
        empty.degenerate = true;
        result.trace.residual = VertexSet::range(g.n());
        result.outcome = std::move(empty);
        return result;
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (!at_most(static_cast<std::int64_t>(g.degree(v)), y2, n))
            throw PreconditionError("sparse_case: graph is not y^2-sparse (vertex " + std::to_string(v) + " has degree "
                + std::to_string(g.degree(v)) + ")");

    result.trace = peel_poorly_expanding(g, result.trace.mu, w);
    while (true) {
        auto & trace = result.trace;
        if (2 * static_cast<std::int64_t>(trace.residual.size()) <= n) {
            const VertexSet a = trace.peeled_a();
            proof_check(Rational(static_cast<std::int64_t>(a.size())) * (2 + 2 * trace.mu) >= n,
                "sparse_case: |A| < |G|/(2+2mu) on the peel trace");
            auto groups = group_components(g, a, w, 2 * w);
            if (groups.size() < length)
                throw InternalContradiction("sparse_case: only " + std::to_string(groups.size()) + " groups from "
                    + std::to_string(a.size()) + " peeled vertices, need " + std::to_string(length));
            Blockade blockade;
            blockade.kind = BlockadeKind::anticomplete;
            blockade.blocks = std::move(groups);
            result.outcome = std::move(blockade);
            return result;
        }
        auto grown = try_grow_expander_path(g, trace.residual, k, w);
        if (auto * path = std::get_if<PathWitness>(&grown)) {
            result.outcome = std::move(*path);
            return result;
        }
        // The set that failed to expand must itself be poorly expanding.
        const auto & shortfall = std::get<ExpansionShortfall>(grown);
        std::vector<std::uint8_t> alive(g.n(), 0);
        for (Vertex v : trace.residual)
            alive[v] = 1;
        std::vector<Vertex> boundary;
        const std::int64_t size = boundary_in(g, shortfall.witness, alive, boundary);
        if (!at_most(size, trace.mu, static_cast<std::int64_t>(shortfall.witness.size())))
            throw InternalContradiction("sparse_case: expansion shortfall in round " + std::to_string(shortfall.round)
                + " from a set with " + std::to_string(size) + " neighbours, which is not poorly expanding");
        VertexSet b(std::move(boundary));
        trace.residual = set_difference(trace.residual, set_union(shortfall.witness, b));
        trace.layers.push_back({shortfall.witness, std::move(b)});
        ++result.shortfall_peels;
        continue_peel(g, trace, w);
    }
}

} // namespace pathfree
