#include "pathfree/dense_engine.hpp"

#include "pathfree/errors.hpp"

#include <algorithm>

namespace pathfree {

BrushSchedule BrushSchedule::make(std::size_t k, const Rational & x, const Rational & y, std::size_t a)
{
    BrushSchedule s;
    s.k = k;
    s.x = x;
    s.y = y;
    s.a = a ? a : 3 * k;
    s.a_t.push_back(x / 2);
    s.b_t.push_back(x * x * y / 8);
    for (std::size_t t = 2; t <= k; ++t) {
        const Rational prev = s.b_t.back();
        s.a_t.push_back(x / 2 * prev);
        s.b_t.push_back(x * x / 2 * prev);
    }
    return s;
}

namespace {
    std::int64_t isize(const VertexSet & s)
    {
        return static_cast<std::int64_t>(s.size());
    }

    // Non-neighbours of u inside the set marked by `mask` (|set| = size).
    std::int64_t antidegree_in(const Graph & g, Vertex u, const VertexMask & mask, std::int64_t size)
    {
        const auto hits = static_cast<std::int64_t>(g.count_neighbors_in(u, mask));
        return size - hits - (mask.test(u) ? 1 : 0);
    }

    bool is_subset(const VertexSet & a, const VertexSet & b)
    {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    std::int64_t block_floor(const Rational & x, std::size_t a, std::size_t n)
    {
        return floor_mul(pow(x, static_cast<unsigned>(a)), static_cast<std::int64_t>(n));
    }
}

std::variant<DenseCore, NoDenseSubset> build_max_dense_blockade(
    const Graph & g, const VertexSet & s, const Rational & x, const Rational & y, std::size_t, const DenseProvider & provider)
{
    auto chosen = provider(s);
    if (!chosen)
        return NoDenseSubset{s};
    const VertexSet & sp = *chosen;
    if (!is_subset(sp, s))
        throw ContractError("dense provider returned a set that is not a subset of its input");
    if (!at_least(isize(sp), x, isize(s)))
        throw ContractError("dense provider returned " + std::to_string(sp.size()) + " vertices, fewer than x|S| = "
            + to_string(x * isize(s)));
    const Rational y3 = pow(y, 3);
    const VertexMask mask(g.n(), sp);
    for (Vertex u : sp)
        if (!at_most(antidegree_in(g, u, mask, isize(sp)), y3, isize(sp)))
            throw ContractError("dense provider returned a set that is not (1-y^3)-dense (vertex " + std::to_string(u) + ")");

    DenseCore core;
    core.c = sp;
    core.host = s;
    core.s_prime = sp;
    core.blockade_prefix.kind = BlockadeKind::one_minus_x_dense;
    core.blockade_prefix.x = x;
    return core;
}

std::optional<Blockade> extend_core(const Graph & g, DenseCore & core, const RetrySignal & retry,
    const Rational & x, const Rational & y, std::size_t a)
{
    const auto & xs = retry.x_set;
    const auto & ys = retry.y_set;
    if (!is_subset(xs, core.c) || !is_subset(ys, core.c) || !disjoint(xs, ys))
        throw InternalContradiction("retry evidence is not a pair of disjoint subsets of the core");
    const auto n_blocks = static_cast<std::int64_t>(core.blockade_prefix.blocks.size()) + 1;
    const Rational xa = pow(x, static_cast<unsigned>(a));
    const auto g_size = static_cast<std::int64_t>(g.n());
    if (!at_least(isize(ys), xa, g_size))
        throw InternalContradiction("retry evidence: |Y| < x^a|G|");

    const VertexMask ymask(g.n(), ys);
    std::vector<Vertex> z;
    for (Vertex u : xs)
        if (at_most(antidegree_in(g, u, ymask, isize(ys)), x, isize(ys)))
            z.push_back(u);
    const auto zsize = static_cast<std::int64_t>(z.size());
    const Rational keep = Rational(1) - Rational(n_blocks) * y / 2;
    if (!at_least(zsize, keep, isize(core.s_prime)) || !at_least(zsize, xa, g_size))
        throw InternalContradiction("retry evidence does not extend the blockade at level " + std::to_string(retry.level)
            + ": " + std::to_string(zsize) + " of " + std::to_string(xs.size()) + " vertices are dense to Y (" + retry.reason + ")");

    core.blockade_prefix.blocks.push_back(ys);
    core.c = VertexSet::from_sorted(std::move(z));
    const auto needed = static_cast<std::size_t>(ceil(Rational(1) / y));
    if (core.blockade_prefix.blocks.size() + 1 >= needed) {
        Blockade done = core.blockade_prefix;
        done.blocks.push_back(core.c);
        return done;
    }
    return std::nullopt;
}

std::variant<Brush, RetrySignal> find_one_brush(const Graph & g, const BrushSchedule & schedule, const DenseCore & core)
{
    const VertexSet & c = core.c;
    if (c.empty())
        throw PreconditionError("find_one_brush: empty core");
    const auto n = static_cast<std::int64_t>(g.n());
    const VertexMask mask(g.n(), c);
    for (Vertex v : c) {
        if (!at_least(antidegree_in(g, v, mask, isize(c)), schedule.b_of(1), n))
            continue;
        std::vector<Vertex> a, b;
        for (Vertex u : c) {
            if (u == v)
                continue;
            (g.adjacent(u, v) ? a : b).push_back(u);
        }
        return Brush{PathWitness{{v}}, VertexSet::from_sorted(std::move(a)), VertexSet::from_sorted(std::move(b)), schedule.x, schedule.y};
    }
    const std::int64_t ysize = std::max<std::int64_t>(ceil_mul(pow(schedule.x, static_cast<unsigned>(schedule.a)), n), 1);
    if (ysize >= isize(c))
        throw InternalContradiction("find_one_brush: core of " + std::to_string(c.size()) + " vertices is too small to split");
    const auto split = c.begin() + ysize;
    RetrySignal retry;
    retry.level = 0;
    retry.y_set = VertexSet::from_sorted(std::vector<Vertex>(c.begin(), split));
    retry.x_set = VertexSet::from_sorted(std::vector<Vertex>(split, c.end()));
    retry.reason = "no vertex of the core has b_1|G| non-neighbours in it";
    return retry;
}

std::variant<Brush, RetrySignal> extend_brush(const Graph & g, const BrushSchedule & schedule, const Brush & brush, const DenseCore & core)
{
    const std::size_t t = brush.t();
    if (t < 1 || t >= schedule.k)
        throw PreconditionError("extend_brush: need 1 <= t <= k-1, got t = " + std::to_string(t));
    const VertexSet & c = core.c;
    const VertexMask mask(g.n(), c);
    const Rational upper = 24 * schedule.y * schedule.y;
    std::vector<Vertex> d;
    for (Vertex u : brush.a) {
        const std::int64_t anti = antidegree_in(g, u, mask, isize(c));
        if (at_least(anti, schedule.x, isize(c)) && at_most(anti, upper, isize(c)))
            d.push_back(u);
    }
    if (d.empty() || Rational(8 * static_cast<std::int64_t>(d.size())) < schedule.y * isize(brush.a)) {
        RetrySignal retry;
        retry.level = t - 1;
        retry.x_set = brush.a;
        retry.y_set = c;
        retry.reason = "only " + std::to_string(d.size()) + " vertices of A have between x|C| and 24y^2|C| non-neighbours in C";
        return retry;
    }
    const Vertex v = d.front();
    std::vector<Vertex> a, b;
    for (Vertex u : c)
        (g.adjacent(u, v) ? a : b).push_back(u);
    Brush next;
    next.path = brush.path;
    next.path.vertices.push_back(v);
    next.a = VertexSet::from_sorted(std::move(a));
    next.b = VertexSet::from_sorted(std::move(b));
    next.x = schedule.x;
    next.y = schedule.y;
    return next;
}

DenseResult dense_case(const Graph & g, std::size_t k, const Rational & x, const Rational & y,
    const DenseProvider & provider, const DenseOptions & options)
{
    if (k < 1)
        throw PreconditionError("dense_case: k must be at least 1");
    if (x <= 0 || y <= 0 || x >= 1 || y >= 1)
        throw PreconditionError("dense_case: x and y must lie in (0, 1)");
    if (options.paper_ranges && (x > y || y > Rational(1, 100)))
        throw PreconditionError("dense_case: need 0 < x <= y <= 1/100 (x = " + to_string(x) + ", y = " + to_string(y) + ")");

    const std::size_t a = options.a ? options.a : 3 * k;
    const auto schedule = BrushSchedule::make(k, x, y, a);
    const auto n = static_cast<std::int64_t>(g.n());
    const std::int64_t width = block_floor(x, a, g.n());
    const auto length = static_cast<std::size_t>(ceil(Rational(1) / y));
    const std::int64_t min_y = std::max<std::int64_t>(ceil_mul(pow(x, static_cast<unsigned>(a)), n), 1);

    DenseResult result;
    if (width == 0) {
        Blockade empty;
        empty.kind = BlockadeKind::one_minus_x_dense;
        empty.x = x;
        empty.blocks.assign(length, VertexSet{});
        empty.degenerate = true;
        result.outcome = std::move(empty);
        return result;
    }

    auto finish_blockade = [&](Blockade blockade) {
        if (auto ok = verify_blockade(g, blockade, length, static_cast<std::size_t>(width)); !ok)
            throw InternalContradiction("dense_case: outcome (b) blockade fails verification: " + ok.reason);
        result.outcome = std::move(blockade);
        return result;
    };
    const BrushCheckOptions quick{0, 0, 0};
    auto accept_brush = [&](Brush brush) {
        const auto verdict = verify_brush(g, brush, min_y, quick);
        if (!verdict.ok())
            throw InternalContradiction("dense_case: " + std::to_string(brush.t()) + "-brush fails verification: " + verdict.exact.reason);
        result.brushes.push_back(brush);
    };

    std::vector<DenseCore> levels;
    std::vector<Brush> chain;
    const Rational two_x_a1 = 2 * pow(x, static_cast<unsigned>(a - 1));
    for (std::size_t iteration = 0; iteration < options.iteration_budget; ++iteration) {
        const std::size_t t = chain.size();
        if (t == k) {
            PathWitness path = chain.back().path;
            if (auto ok = verify_path_witness(g, path, k); !ok)
                throw InternalContradiction("dense_case: brush path is not induced: " + ok.reason);
            result.outcome = std::move(path);
            return result;
        }
        if (levels.size() == t) {
            const VertexSet s = t == 0 ? VertexSet::range(g.n()) : chain.back().b;
            if (options.paper_ranges)
                proof_check(Rational(isize(s)) >= two_x_a1 * n, "dense_case: |S| < 2x^{a-1}|G| at a claim-(1) call");
            ++result.provider_calls;
            auto built = build_max_dense_blockade(g, s, x, y, a, provider);
            if (auto * none = std::get_if<NoDenseSubset>(&built)) {
                result.outcome = DenseCoreClaim{none->s, x, y};
                return result;
            }
            levels.push_back(std::move(std::get<DenseCore>(built)));
        }

        auto step = t == 0 ? find_one_brush(g, schedule, levels[0]) : extend_brush(g, schedule, chain.back(), levels[t]);
        if (auto * brush = std::get_if<Brush>(&step)) {
            if (options.paper_ranges && t > 0)
                proof_check(2 * isize(levels[t].c) <= 3 * isize(brush->a), "dense_case: 2y^3|C| > 3y^3|A'|");
            accept_brush(*brush);
            chain.push_back(std::move(*brush));
            continue;
        }
        const auto & retry = std::get<RetrySignal>(step);
        ++result.retries;
        auto done = extend_core(g, levels[retry.level], retry, x, y, a);
        if (done)
            return finish_blockade(std::move(*done));
        levels.resize(retry.level + 1);
        chain.resize(retry.level);
    }
    throw InternalContradiction("dense_case: iteration budget of " + std::to_string(options.iteration_budget) + " exhausted");
}

} // namespace pathfree
