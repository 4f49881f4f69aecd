#include "pathfree/divider.hpp"

#include "pathfree/dense_engine.hpp"
#include "pathfree/errors.hpp"
#include "pathfree/hfunction.hpp"
#include "pathfree/induced_path.hpp"
#include "pathfree/sparse_engine.hpp"

#include <algorithm>
#include <cmath>

namespace pathfree {

double h_eval(unsigned s, const Rational & x)
{
    if (x <= 0 || x >= Rational(1, 2))
        throw DomainError("h_eval: x must lie in (0, 1/2)");
    if (s == 0)
        return 2.0;
    return std::exp2(log2_h(s, to_double(x)));
}

namespace {
    // log2 of the upper bound min(1/(60k), 1/100) on 1/h_s(c), negated.
    double log2_limit(std::size_t k)
    {
        return std::log2(std::max(100.0, 60.0 * static_cast<double>(k)));
    }

    bool c_conditions(unsigned s, double b, std::size_t k, unsigned l)
    {
        const double lh = std::pow(static_cast<double>(l), static_cast<double>(s) / (s + 1)); // log2 h_s(2^-l)
        return l >= 1 && b * l >= lh - 1e-9 && lh >= log2_limit(k) - 1e-9;
    }
}

LevelConstants constants_for(unsigned s, std::size_t k, const Rational & C)
{
    if (s < 1 || k < 1)
        throw DomainError("constants_for: need s >= 1 and k >= 1");
    if (C <= 0)
        throw DomainError("constants_for: C must be positive");
    LevelConstants out;
    out.s = s;
    out.k = k;
    out.C = C;
    const double three = std::pow(3.0, 1.0 + 1.0 / s);
    out.b = three * to_double(C);
    out.d = 3 * out.b * static_cast<double>(k) + out.b + 5;
    if (s == 1) {
        out.b_exact = 9 * C;
        out.d_exact = 3 * *out.b_exact * static_cast<std::int64_t>(k) + *out.b_exact + 5;
    }
    unsigned l = 1;
    while (!c_conditions(s, out.b, k, l))
        ++l;
    out.c_log2 = l;
    out.c = Rational(1) / Rational(BigInt(1) << l);
    return out;
}

bool level_invariant_holds(const LevelConstants & constants)
{
    return constants.c <= Rational(1, 2) && constants.c == Rational(1) / Rational(BigInt(1) << constants.c_log2)
        && c_conditions(constants.s, constants.b, constants.k, constants.c_log2);
}

namespace {
    // x^e for a non-negative exponent; exact when e is an integer.
    Rational power_of(const Rational & x, const Rational & e)
    {
        if (denominator(e) == 1)
            return pow(x, static_cast<unsigned>(numerator(e)));
        return rational_from_double(std::exp2(to_double(e) * std::log2(to_double(x))));
    }

    std::int64_t width_for(const Rational & x, const Rational & e, std::size_t n)
    {
        if (denominator(e) == 1)
            return floor_mul(power_of(x, e), static_cast<std::int64_t>(n));
        return static_cast<std::int64_t>(std::floor(std::exp2(to_double(e) * std::log2(to_double(x))) * static_cast<double>(n)));
    }

    Blockade lift_blockade(const InducedSubgraph & sub, Blockade blockade)
    {
        for (auto & block : blockade.blocks)
            block = sub.lift(block);
        return blockade;
    }

    // Restricted without the small-set convention (pairs must really be
    // adjacent in dense mode and non-adjacent in sparse mode).
    bool genuinely(const Graph & g, const VertexSet & s, const Rational & eps, Mode mode)
    {
        if (s.size() < 2)
            return true;
        if (s.size() == 2)
            return g.adjacent(s[0], s[1]) == (mode == Mode::dense);
        return verify_restricted(g, {s, eps, mode}).ok;
    }

    DivideResult base_route(const Graph & g, const Rational & x, const Rational & d, std::string route)
    {
        auto base = base_pair_divider(g, x, d);
        DivideResult out;
        out.route = std::move(route);
        out.claimed_length = 2;
        out.claimed_width = base.required_width;
        out.width_met = base.width_met;
        out.outcome = std::move(base.blockade);
        return out;
    }
}

DivideResult divide(const Graph & g, std::size_t k, unsigned s, const Rational & x, const DivideOptions & options)
{
    if (x <= 0 || x >= Rational(1, 2))
        throw DomainError("divide: x must lie in (0, 1/2)");
    if (k < 1)
        throw DomainError("divide: k must be at least 1");
    if (g.n() < 2)
        throw PreconditionError("divide: need at least two vertices");
    const bool relaxed = options.mode == DivideMode::relaxed;

    if (s == 0)
        return base_route(g, x, options.d_override.value_or(options.base_d), "base");

    const auto constants = constants_for(s, k, options.C);
    if (!relaxed && x >= constants.c)
        throw PreconditionError("divide: paper_exact mode needs x < c = 2^-" + std::to_string(constants.c_log2));

    const Rational b = options.b_override ? *options.b_override
        : constants.b_exact ? *constants.b_exact
                            : rational_from_double(constants.b);
    const Rational d = options.d_override ? *options.d_override
        : constants.d_exact ? *constants.d_exact
                            : rational_from_double(constants.d);
    const std::size_t a = options.a_override.value_or(3 * k);
    const Rational y = rational_from_double(1.0 / h_eval(s, x));
    const Rational y3 = pow(y, 3);
    const Rational xb = power_of(x, b);
    const auto length = static_cast<std::size_t>(ceil(Rational(1) / y));
    const std::int64_t width = width_for(x, d, g.n());

    DivideResult out;
    out.y = y;
    out.claimed_length = length;
    out.claimed_width = width;

    // Inner transfers run one level down; paper_exact caps their x at that level's c.
    TransferOptions inner;
    if (!relaxed && s >= 2)
        inner.x_max = constants_for(s - 1, k, options.C).c;
    const BlockadeFinder finder = divider_finder(k, s - 1, options);
    const TransferParams params{y3, options.C, s - 1};

    std::optional<VertexSet> stash;
    DenseProvider provider = [&](const VertexSet & set) -> std::optional<VertexSet> {
        if (set.size() < 2)
            return std::nullopt;
        const auto sub = induced(g, set);
        auto found = transfer(sub.graph, finder, params, inner);
        VertexSet members = sub.lift(found.set.members);
        if (found.set.mode == Mode::dense && genuinely(g, members, y3, Mode::dense)
            && at_least(static_cast<std::int64_t>(members.size()), xb, static_cast<std::int64_t>(set.size())))
            return members;
        if (genuinely(g, members, y3, Mode::sparse) && (!stash || members.size() > stash->size()))
            stash = members;
        return std::nullopt;
    };

    auto fallback = [&](std::string note) {
        auto base = base_route(g, x, d, "fallback_base");
        base.fallback = true;
        base.y = y;
        base.note = std::move(note);
        return base;
    };

    DenseOptions dense_options;
    dense_options.a = a;
    dense_options.paper_ranges = !relaxed;
    DenseResult dense;
    try {
        dense = dense_case(g, k, xb, y, provider, dense_options);
    } catch (PathFound &) {
        throw;
    } catch (InternalContradiction & e) {
        if (!relaxed)
            throw;
        return fallback(e.what());
    }

    if (auto * path = std::get_if<PathWitness>(&dense.outcome)) {
        out.route = "dense";
        out.outcome = std::move(*path);
        return out;
    }
    if (auto * blockade = std::get_if<Blockade>(&dense.outcome)) {
        // (1 − x^b)-dense, hence (1 − x)-dense.
        blockade->x = x;
        out.route = "dense";
        out.width_met = static_cast<std::int64_t>(blockade->width()) >= width;
        out.outcome = std::move(*blockade);
        return out;
    }
    if (!stash)
        return fallback("dense engine reached outcome (a) without a sparse set to fall back on");

    const auto sub = induced(g, *stash);
    SparseOptions sparse_options;
    sparse_options.enforce_y_bound = !relaxed;
    try {
        auto sparse = sparse_case(sub.graph, k, y, sparse_options);
        if (auto * path = std::get_if<PathWitness>(&sparse.outcome)) {
            out.route = "sparse";
            out.outcome = PathWitness{sub.lift(path->vertices)};
            return out;
        }
        Blockade blockade = lift_blockade(sub, std::get<Blockade>(std::move(sparse.outcome)));
        blockade.x = x;
        out.route = "sparse";
        out.width_met = static_cast<std::int64_t>(blockade.width()) >= width;
        out.outcome = std::move(blockade);
        return out;
    } catch (InternalContradiction & e) {
        if (!relaxed)
            throw;
        return fallback(e.what());
    } catch (PreconditionError & e) {
        if (!relaxed)
            throw;
        return fallback(e.what());
    }
}

BlockadeFinder divider_finder(std::size_t k, unsigned s, const DivideOptions & options)
{
    return [k, s, options](const Graph & g, const Rational & x) -> Blockade {
        auto result = divide(g, k, s, x, options);
        if (auto * path = std::get_if<PathWitness>(&result.outcome))
            throw PathFound(path->vertices);
        return std::get<Blockade>(std::move(result.outcome));
    };
}

unsigned level_for_alpha(const Rational & alpha)
{
    if (alpha <= 0)
        throw DomainError("alpha must be positive");
    const BigInt up = ceil(Rational(1) / alpha);
    return up <= 1 ? 0u : static_cast<unsigned>(up - 1);
}

namespace {
    void require_pk_free(const Graph & g, std::size_t k, const PipelineOptions & options)
    {
        if (options.assume_pk_free)
            return;
        if (auto path = find_induced_path(g, k))
            throw PathFound(path->vertices);
    }
}

NearRodlResult near_rodl(const Graph & g, std::size_t k, const Rational & alpha, const Rational & epsilon, const PipelineOptions & options)
{
    require_pk_free(g, k, options);
    NearRodlResult out;
    out.s = level_for_alpha(alpha);
    TransferOptions transfer_options;
    if (options.divide.mode == DivideMode::paper_exact && out.s >= 1)
        transfer_options.x_max = constants_for(out.s, k, options.divide.C).c;
    const TransferParams params{epsilon, options.divide.C, out.s};
    try {
        out.transfer = transfer(g, divider_finder(k, out.s, options.divide), params, transfer_options);
    } catch (PathFound & found) {
        if (auto ok = verify_path_witness(g, PathWitness{found.path}, k); !ok)
            throw InternalContradiction("near_rodl: surfaced path does not verify: " + ok.reason);
        throw;
    }
    return out;
}

NearEhResult near_eh(const Graph & g, std::size_t k, const Rational & alpha, const PipelineOptions & options)
{
    require_pk_free(g, k, options);
    NearEhResult out;
    const std::size_t n = g.n();
    if (n < 2) {
        out.set = {VertexSet::range(n), HomogeneousKind::clique};
        out.route = "trivial";
        return out;
    }
    PipelineOptions inner = options;
    inner.assume_pk_free = true;

    const double a = to_double(options.divide.C);
    const double alpha_d = to_double(alpha);
    auto finder = [&](const Rational & eps) -> std::optional<RestrictedSet> {
        return near_rodl(g, k, alpha, eps, inner).transfer.set;
    };
    try {
        auto theorem = restricted_to_homogeneous(g, finder, a, alpha_d);
        out.bound = theorem.bound;
        out.set = theorem.set;
        out.route = "theorem";
        out.theorem_size = theorem.set.members.size();
        out.best_epsilon = theorem.epsilon;
    } catch (ContractError & e) {
        out.bound = std::exp2(std::pow(std::log2(static_cast<double>(n)), 1.0 / (1 + alpha_d)) / (2 * a + 2));
        out.theorem_note = e.what();
        out.set = {VertexSet{0, 1}, g.adjacent(0, 1) ? HomogeneousKind::clique : HomogeneousKind::stable};
        out.route = "trivial";
    }

    const auto top = static_cast<unsigned>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    for (unsigned i = 2; i <= std::max(top, 2u); ++i) {
        const Rational eps(1, BigInt(1) << i);
        auto restricted = near_rodl(g, k, alpha, eps, inner).transfer.set;
        auto set = greedy_homogeneous(g, restricted);
        if (set.members.size() > out.set.members.size()) {
            out.set = std::move(set);
            out.route = "sweep";
            out.best_epsilon = eps;
        }
    }
    if (auto ok = verify_homogeneous(g, out.set); !ok)
        throw InternalContradiction("near_eh: result is not homogeneous: " + ok.reason);
    return out;
}

std::vector<CalibrationPoint> calibrate(const std::vector<Graph> & suite, const std::vector<Rational> & epsilons,
    const std::vector<Rational> & candidates, std::size_t k, const Rational & alpha, const PipelineOptions & options)
{
    std::vector<CalibrationPoint> points;
    for (const auto & C : candidates) {
        CalibrationPoint point;
        point.C = C;
        PipelineOptions run = options;
        run.divide.C = C;
        for (const auto & g : suite)
            for (const auto & eps : epsilons) {
                ++point.runs;
                if (near_rodl(g, k, alpha, eps, run).transfer.below_target)
                    ++point.below_target;
            }
        points.push_back(point);
    }
    return points;
}

} // namespace pathfree
