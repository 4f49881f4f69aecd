#include "pathfree/generators.hpp"

#include "pathfree/errors.hpp"
#include "pathfree/induced_path.hpp"
#include "pathfree/random.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pathfree {

std::string GeneratorSpec::to_string() const
{
    std::string out = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ",";
        if (!args[i].first.empty())
            out += args[i].first + "=";
        out += args[i].second;
    }
    return out + ")";
}

namespace {
    std::string_view trim(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    struct ArgReader {
        const GeneratorSpec & spec;
        std::vector<std::string> names;

        std::string_view raw(std::size_t index, const std::string & key) const
        {
            for (auto & [k, v] : spec.args)
                if (k == key)
                    return v;
            std::size_t positional = 0;
            for (auto & [k, v] : spec.args) {
                if (!k.empty())
                    continue;
                if (positional == index)
                    return v;
                ++positional;
            }
            throw ParseError(0, spec.name + ": missing argument '" + key + "'");
        }

        std::size_t integer(std::size_t index, const std::string & key) const
        {
            auto text = raw(index, key);
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw ParseError(0, spec.name + ": argument '" + key + "' must be a nonnegative integer");
            return value;
        }

        Rational rational(std::size_t index, const std::string & key) const { return parse_rational(raw(index, key)); }
    };

    Graph from_edges(std::size_t n, const std::vector<Edge> & edges, Graph::Duplicates policy = Graph::Duplicates::reject)
    {
        return Graph(n, edges, policy);
    }
}

GeneratorSpec parse_generator_spec(std::string_view text)
{
    text = trim(text);
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw ParseError(0, "generator spec must look like name(args): '" + std::string(text) + "'");
    GeneratorSpec spec;
    spec.name = std::string(trim(text.substr(0, open)));
    if (spec.name.empty())
        throw ParseError(0, "generator spec has no model name");
    auto body = trim(text.substr(open + 1, text.size() - open - 2));
    while (!body.empty()) {
        auto comma = body.find(',');
        auto item = trim(body.substr(0, comma));
        if (item.empty())
            throw ParseError(0, "empty argument in generator spec");
        if (auto eq = item.find('='); eq != std::string_view::npos)
            spec.args.emplace_back(std::string(trim(item.substr(0, eq))), std::string(trim(item.substr(eq + 1))));
        else
            spec.args.emplace_back(std::string(), std::string(item));
        if (comma == std::string_view::npos)
            break;
        body = body.substr(comma + 1);
        if (trim(body).empty())
            throw ParseError(0, "trailing comma in generator spec");
    }
    return spec;
}

Graph generate(std::string_view spec, std::uint64_t seed)
{
    return generate(parse_generator_spec(spec), seed);
}

Graph generate(const GeneratorSpec & spec, std::uint64_t seed)
{
    ArgReader a{spec, {}};
    const auto & m = spec.name;
    if (m == "erdos_renyi")
        return erdos_renyi(a.integer(0, "n"), a.rational(1, "p"), seed);
    if (m == "edgeless")
        return edgeless(a.integer(0, "n"));
    if (m == "complete")
        return complete(a.integer(0, "n"));
    if (m == "clique_union")
        return clique_union(a.integer(0, "count"), a.integer(1, "size"));
    if (m == "complete_multipartite") {
        std::vector<std::size_t> parts;
        for (std::size_t i = 0; i < spec.args.size(); ++i)
            parts.push_back(a.integer(i, "part" + std::to_string(i)));
        return complete_multipartite(parts);
    }
    if (m == "path")
        return path_graph(a.integer(0, "n"));
    if (m == "cycle")
        return cycle_graph(a.integer(0, "n"));
    if (m == "subdivided_grid")
        return subdivided_grid(a.integer(0, "rows"), a.integer(1, "cols"));
    if (m == "hamiltonian_union")
        return hamiltonian_union(a.integer(0, "n"), a.integer(1, "cycles"), seed);
    if (m == "pk_free_rejection")
        return pk_free_rejection(a.integer(0, "n"), a.rational(1, "p"), a.integer(2, "k"), a.integer(3, "max_tries"), seed);
    throw ParseError(0, "unknown generator model '" + m + "'");
}

Graph erdos_renyi(std::size_t n, const Rational & p, std::uint64_t seed)
{
    if (p < 0 || p > 1)
        throw DomainError("erdos_renyi: p must lie in [0, 1]");
    Rng rng(seed);
    const bool always = p == 1;
    const std::uint64_t threshold = always ? 0 : floor(p * Rational(BigInt(1) << 64)).convert_to<std::uint64_t>();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next() < threshold || always)
                edges.emplace_back(u, v);
    return from_edges(n, edges);
}

Graph edgeless(std::size_t n)
{
    return Graph(n, {});
}

Graph complete(std::size_t n)
{
    return complete_multipartite(std::vector<std::size_t>(n, 1));
}

Graph clique_union(std::size_t count, std::size_t size)
{
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < count; ++c) {
        const auto base = static_cast<Vertex>(c * size);
        for (Vertex i = 0; i < size; ++i)
            for (Vertex j = i + 1; j < size; ++j)
                edges.emplace_back(base + i, base + j);
    }
    return from_edges(count * size, edges);
}

Graph complete_multipartite(const std::vector<std::size_t> & part_sizes)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), part_sizes[p], p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                edges.emplace_back(u, v);
    return from_edges(part_of.size(), edges);
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return from_edges(n, edges);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw DomainError("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return from_edges(n, edges);
}

Graph subdivided_grid(std::size_t rows, std::size_t cols)
{
    std::vector<Edge> edges;
    auto corner = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    auto next = static_cast<Vertex>(rows * cols);
    auto add_subdivided = [&](Vertex a, Vertex b) {
        Vertex mid = next++;
        edges.emplace_back(std::min(a, mid), std::max(a, mid));
        edges.emplace_back(std::min(b, mid), std::max(b, mid));
    };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                add_subdivided(corner(r, c), corner(r, c + 1));
            if (r + 1 < rows)
                add_subdivided(corner(r, c), corner(r + 1, c));
        }
    return from_edges(next, edges);
}

Graph hamiltonian_union(std::size_t n, std::size_t cycles, std::uint64_t seed)
{
    if (n < 3)
        throw DomainError("hamiltonian_union: need at least 3 vertices");
    Rng rng(seed);
    std::vector<Vertex> order(n);
    std::vector<Edge> edges;
    edges.reserve(n * cycles);
    for (std::size_t c = 0; c < cycles; ++c) {
        for (std::size_t i = 0; i < n; ++i)
            order[i] = static_cast<Vertex>(i);
        rng.shuffle(order);
        for (std::size_t i = 0; i < n; ++i) {
            Vertex a = order[i], b = order[(i + 1) % n];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    return from_edges(n, edges, Graph::Duplicates::merge);
}

Graph pk_free_rejection(std::size_t n, const Rational & p, std::size_t k, std::size_t max_tries, std::uint64_t seed)
{
    if (k < 1)
        throw DomainError("pk_free_rejection: k must be >= 1");
    for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
        Graph g = erdos_renyi(n, p, mix_seed(seed, attempt));
        if (!find_induced_path(g, k))
            return g;
    }
    throw GenerationError("pk_free_rejection: no P_" + std::to_string(k) + "-free draw in " + std::to_string(max_tries)
        + " tries");
}

} // namespace pathfree
