#include "pathfree/graph.hpp"

#include "pathfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace pathfree {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw DomainError("vertex set contains a duplicate id");
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::range(std::size_t n)
{
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = static_cast<Vertex>(i);
    return from_sorted(std::move(all));
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members)
{
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet set_union(const VertexSet & a, const VertexSet & b)
{
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet & a, const VertexSet & b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet & a, const VertexSet & b)
{
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

bool disjoint(const VertexSet & a, const VertexSet & b)
{
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

VertexMask::VertexMask(std::size_t n, const VertexSet & members) : VertexMask(n)
{
    for (Vertex v : members)
        set(v);
}

std::size_t VertexMask::count() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, Duplicates policy, std::size_t vertex_cap) : n_(n)
{
    if (n > vertex_cap)
        throw DomainError("graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(vertex_cap));

    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw DomainError("self-loop at " + std::to_string(u));
        ++degree[u];
        ++degree[v];
    }

    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }

    bool merged = false;
    for (std::size_t v = 0; v < n; ++v) {
        auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            if (policy == Duplicates::reject)
                throw DomainError("duplicate edge at vertex " + std::to_string(v));
            merged = true;
        }
    }

    if (merged) {
        std::vector<Vertex> compact;
        compact.reserve(adjacency_.size());
        std::vector<std::size_t> offsets(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
            auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
            std::unique_copy(first, last, std::back_inserter(compact));
            offsets[v + 1] = compact.size();
        }
        adjacency_ = std::move(compact);
        offsets_ = std::move(offsets);
    }

    if (n <= kDenseRowLimit && n > 0) {
        words_per_row_ = (n + 63) / 64;
        rows_.assign(n * words_per_row_, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (Vertex u : neighbors(static_cast<Vertex>(v)))
                rows_[v * words_per_row_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u == v)
        return false;
    if (has_rows())
        return (rows_[u * words_per_row_ + (v >> 6)] >> (v & 63)) & 1u;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::count_neighbors_in(Vertex v, const VertexMask & mask) const
{
    if (has_rows() && mask.capacity() == n_) {
        auto r = row(v);
        auto m = mask.words();
        std::size_t total = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(r[i] & m[i]));
        return total;
    }
    std::size_t total = 0;
    for (Vertex u : neighbors(v))
        if (u < mask.capacity() && mask.test(u))
            ++total;
    return total;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < n_; ++u)
        for (Vertex v : neighbors(static_cast<Vertex>(u)))
            if (u < v)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

Graph complement(const Graph & g)
{
    if (g.n() > Graph::kDenseRowLimit)
        throw DomainError("complement of a graph with more than " + std::to_string(Graph::kDenseRowLimit)
            + " vertices is not supported");
    std::vector<Edge> edges;
    const std::size_t n = g.n();
    edges.reserve(n * (n - (n ? 1 : 0)) / 2 - g.edge_count());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexSet InducedSubgraph::lift(const VertexSet & local) const
{
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local)
        out.push_back(to_host[v]);
    // to_host is increasing, so the image stays sorted.
    return VertexSet::from_sorted(std::move(out));
}

std::vector<Vertex> InducedSubgraph::lift(const std::vector<Vertex> & local) const
{
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local)
        out.push_back(to_host[v]);
    return out;
}

InducedSubgraph induced(const Graph & g, const VertexSet & members)
{
    if (!members.empty() && members.members().back() >= g.n())
        throw DomainError("induced: vertex outside the graph");
    std::vector<std::int64_t> local(g.n(), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        local[members[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Vertex u : g.neighbors(members[i]))
            if (local[u] > static_cast<std::int64_t>(i))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[u]));
    return InducedSubgraph{Graph(members.size(), edges), members.members()};
}

namespace {
    std::vector<std::string_view> split_fields(std::string_view line)
    {
        std::vector<std::string_view> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                fields.push_back(line.substr(i, j - i));
            i = j;
        }
        return fields;
    }

    std::uint64_t parse_count(std::string_view field, std::size_t line_no)
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(field) + "'");
        return value;
    }
}

Graph parse_graph(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    // A trailing newline does not introduce an extra record.
    while (!lines.empty() && split_fields(lines.back()).empty())
        lines.pop_back();

    if (lines.empty())
        throw ParseError(1, "missing header 'n m'");
    auto header = split_fields(lines[0]);
    if (header.size() != 2)
        throw ParseError(1, "header must be 'n m'");
    const auto n = parse_count(header[0], 1);
    const auto m = parse_count(header[1], 1);
    if (n > Graph::kDefaultVertexCap)
        throw ParseError(1, "vertex count " + std::to_string(n) + " exceeds cap");
    if (lines.size() - 1 != m)
        throw ParseError(lines.size() < m + 1 ? lines.size() + 1 : m + 2,
            "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::pair<Edge, std::size_t>> seen;
    seen.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_fields(lines[i]);
        if (fields.size() != 2)
            throw ParseError(i + 1, "expected 'u v'");
        auto u = parse_count(fields[0], i + 1), v = parse_count(fields[1], i + 1);
        if (u >= n || v >= n)
            throw ParseError(i + 1, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(i + 1, "self-loop");
        if (u > v)
            throw ParseError(i + 1, "edge must be written with u < v");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        seen.emplace_back(edges.back(), i + 1);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate edge");
    return Graph(n, edges);
}

std::string format_graph(const Graph & g)
{
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

bool max_inner_degree_at_most(const Graph & g, const VertexSet & members, std::size_t bound, bool in_complement)
{
    VertexMask mask(g.n(), members);
    for (Vertex v : members) {
        std::size_t inside = g.count_neighbors_in(v, mask);
        std::size_t d = in_complement ? members.size() - 1 - inside : inside;
        if (d > bound)
            return false;
    }
    return true;
}

} // namespace pathfree
