#include "pathfree/induced_path.hpp"

#include <algorithm>
#include <numeric>

namespace pathfree {

namespace {
    class PathSearch {
    public:
        PathSearch(const Graph & g, std::size_t k) : g_(g), k_(k), blocked_(g.n(), 0), on_path_(g.n(), 0) {}

        bool extend()
        {
            if (path_.size() == k_)
                return true;
            const Vertex last = path_.back();
            // `last` becomes interior: its neighbours may no longer follow.
            for (Vertex u : g_.neighbors(last))
                ++blocked_[u];
            for (Vertex u : g_.neighbors(last)) {
                // u is counted once by `last` itself.
                if (on_path_[u] || blocked_[u] != 1)
                    continue;
                push(u);
                if (extend())
                    return true;
                pop();
            }
            for (Vertex u : g_.neighbors(last))
                --blocked_[u];
            return false;
        }

        void push(Vertex v)
        {
            path_.push_back(v);
            on_path_[v] = 1;
        }

        void pop()
        {
            on_path_[path_.back()] = 0;
            path_.pop_back();
        }

        std::vector<Vertex> path_;

    private:
        const Graph & g_;
        std::size_t k_;
        std::vector<std::uint32_t> blocked_;
        std::vector<std::uint8_t> on_path_;
    };
}

std::optional<PathWitness> find_induced_path(const Graph & g, std::size_t k)
{
    if (k == 0 || k > g.n())
        return std::nullopt;
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

    PathSearch search(g, k);
    for (Vertex start : order) {
        if (k > 1 && g.degree(start) == 0)
            continue;
        search.push(start);
        if (search.extend())
            return PathWitness{search.path_};
        search.pop();
    }
    return std::nullopt;
}

} // namespace pathfree
