#pragma once

#include "pathfree/graph.hpp"
#include "pathfree/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathfree {

/// A model name plus its arguments, written "name(a,b)" or "name(key=val,...)".
struct GeneratorSpec {
    std::string name;
    std::vector<std::pair<std::string, std::string>> args; // key empty for positional

    std::string to_string() const;
};

GeneratorSpec parse_generator_spec(std::string_view text);

/// Deterministic in (spec, seed). Models:
///   erdos_renyi(n, p)          edgeless(n)          complete(n)
///   clique_union(count, size)  complete_multipartite(s1, s2, ...)
///   path(n)  cycle(n)  subdivided_grid(rows, cols)  hamiltonian_union(n, cycles)
///   pk_free_rejection(n, p, k, max_tries)
Graph generate(const GeneratorSpec & spec, std::uint64_t seed);
Graph generate(std::string_view spec, std::uint64_t seed);

Graph erdos_renyi(std::size_t n, const Rational & p, std::uint64_t seed);
Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph clique_union(std::size_t count, std::size_t size);
Graph complete_multipartite(const std::vector<std::size_t> & part_sizes);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// The rows x cols grid with every edge subdivided once.
Graph subdivided_grid(std::size_t rows, std::size_t cols);
/// Union of `cycles` uniformly random Hamiltonian cycles; max degree <= 2·cycles.
Graph hamiltonian_union(std::size_t n, std::size_t cycles, std::uint64_t seed);
/// Erdős–Rényi draws until one is certified P_k-free; throws GenerationError
/// after max_tries failures.
Graph pk_free_rejection(std::size_t n, const Rational & p, std::size_t k, std::size_t max_tries, std::uint64_t seed);

} // namespace pathfree
