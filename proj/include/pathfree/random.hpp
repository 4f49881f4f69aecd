#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pathfree {

/// Seeded generator whose streams are identical on every platform: only the
/// raw mt19937_64 sequence is used, never the implementation-defined
/// standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do
            r = engine_();
        while (r >= limit);
        return r % bound;
    }

    template <typename T>
    void shuffle(std::vector<T> & items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer, for deriving independent per-row / per-try seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace pathfree
