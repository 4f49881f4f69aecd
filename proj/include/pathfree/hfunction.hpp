#pragma once

#include <cmath>

namespace pathfree {

/// log2 h_s(x) = (log2 1/x)^{s/(s+1)}; s = 0 gives 1 (h_0 ≡ 2).
inline double log2_h(unsigned s, double x)
{
    if (s == 0)
        return 1.0;
    return std::pow(std::log2(1.0 / x), static_cast<double>(s) / static_cast<double>(s + 1));
}

} // namespace pathfree
