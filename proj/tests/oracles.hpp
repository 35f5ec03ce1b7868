#pragma once

// Independent brute-force oracles shared by the unit and acceptance tests.
// None of these call into the library code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// ADE membership straight from the four patterns, no classification table.
inline bool is_ade(std::vector<long> d) {
    std::sort(d.begin(), d.end());
    std::vector<long> t;
    for (long x : d)
        if (x != 2) t.push_back(x);
    return t.size() <= 1 || t == std::vector<long>{3, 3} || t == std::vector<long>{3, 4} ||
           t == std::vector<long>{3, 5};
}

// sum 1/d_i <= 1 via common denominator in 128-bit integers.
inline bool is_nonpositive(const std::vector<long>& d) {
    __int128 den = 1;
    for (long x : d) den *= x;
    __int128 num = 0;
    for (long x : d) num += den / x;
    return num <= den;
}

// Minimum number of blocks over all set partitions, via bitmask subsets
// containing the lowest remaining index.
inline std::size_t min_blocks(const std::vector<long>& d, const std::function<bool(const std::vector<long>&)>& ok) {
    const std::size_t n = d.size();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> valid(1u << n, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::vector<long> part;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) part.push_back(d[i]);
        valid[m] = ok(part);
    }
    std::vector<int> best(1u << n, 1 << 20);
    best[0] = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
        const std::uint32_t low = m & (~m + 1);
        for (std::uint32_t s = m; s; s = (s - 1) & m)
            if ((s & low) && valid[s]) best[m] = std::min(best[m], best[m ^ s] + 1);
    }
    return static_cast<std::size_t>(best[full]);
}

}  // namespace oracle
