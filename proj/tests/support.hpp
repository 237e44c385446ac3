#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "sober/finite_ring.hpp"

namespace sober_test {

/// Exhaustive ideal enumeration by subset filtering, independent of the
/// library's lattice construction. Usable up to order 16.
inline std::vector<sober::Bitset> ideals_by_subset_filter(const sober::FiniteRing& r) {
    const unsigned n = r.order;
    std::vector<sober::Bitset> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        if (!(mask >> r.zero & 1)) continue;
        sober::Bitset b(n);
        for (unsigned i = 0; i < n; ++i)
            if (mask >> i & 1) b.set(i);
        bool ok = true;
        for (unsigned x = 0; x < n && ok; ++x) {
            if (!b.test(x)) continue;
            for (unsigned y = 0; y < n && ok; ++y) {
                if (b.test(y) && !b.test(r.add(static_cast<uint16_t>(x), static_cast<uint16_t>(y))))
                    ok = false;
                if (!b.test(r.mul(static_cast<uint16_t>(x), static_cast<uint16_t>(y))))
                    ok = false;
            }
        }
        if (ok) out.push_back(b);
    }
    std::sort(out.begin(), out.end(), sober::CanonicalLess{});
    return out;
}

inline unsigned divisor_count(unsigned n) {
    unsigned c = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

inline sober::Bitset bits(unsigned n, std::initializer_list<uint16_t> xs) {
    sober::Bitset b(n);
    for (uint16_t x : xs) b.set(x);
    return b;
}

}  // namespace sober_test
