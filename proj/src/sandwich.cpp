#include "cgl/sandwich.hpp"

#include <cmath>
#include <vector>

namespace cgl {

SandwichResult avoidance_sandwich(const Group& G, std::uint32_t x, std::uint32_t d, double p,
                                  const EnumLimits& limits) {
    const std::uint32_t n = G.order();
    if (n > 20)
        throw CapacityError("avoidance_sandwich: exact term enumerates 2^{N-1} subsets, N = " +
                            std::to_string(n) + " exceeds 20");
    if (!(p >= 0.0 && p <= 1.0))
        throw ArgumentError("avoidance_sandwich: p must lie in [0, 1]");
    const EdgeCensus census = enumerate_edges(G, x, d, limits);

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(census.edges.size());
    for (const auto& e : census.edges) {
        std::uint32_t mask = 0;
        for (std::uint32_t g : e) mask |= 1u << (g - 1);
        edge_masks.push_back(mask);
    }

    // A subset is bad when it contains some edge; monotone closure by
    // single-bit descent.
    const std::uint32_t subsets = 1u << (n - 1);
    std::vector<char> bad(subsets, 0);
    for (std::uint32_t mask : edge_masks) bad[mask] = 1;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        if (bad[mask]) continue;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            if (bad[mask ^ (rest & (~rest + 1))]) {
                bad[mask] = 1;
                break;
            }
        }
    }

    std::vector<double> pw(n), qw(n);
    pw[0] = qw[0] = 1.0;
    for (std::uint32_t k = 1; k < n; ++k) {
        pw[k] = pw[k - 1] * p;
        qw[k] = qw[k - 1] * (1.0 - p);
    }

    SandwichResult r;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        if (bad[mask]) continue;
        const std::uint32_t pop = static_cast<std::uint32_t>(__builtin_popcount(mask));
        r.exact += pw[pop] * qw[n - 1 - pop];
    }

    r.kleitman_lower = 1.0;
    double sum_single = 0.0;
    for (const auto& e : census.edges) {
        r.kleitman_lower *= 1.0 - pw[e.size()];
        sum_single += pw[e.size()];
    }

    double delta_ordered = 0.0;
    for (std::size_t a = 0; a < edge_masks.size(); ++a)
        for (std::size_t b = a + 1; b < edge_masks.size(); ++b)
            if (edge_masks[a] & edge_masks[b])
                delta_ordered += 2.0 * pw[__builtin_popcount(edge_masks[a] | edge_masks[b])];
    r.janson_upper = std::exp(-sum_single + 0.5 * delta_ordered);
    return r;
}

} // namespace cgl
