#pragma once

#include <cstdint>

#include "cgl/group.hpp"
#include "cgl/hypergraph.hpp"

namespace cgl {

/// Avoidance probability Pr(no edge of x's census lies inside S) under
/// independent inclusion at rate p, together with the correlation bounds
/// that sandwich it:
///   kleitman_lower = prod_E (1 - p^{|E|})
///   janson_upper   = exp(-sum_E p^{|E|} + half the sum over ordered
///                    intersecting pairs of p^{|E u F|})
/// janson_upper is reported raw and may exceed 1; the usable bound is
/// min(1, janson_upper).
struct SandwichResult {
    double exact = 0;
    double kleitman_lower = 0;
    double janson_upper = 0;
};

/// Exact term enumerates all 2^{N-1} subsets of G\{1}; requires N <= 20.
SandwichResult avoidance_sandwich(const Group& G, std::uint32_t x, std::uint32_t d, double p,
                                  const EnumLimits& limits = {});

} // namespace cgl
