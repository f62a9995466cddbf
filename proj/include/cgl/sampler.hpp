#pragma once

#include <cstdint>
#include <vector>

#include "cgl/group.hpp"

namespace cgl {

/// A sampled generating set. The identity may appear in `members` (it is
/// inert); `closure` is T = (S u S^{-1}) \ {1}, the set actually walked by
/// BFS. Both lists are sorted ascending.
struct GenSet {
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> closure;

    bool contains(std::uint32_t g) const;
    bool closure_contains(std::uint32_t g) const;
};

/// Builds a GenSet from an explicit member list (validates indices,
/// deduplicates, computes the symmetric closure).
GenSet make_genset(const Group& G, std::vector<std::uint32_t> members);

/// One uniform value per group element, derived from (seed, stream, element
/// index) via the counter-based stream in rng.hpp. Materializing at
/// threshold p keeps {g : u_g < p}, so the gensets for p1 <= p2 are nested
/// and a fixed table gives a coupled, monotone-in-p family of samples.
struct UniformTable {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::vector<double> u;
};

UniformTable coupled_table(const Group& G, std::uint64_t seed, std::uint64_t stream = 0);

GenSet materialize(const Group& G, const UniformTable& table, double p);

/// Each element of G independently in S with probability p. Identical to
/// materialize(coupled_table(G, seed), p), so a fixed seed is monotone in p.
GenSet sample_generators(const Group& G, double p, std::uint64_t seed);

} // namespace cgl
