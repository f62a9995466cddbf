#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgl/group.hpp"
#include "cgl/sampler.hpp"

namespace cgl {

inline constexpr std::int32_t kUnreachable = -1;

struct DistanceMap {
    std::vector<std::int32_t> dist;          // from the identity, kUnreachable if not reached
    std::int32_t radius_from_identity = 0;   // max finite dist; equals the diameter when connected
    bool connected = false;
};

/// Reusable per-worker BFS buffers. Never share one instance between
/// threads; many trials on one worker reuse the same scratch.
struct BfsScratch {
    std::vector<std::int32_t> dist;
    std::vector<std::uint32_t> cur, nxt;
};

/// BFS over the implicit Cayley graph: neighbours of v are v*t for t in the
/// symmetric closure. Left multiplication is an automorphism, so the radius
/// from the identity is the diameter of a connected sample.
DistanceMap bfs_distances(const Group& G, const GenSet& S);

/// Diameter, or nullopt when the sample does not generate (disconnected).
std::optional<std::int32_t> diameter(const Group& G, const GenSet& S);

/// True iff every element lies within distance d of the identity. Expands
/// only d BFS levels and exits early once all vertices are covered.
bool diameter_at_most(const Group& G, const GenSet& S, std::uint32_t d, BfsScratch& scratch);

/// Max eccentricity over all start vertices (BFS from every vertex); the
/// vertex-transitivity cross-check for small orders.
std::optional<std::int32_t> all_pairs_diameter(const Group& G, const GenSet& S);

} // namespace cgl
