#include "cgl/bfs.hpp"

#include <algorithm>

namespace cgl {

DistanceMap bfs_distances(const Group& G, const GenSet& S) {
    const std::uint32_t n = G.order();
    DistanceMap m;
    m.dist.assign(n, kUnreachable);
    m.dist[0] = 0;
    std::vector<std::uint32_t> cur{0}, nxt;
    std::uint64_t covered = 1;
    std::int32_t level = 0;
    while (!cur.empty()) {
        ++level;
        nxt.clear();
        for (std::uint32_t v : cur) {
            for (std::uint32_t t : S.closure) {
                const std::uint32_t w = G.op(v, t);
                if (m.dist[w] == kUnreachable) {
                    m.dist[w] = level;
                    nxt.push_back(w);
                }
            }
        }
        if (!nxt.empty()) m.radius_from_identity = level;
        covered += nxt.size();
        cur.swap(nxt);
    }
    m.connected = covered == n;
    return m;
}

std::optional<std::int32_t> diameter(const Group& G, const GenSet& S) {
    const DistanceMap m = bfs_distances(G, S);
    if (!m.connected) return std::nullopt;
    return m.radius_from_identity;
}

bool diameter_at_most(const Group& G, const GenSet& S, std::uint32_t d, BfsScratch& scratch) {
    const std::uint32_t n = G.order();
    if (n == 1) return true;
    const auto& T = S.closure;
    if (T.empty()) return false;

    // Ball-size bound: level i holds at most |T|^i vertices, so the d-ball
    // cannot cover N unless sum |T|^i >= N.
    {
        std::uint64_t ball = 1, layer = 1;
        for (std::uint32_t i = 0; i < d && ball < n; ++i) {
            if (layer > n) break;
            layer *= T.size();
            ball += layer;
        }
        if (ball < n) return false;
    }

    scratch.dist.assign(n, kUnreachable);
    scratch.dist[0] = 0;
    scratch.cur.clear();
    scratch.cur.push_back(0);
    std::uint64_t covered = 1;
    for (std::uint32_t level = 1; level <= d; ++level) {
        scratch.nxt.clear();
        for (std::uint32_t v : scratch.cur) {
            for (std::uint32_t t : T) {
                const std::uint32_t w = G.op(v, t);
                if (scratch.dist[w] == kUnreachable) {
                    scratch.dist[w] = static_cast<std::int32_t>(level);
                    scratch.nxt.push_back(w);
                    ++covered;
                }
            }
            if (covered == n) return true;
        }
        if (scratch.nxt.empty()) return false;
        scratch.cur.swap(scratch.nxt);
    }
    return covered == n;
}

std::optional<std::int32_t> all_pairs_diameter(const Group& G, const GenSet& S) {
    const std::uint32_t n = G.order();
    std::int32_t best = 0;
    std::vector<std::int32_t> dist(n);
    std::vector<std::uint32_t> cur, nxt;
    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[s] = 0;
        cur.assign(1, s);
        std::uint64_t covered = 1;
        std::int32_t level = 0, ecc = 0;
        while (!cur.empty()) {
            ++level;
            nxt.clear();
            for (std::uint32_t v : cur) {
                for (std::uint32_t t : S.closure) {
                    const std::uint32_t w = G.op(v, t);
                    if (dist[w] == kUnreachable) {
                        dist[w] = level;
                        nxt.push_back(w);
                    }
                }
            }
            if (!nxt.empty()) ecc = level;
            covered += nxt.size();
            cur.swap(nxt);
        }
        if (covered != n) return std::nullopt;
        best = std::max(best, ecc);
    }
    return best;
}

} // namespace cgl
