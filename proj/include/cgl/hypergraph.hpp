#pragma once

#include <cstdint>
#include <vector>

#include "cgl/group.hpp"
#include "cgl/sampler.hpp"

namespace cgl {

struct EnumLimits {
    // Cap on visited signed tuples, sum over lengths 1..d of (2(N-1))^l.
    // Operations fail fast with a cost estimate instead of running long.
    std::uint64_t max_tuples = 1'000'000;
};

/// Edges of the walk hypergraph of a target x: the subsets E of G\{1} for
/// which some product h_1^{a_1} ... h_l^{a_l} = x exists with |E| <= l <= d,
/// all h_i in E and every element of E used at least once. Edge sets are
/// stored sorted ascending, ordered by (size, lexicographic).
struct EdgeCensus {
    std::uint32_t x = 0;
    std::uint32_t d = 0;
    std::vector<std::uint64_t> count_by_size;       // e_k at index k-1
    std::vector<std::vector<std::uint32_t>> edges;  // empty when not retained

    std::uint64_t e(std::uint32_t k) const {
        return (k >= 1 && k <= count_by_size.size()) ? count_by_size[k - 1] : 0;
    }
    /// [begin, end) positions of the k-edges within `edges`.
    std::pair<std::size_t, std::size_t> size_range(std::uint32_t k) const;
};

/// Signed tuples visited by a full enumeration at walk bound d.
std::uint64_t enumeration_cost(const Group& G, std::uint32_t d);

/// Exhaustive census for one target (x != identity).
EdgeCensus enumerate_edges(const Group& G, std::uint32_t x, std::uint32_t d,
                           const EnumLimits& limits = {});

/// Censuses for every x in one pass over all signed tuples; entry [x] is the
/// census of x, entry [0] stays empty.
std::vector<EdgeCensus> census_all(const Group& G, std::uint32_t d,
                                   const EnumLimits& limits = {}, bool keep_edges = true);

/// For each size k: the largest number of distinct targets sharing one
/// k-set as an edge, the incidence total sum_x e_k(x), and their bounds
/// (2k)^{d+1} and (2k)^{d+1} N^k.
struct EdgeSharingStats {
    std::vector<std::uint64_t> max_targets_per_size;   // index k-1
    std::vector<std::uint64_t> max_targets_bound;      // (2k)^{d+1}
    std::vector<std::uint64_t> total_incidences;       // sum_x e_k(x)
    std::vector<std::uint64_t> total_incidences_bound; // (2k)^{d+1} N^k
};

EdgeSharingStats edge_sharing_stats(const Group& G, std::uint32_t d, const EnumLimits& limits = {});

/// e_d(x) against the generic lower-order target N^{d-1}/d! and the cyclic
/// target 2^d N^{d-1}/d! (halved when x is an involution).
struct EdgeDensityRatios {
    std::uint64_t e_d = 0;
    bool x_involution = false;
    double general_target = 0, general_ratio = 0;
    double cyclic_target = 0, cyclic_ratio = 0;
};

EdgeDensityRatios edge_density_ratios(const Group& G, std::uint32_t x, std::uint32_t d,
                  const EnumLimits& limits = {});

/// Family-aware upper bound on e_d(x): C * N^{d-1} with C = 2^d in general,
/// 2^d/d! for abelian groups, 1/d! for elem2.
double edge_count_bound(const Group& G, std::uint32_t d);

/// Upper bound used in the census CSV for e_k(x): the count bound at k = d,
/// otherwise the witness-count bound sum_{l=k..d} 2^l N^{l-1}.
double census_bound(const Group& G, std::uint32_t d, std::uint32_t k);

/// Ordered pairs (e, f) of d-edges of one census with |e n f| = i.
std::uint64_t overlap_pairs(const EdgeCensus& census, std::uint32_t i);
std::uint64_t overlap_pairs(const Group& G, std::uint32_t x, std::uint32_t d, std::uint32_t i,
                            const EnumLimits& limits = {});
/// 2^{2d} binom(d,i)^2 i! N^{2d-i-2}
double overlap_bound(std::uint64_t N, std::uint32_t d, std::uint32_t i);

/// Pairs (e, f) with e an r-edge of x's census, f an s-edge of y's census
/// and |e n f| = t.
std::uint64_t cross_pairs(const EdgeCensus& cx, const EdgeCensus& cy, std::uint32_t r,
                          std::uint32_t s, std::uint32_t t);
std::uint64_t cross_pairs(const Group& G, std::uint32_t x, std::uint32_t y, std::uint32_t d,
                          std::uint32_t r, std::uint32_t s, std::uint32_t t,
                          const EnumLimits& limits = {});

/// x ~ y when some (r,s,t) cross-pair count reaches N^{r+s-t-1-delta}.
/// `filtered` drops the x with e_k(x) > N^{k-1+delta} for some k; the greedy
/// independent set is taken inside that subgraph in index order.
struct DependencyGraph {
    std::uint32_t d = 0;
    double delta = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;  // over G\{1}; entry 0 unused
    std::vector<std::uint32_t> filtered;
    std::vector<std::uint32_t> independent_set;
    bool delta_window_satisfied = false;  // N^delta >= 4^{d+2} d^{d+3}
};

DependencyGraph dependency_graph(const Group& G, std::uint32_t d, double delta,
                                 const EnumLimits& limits = {});

/// True iff some edge of x's census lies entirely inside S.members; equal to
/// the BFS predicate dist(1, x) <= d.
bool reachable_via_edge(const Group& G, const GenSet& S, std::uint32_t x, std::uint32_t d,
                        const EnumLimits& limits = {});
bool reachable_in_census(const EdgeCensus& census, const GenSet& S);

/// Product families whose collision-freeness is counted per tuple
/// (g_1..g_{d-1}) of distinct elements of G \ {1, x}:
///   a: all d! orderings of (x, g...) and all 2^d signs; requires x^2 != 1
///   b: as (a) but the sign on x fixed to +1;          requires x^2  = 1
///   c: x held last, all 2^d signs;                    requires x^2 != 1
///   d: x held last with sign +1;                      requires x^2  = 1
enum class ProductCase { a, b, c, d };

std::uint64_t distinct_product_tuples(const Group& G, std::uint32_t x, std::uint32_t d,
                                      ProductCase which, const EnumLimits& limits = {});

} // namespace cgl
