#include "cgl/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace cgl {

namespace {

constexpr std::uint64_t kSaturated = ~0ull;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

void check_target(const Group& G, std::uint32_t x) {
    if (x == 0) throw ArgumentError("target x must not be the identity");
    if (x >= G.order()) throw ArgumentError("target x out of range");
}

void check_cost(const Group& G, std::uint32_t d, const EnumLimits& limits, const char* what) {
    const std::uint64_t cost = enumeration_cost(G, d);
    if (cost > limits.max_tuples)
        throw CapacityError(std::string(what) + ": estimated " +
                            (cost == kSaturated ? std::string(">= 2^64")
                                                : std::to_string(cost)) +
                            " signed tuples for N = " + std::to_string(G.order()) + ", d = " +
                            std::to_string(d) + " exceeds cap " +
                            std::to_string(limits.max_tuples));
}

// Canonical 64-bit keys for edge sets: a bitmask over elements 1..N-1 when
// N <= 64, otherwise (d <= 3) up to three 21-bit indices packed ascending.
struct EdgeKeying {
    bool bitmask;
    static EdgeKeying choose(std::uint32_t order, std::uint32_t d) {
        if (order <= 64) return {true};
        if (d <= 3 && order <= (1u << 21)) return {false};
        throw CapacityError("edge enumeration with N > 64 requires d <= 3 and N <= 2^21");
    }
    std::uint64_t key(const std::uint32_t* elems, std::uint32_t count) const {
        if (bitmask) {
            std::uint64_t mask = 0;
            for (std::uint32_t i = 0; i < count; ++i) mask |= 1ull << (elems[i] - 1);
            return mask;
        }
        std::uint32_t sorted[3] = {0, 0, 0};
        for (std::uint32_t i = 0; i < count; ++i) sorted[i] = elems[i];
        std::sort(sorted, sorted + count);
        std::uint32_t unique = count == 0 ? 0 : 1;
        for (std::uint32_t i = 1; i < count; ++i)
            if (sorted[i] != sorted[unique - 1]) sorted[unique++] = sorted[i];
        std::uint64_t k = 0;
        for (std::uint32_t i = 0; i < unique; ++i)
            k |= static_cast<std::uint64_t>(sorted[i]) << (21 * i);
        return k;
    }
    std::vector<std::uint32_t> decode(std::uint64_t key) const {
        std::vector<std::uint32_t> elems;
        if (bitmask) {
            while (key) {
                const int bit = __builtin_ctzll(key);
                elems.push_back(static_cast<std::uint32_t>(bit) + 1);
                key &= key - 1;
            }
        } else {
            for (int slot = 0; slot < 3; ++slot) {
                const std::uint32_t e = static_cast<std::uint32_t>((key >> (21 * slot)) & 0x1fffff);
                if (e != 0) elems.push_back(e);
            }
        }
        return elems;
    }
};

// Walks every signed tuple (h_1^{a_1}, ..., h_l^{a_l}) over G\{1} for
// l = 1..d and hands (product, elements, length) to the sink.
template <typename Sink>
void for_each_signed_tuple(const Group& G, std::uint32_t d, Sink&& sink) {
    const std::uint32_t n = G.order();
    if (n < 2) return;
    std::vector<std::uint32_t> inv_of(n);
    for (std::uint32_t g = 1; g < n; ++g) inv_of[g] = G.inv(g);

    std::vector<std::uint32_t> elems(d), prods(d + 1);
    prods[0] = 0;
    for (std::uint32_t len = 1; len <= d; ++len) {
        // Depth-first odometer over (element, sign) choices.
        auto recurse = [&](auto&& self, std::uint32_t depth) -> void {
            if (depth == len) {
                sink(prods[len], elems.data(), len);
                return;
            }
            for (std::uint32_t g = 1; g < n; ++g) {
                elems[depth] = g;
                prods[depth + 1] = G.op(prods[depth], g);
                self(self, depth + 1);
                prods[depth + 1] = G.op(prods[depth], inv_of[g]);
                self(self, depth + 1);
            }
        };
        recurse(recurse, 0);
    }
}

EdgeCensus finalize_census(std::uint32_t x, std::uint32_t d,
                           const std::unordered_set<std::uint64_t>& keys,
                           const EdgeKeying& keying, bool keep_edges) {
    EdgeCensus c;
    c.x = x;
    c.d = d;
    c.count_by_size.assign(d, 0);
    std::vector<std::vector<std::uint32_t>> decoded;
    decoded.reserve(keys.size());
    for (std::uint64_t k : keys) decoded.push_back(keying.decode(k));
    std::sort(decoded.begin(), decoded.end(),
              [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    for (const auto& e : decoded) ++c.count_by_size[e.size() - 1];
    if (keep_edges) c.edges = std::move(decoded);
    return c;
}

std::uint64_t factorial(std::uint32_t k) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= k; ++i) f *= i;
    return f;
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    std::uint64_t b = 1;
    for (std::uint32_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

std::uint64_t intersection_size(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b) {
    std::uint64_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else ++count, ++i, ++j;
    }
    return count;
}

} // namespace

std::pair<std::size_t, std::size_t> EdgeCensus::size_range(std::uint32_t k) const {
    std::size_t begin = 0;
    for (std::uint32_t s = 1; s < k; ++s) begin += e(s);
    return {begin, begin + e(k)};
}

std::uint64_t enumeration_cost(const Group& G, std::uint32_t d) {
    const std::uint64_t base = 2ull * (G.order() - 1);
    std::uint64_t cost = 0, term = 1;
    for (std::uint32_t l = 1; l <= d; ++l) {
        term = sat_mul(term, base);
        cost = sat_add(cost, term);
    }
    return cost;
}

EdgeCensus enumerate_edges(const Group& G, std::uint32_t x, std::uint32_t d,
                           const EnumLimits& limits) {
    check_target(G, x);
    if (d < 1) throw ArgumentError("walk bound d must be >= 1");
    check_cost(G, d, limits, "enumerate_edges");
    const EdgeKeying keying = EdgeKeying::choose(G.order(), d);
    std::unordered_set<std::uint64_t> keys;
    for_each_signed_tuple(G, d, [&](std::uint32_t prod, const std::uint32_t* elems,
                                    std::uint32_t len) {
        if (prod == x) keys.insert(keying.key(elems, len));
    });
    return finalize_census(x, d, keys, keying, true);
}

std::vector<EdgeCensus> census_all(const Group& G, std::uint32_t d, const EnumLimits& limits,
                                   bool keep_edges) {
    if (d < 1) throw ArgumentError("walk bound d must be >= 1");
    check_cost(G, d, limits, "census_all");
    const EdgeKeying keying = EdgeKeying::choose(G.order(), d);
    std::vector<std::unordered_set<std::uint64_t>> buckets(G.order());
    for_each_signed_tuple(G, d, [&](std::uint32_t prod, const std::uint32_t* elems,
                                    std::uint32_t len) {
        if (prod != 0) buckets[prod].insert(keying.key(elems, len));
    });
    std::vector<EdgeCensus> out(G.order());
    for (std::uint32_t x = 1; x < G.order(); ++x)
        out[x] = finalize_census(x, d, buckets[x], keying, keep_edges);
    return out;
}

EdgeSharingStats edge_sharing_stats(const Group& G, std::uint32_t d, const EnumLimits& limits) {
    const auto censuses = census_all(G, d, limits, true);
    EdgeSharingStats r;
    r.max_targets_per_size.assign(d, 0);
    r.total_incidences.assign(d, 0);
    std::unordered_map<std::uint64_t, std::uint64_t> target_counts;
    const EdgeKeying keying = EdgeKeying::choose(G.order(), d);
    for (std::uint32_t x = 1; x < G.order(); ++x) {
        for (const auto& e : censuses[x].edges) {
            r.total_incidences[e.size() - 1] += 1;
            // one bucket per (size, set); sets of different sizes never collide
            ++target_counts[keying.key(e.data(), static_cast<std::uint32_t>(e.size()))];
        }
    }
    for (const auto& [key, count] : target_counts) {
        const std::uint32_t k = static_cast<std::uint32_t>(keying.decode(key).size());
        r.max_targets_per_size[k - 1] = std::max(r.max_targets_per_size[k - 1], count);
    }
    for (std::uint32_t k = 1; k <= d; ++k) {
        std::uint64_t bound = 1;
        for (std::uint32_t i = 0; i <= d; ++i) bound = sat_mul(bound, 2ull * k);
        r.max_targets_bound.push_back(bound);
        std::uint64_t total = bound;
        for (std::uint32_t i = 0; i < k; ++i) total = sat_mul(total, G.order());
        r.total_incidences_bound.push_back(total);
    }
    return r;
}

EdgeDensityRatios edge_density_ratios(const Group& G, std::uint32_t x, std::uint32_t d, const EnumLimits& limits) {
    const EdgeCensus c = enumerate_edges(G, x, d, limits);
    EdgeDensityRatios r;
    r.e_d = c.e(d);
    r.x_involution = G.is_involution(x);
    const double nd1 = std::pow(static_cast<double>(G.order()), static_cast<double>(d) - 1.0);
    const double dfact = static_cast<double>(factorial(d));
    r.general_target = nd1 / dfact;
    r.general_ratio = static_cast<double>(r.e_d) / r.general_target;
    const double sign_count = std::ldexp(1.0, static_cast<int>(d) - (r.x_involution ? 1 : 0));
    r.cyclic_target = sign_count * nd1 / dfact;
    r.cyclic_ratio = static_cast<double>(r.e_d) / r.cyclic_target;
    return r;
}

double edge_count_bound(const Group& G, std::uint32_t d) {
    const double nd1 = std::pow(static_cast<double>(G.order()), static_cast<double>(d) - 1.0);
    const double pow2 = std::ldexp(1.0, static_cast<int>(d));
    if (G.family() == Family::elem2) return nd1 / static_cast<double>(factorial(d));
    if (G.abelian()) return pow2 * nd1 / static_cast<double>(factorial(d));
    return pow2 * nd1;
}

double census_bound(const Group& G, std::uint32_t d, std::uint32_t k) {
    if (k == d) return edge_count_bound(G, d);
    double bound = 0;
    for (std::uint32_t l = k; l <= d; ++l)
        bound += std::ldexp(1.0, static_cast<int>(l)) *
                 std::pow(static_cast<double>(G.order()), static_cast<double>(l) - 1.0);
    return bound;
}

std::uint64_t overlap_pairs(const EdgeCensus& census, std::uint32_t i) {
    if (i < 1 || i + 1 > census.d)
        throw ArgumentError("overlap_pairs: i must satisfy 1 <= i <= d-1");
    const auto [begin, end] = census.size_range(census.d);
    std::uint64_t ordered = 0;
    for (std::size_t a = begin; a < end; ++a)
        for (std::size_t b = a + 1; b < end; ++b)
            if (intersection_size(census.edges[a], census.edges[b]) == i) ordered += 2;
    return ordered;
}

std::uint64_t overlap_pairs(const Group& G, std::uint32_t x, std::uint32_t d, std::uint32_t i,
                            const EnumLimits& limits) {
    return overlap_pairs(enumerate_edges(G, x, d, limits), i);
}

double overlap_bound(std::uint64_t N, std::uint32_t d, std::uint32_t i) {
    return std::ldexp(1.0, 2 * static_cast<int>(d)) *
           static_cast<double>(binomial(d, i) * binomial(d, i) * factorial(i)) *
           std::pow(static_cast<double>(N), 2.0 * d - i - 2.0);
}

std::uint64_t cross_pairs(const EdgeCensus& cx, const EdgeCensus& cy, std::uint32_t r,
                          std::uint32_t s, std::uint32_t t) {
    if (t < 1 || t > std::min(r, s)) return 0;
    const auto [xb, xe] = cx.size_range(r);
    const auto [yb, ye] = cy.size_range(s);
    std::uint64_t count = 0;
    for (std::size_t a = xb; a < xe; ++a)
        for (std::size_t b = yb; b < ye; ++b)
            if (intersection_size(cx.edges[a], cy.edges[b]) == t) ++count;
    return count;
}

std::uint64_t cross_pairs(const Group& G, std::uint32_t x, std::uint32_t y, std::uint32_t d,
                          std::uint32_t r, std::uint32_t s, std::uint32_t t,
                          const EnumLimits& limits) {
    if (r < 1 || r > d || s < 1 || s > d)
        throw ArgumentError("cross_pairs: need 1 <= r,s <= d");
    return cross_pairs(enumerate_edges(G, x, d, limits), enumerate_edges(G, y, d, limits), r, s,
                       t);
}

DependencyGraph dependency_graph(const Group& G, std::uint32_t d, double delta,
                                 const EnumLimits& limits) {
    if (!(delta > 0)) throw ArgumentError("dependency_graph: delta must be > 0");
    const auto censuses = census_all(G, d, limits, true);
    const std::uint32_t n = G.order();
    const double dn = static_cast<double>(n);

    DependencyGraph H;
    H.d = d;
    H.delta = delta;
    H.adjacency.assign(n, {});
    H.delta_window_satisfied =
        std::pow(dn, delta) >= std::pow(4.0, d + 2.0) * std::pow(static_cast<double>(d), d + 3.0);

    // adjacency thresholds per (r+s-t); counts accumulated in one pass
    std::vector<std::vector<std::vector<std::uint64_t>>> counts(
        d + 1, std::vector<std::vector<std::uint64_t>>(d + 1, std::vector<std::uint64_t>(d + 1)));
    for (std::uint32_t x = 1; x < n; ++x) {
        for (std::uint32_t y = x + 1; y < n; ++y) {
            for (auto& plane : counts)
                for (auto& row : plane) std::fill(row.begin(), row.end(), 0);
            for (const auto& e : censuses[x].edges)
                for (const auto& f : censuses[y].edges) {
                    const std::uint64_t t = intersection_size(e, f);
                    if (t >= 1) ++counts[e.size()][f.size()][t];
                }
            bool adjacent = false;
            for (std::uint32_t r = 1; r <= d && !adjacent; ++r)
                for (std::uint32_t s = 1; s <= d && !adjacent; ++s)
                    for (std::uint32_t t = 1; t <= std::min(r, s) && !adjacent; ++t) {
                        const double threshold =
                            std::pow(dn, static_cast<double>(r) + s - t - 1.0 - delta);
                        // symmetric in (x, y): both (r,s,t) and (s,r,t) orders scanned
                        if (static_cast<double>(counts[r][s][t]) >= threshold ||
                            static_cast<double>(counts[s][r][t]) >= threshold)
                            adjacent = true;
                    }
            if (adjacent) {
                H.adjacency[x].push_back(y);
                H.adjacency[y].push_back(x);
            }
        }
    }

    for (std::uint32_t x = 1; x < n; ++x) {
        bool keep = true;
        for (std::uint32_t k = 1; k <= d && keep; ++k)
            if (static_cast<double>(censuses[x].e(k)) >
                std::pow(dn, static_cast<double>(k) - 1.0 + delta))
                keep = false;
        if (keep) H.filtered.push_back(x);
    }

    std::vector<char> in_set(n, 0);
    for (std::uint32_t x : H.filtered) {
        bool blocked = false;
        for (std::uint32_t y : H.adjacency[x])
            if (in_set[y]) { blocked = true; break; }
        if (!blocked) {
            in_set[x] = 1;
            H.independent_set.push_back(x);
        }
    }
    return H;
}

bool reachable_in_census(const EdgeCensus& census, const GenSet& S) {
    for (const auto& e : census.edges) {
        bool inside = true;
        for (std::uint32_t g : e)
            if (!S.contains(g)) { inside = false; break; }
        if (inside) return true;
    }
    return false;
}

bool reachable_via_edge(const Group& G, const GenSet& S, std::uint32_t x, std::uint32_t d,
                        const EnumLimits& limits) {
    return reachable_in_census(enumerate_edges(G, x, d, limits), S);
}

std::uint64_t distinct_product_tuples(const Group& G, std::uint32_t x, std::uint32_t d,
                                      ProductCase which, const EnumLimits& limits) {
    check_target(G, x);
    if (d < 2) throw ArgumentError("distinct_product_tuples: d must be >= 2");
    const bool x_inv = G.is_involution(x);
    if ((which == ProductCase::a || which == ProductCase::c) && x_inv)
        throw ArgumentError("cases (a) and (c) require x^2 != 1");
    if ((which == ProductCase::b || which == ProductCase::d) && !x_inv)
        throw ArgumentError("cases (b) and (d) require x^2 = 1");

    const std::uint32_t n = G.order();
    const bool x_anywhere = which == ProductCase::a || which == ProductCase::b;
    const bool x_sign_free = which == ProductCase::a || which == ProductCase::c;
    {
        std::uint64_t cost = sat_mul(x_anywhere ? factorial(d) : factorial(d - 1),
                                     1ull << (x_sign_free ? d : d - 1));
        for (std::uint32_t i = 0; i + 1 < d; ++i) cost = sat_mul(cost, n);
        if (cost > limits.max_tuples)
            throw CapacityError("distinct_product_tuples: estimated " + std::to_string(cost) +
                                " products exceeds cap " + std::to_string(limits.max_tuples));
    }

    // Positions of x: all of them in cases (a)/(b), only the last otherwise.
    std::vector<std::uint32_t> base(d);
    std::vector<std::uint32_t> members(d);
    std::vector<std::uint32_t> products;
    products.reserve(factorial(d) << d);

    std::uint64_t good = 0;
    std::vector<std::uint32_t> tuple(d - 1);
    auto evaluate_tuple = [&]() {
        products.clear();
        // iterate permutations of the d product slots
        std::vector<std::uint32_t> order(d);
        for (std::uint32_t i = 0; i < d; ++i) order[i] = i;
        do {
            members[0] = x;
            for (std::uint32_t i = 0; i + 1 < d; ++i) members[i + 1] = tuple[i];
            std::uint32_t x_pos = d;
            for (std::uint32_t i = 0; i < d; ++i) {
                base[i] = members[order[i]];
                if (order[i] == 0) x_pos = i;
            }
            if (!x_anywhere && x_pos + 1 != d) continue;
            for (std::uint32_t signs = 0; signs < (1u << d); ++signs) {
                if (!x_sign_free && (signs >> x_pos) & 1) continue;
                std::uint32_t prod = 0;
                for (std::uint32_t i = 0; i < d; ++i) {
                    const std::uint32_t h = base[i];
                    prod = G.op(prod, ((signs >> i) & 1) ? G.inv(h) : h);
                }
                products.push_back(prod);
            }
        } while (std::next_permutation(order.begin(), order.end()));
        std::sort(products.begin(), products.end());
        return std::adjacent_find(products.begin(), products.end()) == products.end();
    };

    // tuples of distinct elements of G \ {1, x}; depth counts filled slots
    auto run = [&](auto&& self, std::uint32_t depth) -> void {
        if (depth == d - 1) {
            if (evaluate_tuple()) ++good;
            return;
        }
        for (std::uint32_t g = 1; g < n; ++g) {
            if (g == x) continue;
            bool dup = false;
            for (std::uint32_t i = 0; i < depth; ++i)
                if (tuple[i] == g) { dup = true; break; }
            if (dup) continue;
            tuple[depth] = g;
            self(self, depth + 1);
        }
    };
    run(run, 0);
    return good;
}

} // namespace cgl
