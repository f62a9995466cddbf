#include "cgl/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "cgl/bfs.hpp"
#include "cgl/sampler.hpp"

namespace cgl {

namespace {

std::uint32_t resolve_threads(std::uint32_t requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Static partition of [0, total) into per-worker chunks; aggregation below
// is order-independent, so the split does not affect results.
template <typename Body>
void parallel_chunks(std::uint64_t total, std::uint32_t threads, Body&& body) {
    threads = std::max<std::uint32_t>(1, std::min<std::uint64_t>(threads, total ? total : 1));
    if (threads == 1) {
        body(0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::uint32_t w = 0; w < threads; ++w) {
        const std::uint64_t begin = total * w / threads;
        const std::uint64_t end = total * (w + 1) / threads;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : pool) t.join();
}

std::uint64_t count_successes(const Group& G, std::uint32_t d, double p, std::uint64_t trials,
                              std::uint64_t seed, std::uint64_t stream_offset,
                              std::uint32_t threads) {
    std::vector<std::uint64_t> partial(resolve_threads(threads), 0);
    std::atomic<std::uint32_t> next_slot{0};
    parallel_chunks(trials, resolve_threads(threads), [&](std::uint64_t begin, std::uint64_t end) {
        const std::uint32_t slot = next_slot.fetch_add(1);
        BfsScratch scratch;
        std::uint64_t hits = 0;
        for (std::uint64_t t = begin; t < end; ++t) {
            const UniformTable table = coupled_table(G, seed, stream_offset + t);
            const GenSet S = materialize(G, table, p);
            if (diameter_at_most(G, S, d, scratch)) ++hits;
        }
        partial[slot] += hits;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : partial) total += h;
    return total;
}

} // namespace

Estimate wilson_estimate(double p, std::uint64_t successes, std::uint64_t trials,
                         std::uint64_t seed, double z) {
    Estimate e;
    e.p = p;
    e.trials = trials;
    e.successes = successes;
    e.seed = seed;
    if (trials == 0) return e;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    e.phat = phat;
    e.ci_low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    e.ci_high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return e;
}

Estimate estimate_prob(const Group& G, std::uint32_t d, double p, std::uint64_t trials,
                       std::uint64_t seed, const McOptions& opt) {
    if (trials < 1) throw ArgumentError("estimate_prob: trials must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("estimate_prob: p must lie in [0, 1]");
    const std::uint64_t hits =
        count_successes(G, d, p, trials, seed, opt.stream_offset, opt.threads);
    return wilson_estimate(p, hits, trials, seed);
}

SweepTable sweep(const Group& G, std::uint32_t d, const std::vector<double>& p_grid,
                 std::uint64_t trials, std::uint64_t seed, const SweepOptions& opt) {
    if (p_grid.empty()) throw ArgumentError("sweep: empty p grid");
    if (!std::is_sorted(p_grid.begin(), p_grid.end()))
        throw ArgumentError("sweep: p grid must be sorted ascending");
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("sweep: grid value outside [0, 1]");
    if (trials < 1) throw ArgumentError("sweep: trials must be >= 1");

    const std::uint32_t threads = resolve_threads(opt.threads);
    const std::size_t points = p_grid.size();
    std::vector<std::vector<std::uint64_t>> partial(threads,
                                                    std::vector<std::uint64_t>(points, 0));
    std::vector<std::uint64_t> violations_partial(threads, 0);
    std::atomic<std::uint32_t> next_slot{0};

    parallel_chunks(trials, threads, [&](std::uint64_t begin, std::uint64_t end) {
        const std::uint32_t slot = next_slot.fetch_add(1);
        BfsScratch scratch;
        auto& hits = partial[slot];
        for (std::uint64_t t = begin; t < end; ++t) {
            if (opt.coupled) {
                const UniformTable table = coupled_table(G, seed, opt.stream_offset + t);
                bool succeeded = false;
                for (std::size_t i = 0; i < points; ++i) {
                    bool ok;
                    if (succeeded && !opt.exhaustive) {
                        ok = true;  // nested gensets: success is monotone in p
                    } else {
                        const GenSet S = materialize(G, table, p_grid[i]);
                        ok = diameter_at_most(G, S, d, scratch);
                    }
                    if (succeeded && !ok) ++violations_partial[slot];
                    succeeded = succeeded || ok;
                    if (ok) ++hits[i];
                }
            } else {
                // independent draws per grid point: stream varies with i
                for (std::size_t i = 0; i < points; ++i) {
                    const UniformTable table = coupled_table(
                        G, seed, opt.stream_offset + t * points + i);
                    const GenSet S = materialize(G, table, p_grid[i]);
                    if (diameter_at_most(G, S, d, scratch)) ++hits[i];
                }
            }
        }
    });

    SweepTable table;
    table.coupled = opt.coupled;
    for (std::size_t i = 0; i < points; ++i) {
        std::uint64_t hits = 0;
        for (std::uint32_t w = 0; w < threads; ++w) hits += partial[w][i];
        table.rows.push_back({p_grid[i], wilson_estimate(p_grid[i], hits, trials, seed)});
    }
    for (std::uint32_t w = 0; w < threads; ++w)
        table.monotonicity_violations += violations_partial[w];
    return table;
}

TransitionResult find_transition(const Group& G, std::uint32_t d, std::uint64_t trials,
                                 std::uint64_t seed, const TransitionOptions& opt) {
    if (!(opt.target > 0 && opt.target < 1))
        throw ArgumentError("find_transition: target must lie in (0, 1)");
    if (!(opt.tol > 0)) throw ArgumentError("find_transition: tol must be > 0");
    if (!(opt.p_lo >= 0 && opt.p_hi <= 1 && opt.p_lo < opt.p_hi))
        throw ArgumentError("find_transition: need 0 <= p_lo < p_hi <= 1");
    if (trials < 1) throw ArgumentError("find_transition: trials must be >= 1");

    auto probe = [&](double p) {
        return static_cast<double>(count_successes(G, d, p, trials, seed, 0, opt.threads)) /
               static_cast<double>(trials);
    };

    TransitionResult r;
    r.target = opt.target;
    r.trials_per_probe = trials;
    r.seed = seed;
    r.bracket_lo = opt.p_lo;
    r.bracket_hi = opt.p_hi;

    double lo = opt.p_lo, hi = opt.p_hi;
    const double phat_lo = probe(lo);
    const double phat_hi = probe(hi);
    r.probes = 2;
    if (phat_lo > opt.target || phat_hi < opt.target)
        throw ArgumentError(
            "find_transition: initial interval does not bracket the target (phat(" +
            std::to_string(lo) + ") = " + std::to_string(phat_lo) + ", phat(" +
            std::to_string(hi) + ") = " + std::to_string(phat_hi) +
            "); widen [p_lo, p_hi]");

    while (hi - lo > opt.tol) {
        const double mid = 0.5 * (lo + hi);
        ++r.probes;
        if (probe(mid) < opt.target) lo = mid;
        else hi = mid;
    }
    r.p_star = 0.5 * (lo + hi);

    const McOptions confirm{opt.threads, trials};
    r.confirmation = estimate_prob(G, d, r.p_star, 4 * trials, seed, confirm);
    return r;
}

} // namespace cgl
