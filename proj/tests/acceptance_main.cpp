// Acceptance suite: one timed pass/fail line per criterion, nonzero exit on
// any failure. Budgets are wall-clock seconds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cgl/bfs.hpp"
#include "cgl/conjugacy.hpp"
#include "cgl/hypergraph.hpp"
#include "cgl/montecarlo.hpp"
#include "cgl/sampler.hpp"
#include "cgl/sandwich.hpp"
#include "cgl/thresholds.hpp"

using namespace cgl;

namespace {

int failures = 0;

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
};

void report(const Criterion& c, bool pass, double seconds, const std::string& detail) {
    const bool in_budget = seconds < c.budget_seconds;
    if (!pass || !in_budget) ++failures;
    std::printf("[%s] criterion %2d: %s (%s; %.2f s < %.0f s%s)\n",
                pass && in_budget ? "PASS" : "FAIL", c.id, c.label, detail.c_str(), seconds,
                c.budget_seconds, in_budget ? "" : " EXCEEDED");
    std::fflush(stdout);
}

template <typename Body>
void run(const Criterion& c, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(c, pass, seconds, detail);
}

std::vector<Group> instances_up_to(std::uint32_t max_order) {
    std::vector<Group> all;
    for (std::uint64_t n = 1; n <= max_order; ++n) all.push_back(Group::make(Family::cyclic, n));
    for (std::uint64_t n = 1; (1ull << n) <= max_order; ++n)
        all.push_back(Group::make(Family::elem2, n));
    for (std::uint64_t m = 1; 2 * m <= max_order; ++m)
        all.push_back(Group::make(Family::dihedral, m));
    for (std::uint64_t n = 1; n <= 8; ++n) {
        const Group g = Group::make(Family::symmetric, n);
        if (g.order() <= max_order) all.push_back(g);
    }
    for (std::uint64_t p = 3; p * (p - 1) / 2 <= max_order; ++p) {
        if (p % 4 != 3) continue;
        bool prime = p >= 2;
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (prime) all.push_back(Group::make(Family::affqr, p));
    }
    return all;
}

std::uint32_t worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

bool criterion_laws_and_conjugacy(std::string& detail) {
    // group laws on 10^4 random triples per family
    std::mt19937 rng(1);
    for (const char* spec :
         {"cyclic:1999", "elem2:10", "dihedral:977", "symmetric:6", "affqr:59"}) {
        const Group G = Group::parse(spec);
        std::uniform_int_distribution<std::uint32_t> pick(0, G.order() - 1);
        for (int i = 0; i < 10000; ++i) {
            const std::uint32_t g = pick(rng), h = pick(rng), k = pick(rng);
            if (G.op(G.op(g, h), k) != G.op(g, G.op(h, k))) return false;
            if (G.op(g, 0) != g || G.op(0, g) != g) return false;
            if (G.op(g, G.inv(g)) != 0) return false;
        }
    }

    const auto all = instances_up_to(2000);
    for (const Group& G : all) {
        const auto p = conjugacy_profile(G);
        const auto [num, den] = class_harmonic_sum(p);
        if (den != 1 || num != static_cast<std::int64_t>(p.class_count)) {
            detail = "harmonic sum mismatch for " + G.spec_string();
            return false;
        }
        for (std::uint32_t x = 0; x < G.order(); ++x)
            if (G.order() % p.class_size[x] != 0) {
                detail = "cl(x) does not divide N for " + G.spec_string();
                return false;
            }
        for (double M : {2.0, 5.0, 10.0, std::sqrt(static_cast<double>(G.order()))}) {
            std::uint64_t small = 0;
            for (std::uint32_t x = 0; x < G.order(); ++x)
                if (static_cast<double>(p.class_size[x]) <= M) ++small;
            if (static_cast<double>(p.class_count) >
                static_cast<double>(small) + static_cast<double>(G.order()) / M + 1e-9) {
                detail = "class-count bound failed for " + G.spec_string();
                return false;
            }
        }
    }
    detail = std::to_string(all.size()) + " instances";
    return true;
}

bool criterion_square_roots(std::string& detail) {
    const auto all = instances_up_to(512);
    std::uint64_t checked = 0;
    for (const Group& G : all) {
        const auto counts = square_root_histogram(G);
        const auto profile = conjugacy_profile(G);
        std::uint64_t total = 0;
        for (std::uint32_t x = 0; x < G.order(); ++x) {
            const std::uint64_t c = counts[x];
            total += c;
            if (c * c > static_cast<std::uint64_t>(G.order()) * profile.class_count) {
                detail = "square-root bound violated at " + G.spec_string() + ", x = " +
                         std::to_string(x);
                return false;
            }
            ++checked;
        }
        if (total != G.order()) {
            detail = "square counts do not sum to N for " + G.spec_string();
            return false;
        }
    }
    detail = std::to_string(all.size()) + " groups, " + std::to_string(checked) + " elements";
    return true;
}

bool criterion_census_bounds(std::string& detail) {
    std::vector<Group> zoo;
    for (std::uint64_t n = 5; n <= 16; ++n) zoo.push_back(Group::make(Family::cyclic, n));
    for (std::uint64_t n = 2; n <= 4; ++n) zoo.push_back(Group::make(Family::elem2, n));
    for (std::uint64_t m = 3; m <= 5; ++m) zoo.push_back(Group::make(Family::dihedral, m));
    zoo.push_back(Group::make(Family::affqr, 7));

    std::uint64_t violations = 0, checks = 0;
    for (const Group& G : zoo) {
        const std::uint64_t n = G.order();
        for (std::uint32_t d = 2; d <= 3; ++d) {
            std::uint64_t dfact = 1;
            for (std::uint32_t i = 2; i <= d; ++i) dfact *= i;
            std::uint64_t nd1 = 1;
            for (std::uint32_t i = 1; i < d; ++i) nd1 *= n;

            const auto censuses = census_all(G, d);
            const auto o1 = edge_sharing_stats(G, d);
            for (std::uint32_t k = 1; k <= d; ++k) {
                ++checks;
                if (o1.max_targets_per_size[k - 1] > o1.max_targets_bound[k - 1]) ++violations;
                ++checks;
                if (o1.total_incidences[k - 1] > o1.total_incidences_bound[k - 1]) ++violations;
            }
            for (std::uint32_t x = 1; x < n; ++x) {
                const std::uint64_t ed = censuses[x].e(d);
                ++checks;
                if (G.family() == Family::elem2) {
                    if (ed * dfact > nd1) ++violations;
                } else if (G.abelian()) {
                    if (ed * dfact > (1ull << d) * nd1) ++violations;
                } else {
                    if (ed > (1ull << d) * nd1) ++violations;
                }
                for (std::uint32_t i = 1; i < d; ++i) {
                    ++checks;
                    if (static_cast<double>(overlap_pairs(censuses[x], i)) >
                        overlap_bound(n, d, i))
                        ++violations;
                }
            }
        }
    }
    detail = std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
    return violations == 0;
}

bool criterion_o3_ratios(std::string& detail) {
    // cyclic at N = 101 and 199 against the 2^d N^{d-1}/d! target
    for (std::uint64_t n : {101, 199}) {
        const Group G = Group::make(Family::cyclic, n);
        const auto censuses = census_all(G, 2, {}, false);
        const double target = 0.9 * 4.0 * static_cast<double>(n) / 2.0;
        for (std::uint32_t x = 1; x < n; ++x) {
            if (G.is_involution(x)) continue;  // none in odd cyclic groups
            if (static_cast<double>(censuses[x].e(2)) < target) {
                detail = "cyclic:" + std::to_string(n) + " x = " + std::to_string(x);
                return false;
            }
        }
    }
    // every family near order 100 against N^{d-1}/d!
    for (const char* spec : {"cyclic:101", "elem2:7", "dihedral:50", "symmetric:5", "affqr:19"}) {
        const Group G = Group::parse(spec);
        const auto censuses = census_all(G, 2, {}, false);
        const double target = 0.9 * static_cast<double>(G.order()) / 2.0;
        for (std::uint32_t x = 1; x < G.order(); ++x) {
            if (static_cast<double>(censuses[x].e(2)) < target) {
                detail = std::string(spec) + " x = " + std::to_string(x);
                return false;
            }
        }
    }
    detail = "cyclic 101/199 vs O3a, five families near N = 100 vs O3";
    return true;
}

bool criterion_reachability(std::string& detail) {
    std::vector<Group> pool;
    for (std::uint64_t n = 2; n <= 16; ++n) pool.push_back(Group::make(Family::cyclic, n));
    for (std::uint64_t n = 1; n <= 4; ++n) pool.push_back(Group::make(Family::elem2, n));
    for (std::uint64_t m = 1; m <= 8; ++m) pool.push_back(Group::make(Family::dihedral, m));
    for (std::uint64_t n = 2; n <= 3; ++n) pool.push_back(Group::make(Family::symmetric, n));

    // censuses cached per (group, d)
    std::vector<std::vector<std::vector<EdgeCensus>>> cache(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        cache[i].resize(4);
        for (std::uint32_t d = 1; d <= 3; ++d) cache[i][d] = census_all(pool[i], d);
    }

    std::mt19937 rng(2);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int instance = 0; instance < 10000; ++instance) {
        const std::size_t gi = rng() % pool.size();
        const Group& G = pool[gi];
        const std::uint32_t d = 1 + rng() % 3;
        const GenSet S = sample_generators(G, unif(rng), rng());
        const std::uint32_t x = 1 + rng() % (G.order() - 1);
        const DistanceMap m = bfs_distances(G, S);
        const bool via_bfs =
            m.dist[x] != kUnreachable && m.dist[x] <= static_cast<std::int32_t>(d);
        if (reachable_in_census(cache[gi][d][x], S) != via_bfs) {
            detail = G.spec_string() + " x = " + std::to_string(x) + " d = " + std::to_string(d);
            return false;
        }
    }
    detail = "10000 instances, 0 violations";
    return true;
}

bool criterion_sandwich(std::string& detail) {
    const Group z5 = Group::make(Family::cyclic, 5);
    const SandwichResult worked = avoidance_sandwich(z5, 1, 2, 0.5);
    if (std::abs(worked.exact - 0.0625) > 1e-10 ||
        std::abs(worked.kleitman_lower - 243.0 / 16384.0) > 1e-10) {
        detail = "worked Z_5 values off";
        return false;
    }
    std::vector<Group> zoo;
    for (std::uint64_t n = 3; n <= 12; ++n) zoo.push_back(Group::make(Family::cyclic, n));
    for (std::uint64_t n = 2; n <= 3; ++n) zoo.push_back(Group::make(Family::elem2, n));
    for (std::uint64_t m = 2; m <= 6; ++m) zoo.push_back(Group::make(Family::dihedral, m));
    zoo.push_back(Group::make(Family::symmetric, 3));
    std::uint64_t checks = 0;
    for (const Group& G : zoo)
        for (std::uint32_t x = 1; x < G.order(); ++x)
            for (double p : {0.1, 0.3, 0.5, 0.9}) {
                const SandwichResult r = avoidance_sandwich(G, x, 2, p);
                ++checks;
                if (r.kleitman_lower > r.exact + 1e-12 ||
                    r.exact > std::min(1.0, r.janson_upper) + 1e-12) {
                    detail = G.spec_string() + " x = " + std::to_string(x) + " p = " +
                             std::to_string(p);
                    return false;
                }
            }
    detail = std::to_string(checks) + " instances sandwiched";
    return true;
}

bool criterion_mc_calibration(std::string& detail) {
    const Group z8 = Group::make(Family::cyclic, 8);
    double exact = 0;
    for (std::uint32_t mask = 0; mask < 128; ++mask) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t g = 1; g < 8; ++g)
            if (mask & (1u << (g - 1))) members.push_back(g);
        const auto diam = diameter(z8, make_genset(z8, members));
        if (diam && *diam <= 2) {
            const int pop = __builtin_popcount(mask);
            exact += std::pow(0.3, pop) * std::pow(0.7, 7 - pop);
        }
    }
    McOptions opt;
    opt.threads = worker_threads();
    const Estimate e = estimate_prob(z8, 2, 0.3, 100000, 20260411, opt);
    const Estimate wide = wilson_estimate(0.3, e.successes, e.trials, e.seed, 3.0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "exact %.7f, phat %.7f, 3-sigma [%.7f, %.7f]", exact, e.phat,
                  wide.ci_low, wide.ci_high);
    detail = buf;
    return wide.ci_low <= exact && exact <= wide.ci_high;
}

bool criterion_coupled_monotonicity(std::string& detail) {
    const Group G = Group::make(Family::cyclic, 1024);
    std::vector<double> grid;
    for (int i = 0; i < 16; ++i) grid.push_back(0.02 + 0.005333 * i);  // around 0.0582
    SweepOptions opt;
    opt.exhaustive = true;
    opt.threads = worker_threads();
    const SweepTable t = sweep(G, 2, grid, 200, 77, opt);
    detail = std::to_string(t.monotonicity_violations) + " violations over 200 seeds x 16 points";
    if (t.monotonicity_violations != 0) return false;
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        if (t.rows[i - 1].est.successes > t.rows[i].est.successes) return false;
    // the grid straddles the transition, so the curve crosses 1/2 once
    return t.rows.front().est.phat < 0.5 && t.rows.back().est.phat > 0.5;
}

bool criterion_threshold_directions(std::string& detail) {
    const Group G = Group::make(Family::cyclic, 4096);
    McOptions opt;
    opt.threads = worker_threads();
    const double p_upper = threshold_probability(Regime::general_upper, 4096, 2, 0.2).p;
    const double p_lower = threshold_probability(Regime::abelian_lower, 4096, 2, 0.2).p;
    const Estimate up = estimate_prob(G, 2, p_upper, 2000, 31, opt);
    const Estimate down = estimate_prob(G, 2, p_lower, 2000, 32, opt);
    char buf[160];
    std::snprintf(buf, sizeof buf, "phat(%.5f) = %.4f >= 0.95, phat(%.5f) = %.4f <= 0.05",
                  p_upper, up.phat, p_lower, down.phat);
    detail = buf;
    return up.phat >= 0.95 && down.phat <= 0.05;
}

bool criterion_constant_ordering(std::string& detail) {
    struct Lane {
        const char* spec;
        Regime regime;
        TransitionResult result;
        double predicted = 0;
    };
    std::vector<Lane> lanes = {{"elem2:14", Regime::z2n_lower, {}, 0},
                               {"cyclic:16384", Regime::cyclic_upper, {}, 0},
                               {"affqr:179", Regime::special_upper, {}, 0}};
    const std::uint64_t trials = 2000;
    std::vector<Group> groups;
    for (auto& lane : lanes) {
        const Group G = Group::parse(lane.spec);
        lane.predicted = threshold_probability(lane.regime, G.order(), 2, 0.0).raw;
        TransitionOptions opt;
        opt.tol = lane.predicted / 100.0;
        opt.p_lo = lane.predicted / 4.0;
        opt.p_hi = std::min(1.0, 4.0 * lane.predicted);
        opt.threads = worker_threads();
        lane.result = find_transition(G, 2, trials, 424242, opt);
        groups.push_back(G);
    }

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "p* = %.5f (elem2:14), %.5f (cyclic:16384), %.5f (affqr:179); ratios %.3f %.3f "
                  "%.3f",
                  lanes[0].result.p_star, lanes[1].result.p_star, lanes[2].result.p_star,
                  lanes[0].result.p_star / lanes[0].predicted,
                  lanes[1].result.p_star / lanes[1].predicted,
                  lanes[2].result.p_star / lanes[2].predicted);
    detail = buf;

    for (const Lane& lane : lanes) {
        const double ratio = lane.result.p_star / lane.predicted;
        if (ratio < 0.6 || ratio > 1.6) {
            detail += std::string("; ") + lane.spec + " outside [0.6, 1.6] x prediction";
            return false;
        }
    }
    if (!(lanes[0].result.p_star > lanes[1].result.p_star &&
          lanes[1].result.p_star > lanes[2].result.p_star)) {
        detail += "; ordering violated";
        return false;
    }

    // CI separation: at the smaller family's p*, the larger family must sit
    // below the target with its whole interval, and vice versa.
    McOptions fresh;
    fresh.threads = worker_threads();
    fresh.stream_offset = 5 * trials;
    for (int pair = 0; pair < 2; ++pair) {
        const Estimate larger_at_smaller = estimate_prob(
            groups[pair], 2, lanes[pair + 1].result.p_star, 4 * trials, 424242, fresh);
        const Estimate smaller_at_larger = estimate_prob(
            groups[pair + 1], 2, lanes[pair].result.p_star, 4 * trials, 424242, fresh);
        if (!(larger_at_smaller.ci_high < 0.5 && smaller_at_larger.ci_low > 0.5)) {
            detail += "; CI separation failed between " + std::string(lanes[pair].spec) +
                      " and " + lanes[pair + 1].spec;
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    std::printf("acceptance suite (%u worker threads)\n", worker_threads());
    run({1, "group laws and conjugacy identities, all orders <= 2000", 60},
        criterion_laws_and_conjugacy);
    run({2, "square-root count bound, all orders <= 512", 60}, criterion_square_roots);
    run({3, "sharing, count and overlap census bounds on small groups, d in {2,3}", 300},
        criterion_census_bounds);
    run({4, "walk-count lower-bound ratios at N near 100-200", 600}, criterion_o3_ratios);
    run({5, "BFS distance equals edge-cover reachability", 120}, criterion_reachability);
    run({6, "avoidance probability sandwiched by Kleitman and Janson", 60}, criterion_sandwich);
    run({7, "Monte Carlo calibration against the exact subset oracle", 60},
        criterion_mc_calibration);
    run({8, "coupled sweeps are exactly monotone per seed", 120},
        criterion_coupled_monotonicity);
    run({9, "upper and lower threshold directions at finite N", 300},
        criterion_threshold_directions);
    run({10, "family threshold constants order as predicted", 1800},
        criterion_constant_ordering);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
