#pragma once

#include <cstdint>
#include <vector>

#include "cgl/group.hpp"

namespace cgl {

/// Binomial estimate with a Wilson score interval.
struct Estimate {
    double p = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double phat = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t seed = 0;
};

inline constexpr double kZ95 = 1.959963984540054;

Estimate wilson_estimate(double p, std::uint64_t successes, std::uint64_t trials,
                         std::uint64_t seed, double z = kZ95);

struct McOptions {
    std::uint32_t threads = 0;        // 0 = hardware concurrency
    std::uint64_t stream_offset = 0;  // first per-trial stream id
};

/// Monte Carlo estimate of Pr(diameter <= d) in G(G,p); a disconnected
/// sample counts as diameter > d. Trial t draws its generating set from the
/// counter-based stream (seed, stream_offset + t), so results do not depend
/// on the thread count.
Estimate estimate_prob(const Group& G, std::uint32_t d, double p, std::uint64_t trials,
                       std::uint64_t seed, const McOptions& opt = {});

struct SweepRow {
    double p = 0;
    Estimate est;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    bool coupled = true;
    // Exhaustive coupled runs re-evaluate every grid point per trial and
    // count per-trial indicator decreases; always 0 (the event is monotone).
    std::uint64_t monotonicity_violations = 0;
};

struct SweepOptions {
    bool coupled = true;      // one uniform table per trial across the grid
    bool exhaustive = false;  // evaluate all grid points even after a success
    std::uint32_t threads = 0;
    std::uint64_t stream_offset = 0;
};

/// One estimate per grid point (grid must be sorted ascending). When
/// coupled, each trial reuses a single uniform table across all p, so its
/// success indicator is non-decreasing along the grid.
SweepTable sweep(const Group& G, std::uint32_t d, const std::vector<double>& p_grid,
                 std::uint64_t trials, std::uint64_t seed, const SweepOptions& opt = {});

struct TransitionResult {
    double p_star = 0;
    double target = 0;
    std::uint64_t trials_per_probe = 0;
    std::uint64_t seed = 0;
    std::uint32_t probes = 0;
    double bracket_lo = 0, bracket_hi = 0;
    Estimate confirmation;  // fresh streams, 4x budget, at p_star
};

struct TransitionOptions {
    double target = 0.5;
    double tol = 1e-4;
    double p_lo = 0.0;
    double p_hi = 1.0;
    std::uint32_t threads = 0;
};

/// Bisection for the p where Pr(diameter <= d) crosses the target. Every
/// probe reuses the same per-trial streams, so the empirical curve is an
/// exactly monotone step function of p and bisection is deterministic.
/// Throws when [p_lo, p_hi] does not bracket the target.
TransitionResult find_transition(const Group& G, std::uint32_t d, std::uint64_t trials,
                                 std::uint64_t seed, const TransitionOptions& opt = {});

} // namespace cgl
