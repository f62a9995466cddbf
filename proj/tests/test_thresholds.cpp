#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cgl/thresholds.hpp"
#include "cgl/errors.hpp"

using namespace cgl;

TEST_CASE("regime constants at d = 2") {
    CHECK(regime_constant(Regime::general_upper, 2, 0.0) == doctest::Approx(2.0));
    CHECK(regime_constant(Regime::general_lower, 2, 0.0) == doctest::Approx(0.25));
    CHECK(regime_constant(Regime::abelian_lower, 2, 0.0) == doctest::Approx(0.5));
    CHECK(regime_constant(Regime::z2n_lower, 2, 0.0) == doctest::Approx(2.0));
    CHECK(regime_constant(Regime::cyclic_upper, 2, 0.0) == doctest::Approx(0.5));
    CHECK(regime_constant(Regime::special_upper, 2, 0.0) == doctest::Approx(0.25));
    CHECK(regime_constant(Regime::general_upper, 3, 0.5) == doctest::Approx(9.0));
}

TEST_CASE("worked formula values") {
    CHECK(threshold_probability(Regime::cyclic_upper, 10000, 2, 0.0).raw ==
          doctest::Approx(0.02146).epsilon(1e-3));
    CHECK(threshold_probability(Regime::z2n_lower, 16384, 2, 0.0).raw ==
          doctest::Approx(0.034418).epsilon(1e-4));
    CHECK(threshold_probability(Regime::general_lower, 1000000, 3, 0.0).raw ==
          doctest::Approx(1.1998e-4).epsilon(1e-3));
}

TEST_CASE("regime ordering") {
    for (std::uint64_t N : {16ull, 64ull, 1024ull, 1000000ull}) {
        for (std::uint32_t d : {2u, 3u}) {
            const double z2n = threshold_probability(Regime::z2n_lower, N, d, 0.0).raw;
            const double cyc = threshold_probability(Regime::cyclic_upper, N, d, 0.0).raw;
            const double spec = threshold_probability(Regime::special_upper, N, d, 0.0).raw;
            const double gen_up = threshold_probability(Regime::general_upper, N, d, 0.0).raw;
            const double ab_lo = threshold_probability(Regime::abelian_lower, N, d, 0.0).raw;
            CHECK(z2n > cyc);
            CHECK(cyc > spec);
            CHECK(gen_up >= ab_lo);
        }
    }
}

TEST_CASE("clamping flags impossibly large formula values") {
    const auto v = threshold_probability(Regime::general_upper, 3, 5, 0.0);
    CHECK(v.clamped);
    CHECK(v.p == 1.0);
    CHECK(v.raw > 1.0);
    CHECK_FALSE(threshold_probability(Regime::cyclic_upper, 10000, 2, 0.0).clamped);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(threshold_probability(Regime::cyclic_upper, 2, 2, 0.0), ArgumentError);
    CHECK_THROWS_AS(threshold_probability(Regime::cyclic_upper, 100, 1, 0.0), ArgumentError);
    CHECK_THROWS_AS(threshold_probability(Regime::cyclic_upper, 100, 2, -0.5), ArgumentError);
}

TEST_CASE("admissible diameter growth") {
    CHECK(d_max(1000000, 0.5) == doctest::Approx(0.811).epsilon(1e-3));
    // N = 10^100: d = 2 becomes admissible
    const double big = std::pow(10.0, 100.0);
    const double ln = std::log(big);
    const double expected = 0.5 * std::sqrt(ln / (2.0 * std::log(ln)));
    CHECK(expected == doctest::Approx(2.30).epsilon(1e-2));
    CHECK(d_max(static_cast<std::uint64_t>(1) << 63, 0.5) > 0);
    CHECK_FALSE(admissible(1000000, 0.5, 2));

    // gamma -> 1 sends d_N to zero
    CHECK(d_max(1000000, 0.999) < 0.01);
    CHECK(d_max(1000000, 0.2) > d_max(1000000, 0.8));

    CHECK_THROWS_AS(d_max(15, 0.5), ArgumentError);
    CHECK_THROWS_AS(d_max(1000, 0.0), ArgumentError);
    CHECK_THROWS_AS(d_max(1000, 1.0), ArgumentError);
}
