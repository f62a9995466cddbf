#include "cgl/thresholds.hpp"

#include <cmath>
#include <string>

#include "cgl/errors.hpp"

namespace cgl {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::general_upper: return "general_upper";
        case Regime::general_lower: return "general_lower";
        case Regime::abelian_lower: return "abelian_lower";
        case Regime::z2n_lower: return "z2n_lower";
        case Regime::cyclic_upper: return "cyclic_upper";
        case Regime::special_upper: return "special_upper";
    }
    return "?";
}

double regime_constant(Regime r, std::uint32_t d, double epsilon) {
    double dfact = 1;
    for (std::uint32_t i = 2; i <= d; ++i) dfact *= i;
    const double pow2 = std::ldexp(1.0, static_cast<int>(d));
    switch (r) {
        case Regime::general_upper: return dfact * (1.0 + epsilon);
        case Regime::general_lower: return (1.0 - epsilon) / pow2;
        case Regime::abelian_lower: return dfact * (1.0 - epsilon) / pow2;
        case Regime::z2n_lower: return dfact * (1.0 - epsilon);
        case Regime::cyclic_upper: return dfact * (1.0 + epsilon) / pow2;
        case Regime::special_upper: return (1.0 + epsilon) / pow2;
    }
    return 0;
}

ThresholdValue threshold_probability(Regime r, std::uint64_t N, std::uint32_t d, double epsilon) {
    if (N < 3) throw ArgumentError("threshold_probability: N must be >= 3");
    if (d < 2) throw ArgumentError("threshold_probability: d must be >= 2");
    if (epsilon < 0) throw ArgumentError("threshold_probability: epsilon must be >= 0");
    const double n = static_cast<double>(N);
    const double inside =
        regime_constant(r, d, epsilon) * std::log(n) / std::pow(n, static_cast<double>(d) - 1.0);
    ThresholdValue v;
    v.raw = std::pow(inside, 1.0 / d);
    v.clamped = v.raw > 1.0;
    v.p = v.clamped ? 1.0 : v.raw;
    return v;
}

double d_max(std::uint64_t N, double gamma) {
    const double ee = std::exp(std::exp(1.0));
    if (static_cast<double>(N) <= ee)
        throw ArgumentError("d_max: N must exceed e^e (about 15.15)");
    if (!(gamma > 0 && gamma < 1))
        throw ArgumentError("d_max: gamma must lie in (0, 1)");
    const double ln = std::log(static_cast<double>(N));
    return (1.0 - gamma) * std::sqrt(ln / (2.0 * std::log(ln)));
}

bool admissible(std::uint64_t N, double gamma, std::uint32_t d) {
    return d >= 2 && static_cast<double>(d) <= d_max(N, gamma);
}

} // namespace cgl
