#pragma once

#include <cstdint>

namespace cgl {

/// The six threshold regimes. Each predicts
///   p = (constant * log N / N^{d-1})^{1/d}
/// with natural logarithms and a regime-specific constant:
///   general_upper  d!(1+eps)        diameter <= d for every group
///   general_lower  (1-eps)/2^d      diameter  > d for every group
///   abelian_lower  d!(1-eps)/2^d    diameter  > d for abelian groups
///   z2n_lower      d!(1-eps)        diameter  > d for Z_2^n
///   cyclic_upper   d!(1+eps)/2^d    diameter <= d for cyclic groups
///   special_upper  (1+eps)/2^d      diameter <= d for groups passing the
///                                   involution / small-class audit
enum class Regime {
    general_upper,
    general_lower,
    abelian_lower,
    z2n_lower,
    cyclic_upper,
    special_upper,
};

inline constexpr Regime kAllRegimes[] = {
    Regime::general_upper, Regime::general_lower, Regime::abelian_lower,
    Regime::z2n_lower,     Regime::cyclic_upper,  Regime::special_upper,
};

const char* regime_name(Regime r);

double regime_constant(Regime r, std::uint32_t d, double epsilon);

struct ThresholdValue {
    double p = 0;         // min(raw, 1)
    double raw = 0;       // formula value
    bool clamped = false; // raw > 1 signals N too small for the regime
};

/// Requires N >= 3, d >= 2, eps >= 0.
ThresholdValue threshold_probability(Regime r, std::uint64_t N, std::uint32_t d, double epsilon);

/// d_N = (1 - gamma) sqrt(log N / (2 log log N)). Requires N > e^e (so the
/// inner logarithm is positive) and gamma in (0, 1).
double d_max(std::uint64_t N, double gamma);

/// True iff 2 <= d <= d_N. Informational: the lab runs any d >= 2.
bool admissible(std::uint64_t N, double gamma, std::uint32_t d);

} // namespace cgl
