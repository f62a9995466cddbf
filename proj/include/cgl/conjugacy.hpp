#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cgl/group.hpp"

namespace cgl {

/// Exact conjugacy data for a whole group. Classes are numbered in order of
/// their smallest element, which is also the stored representative.
struct ConjugacyProfile {
    std::vector<std::uint32_t> class_size;       // cl(x) per element
    std::vector<std::uint32_t> class_id;         // per element
    std::vector<std::uint32_t> representatives;  // per class, the minimal element
    std::uint32_t class_count = 0;               // cl(G)
    std::uint64_t involution_count = 0;          // #{x != 1 : x^2 = 1}
};

struct ProfileOptions {
    // Cap for the orbit-enumeration path. Cyclic, elem2 and dihedral groups
    // use closed-form profiles and ignore it.
    std::uint32_t max_orbit_order = 200000;
    // Force orbit enumeration even where a closed form exists (testing).
    bool force_generic = false;
};

ConjugacyProfile conjugacy_profile(const Group& G, const ProfileOptions& opt = {});

/// Sum_x 1/cl(x) as an exact reduced fraction. Equals cl(G)/1 for every
/// consistent profile, since each class contributes cl(x) terms of 1/cl(x).
std::pair<std::int64_t, std::int64_t> class_harmonic_sum(const ConjugacyProfile& profile);

/// Exact #{y : y^2 = x}.
std::uint64_t square_root_count(const Group& G, std::uint32_t x);

/// square_root_count for every x in one O(N) pass.
std::vector<std::uint32_t> square_root_histogram(const Group& G);

struct CentralizerCounts {
    std::uint64_t commuting;  // #{y : y^{-1} x y = x}, always N / cl(x)
    std::uint64_t inverting;  // #{y : y^{-1} x y = x^{-1}}, at most the above
};

CentralizerCounts centralizer_count(const Group& G, std::uint32_t x);

/// Counts checked by the special-group diameter criterion: few involutions
/// overall, few elements (and few involutions) whose conjugacy class is
/// smaller than the cutoff M = exp{2 sqrt(log N log log N)}.
struct AuditReport {
    double M = 0;
    std::uint64_t involutions = 0;
    std::uint64_t small_class_elements = 0;     // #{x : cl(x) <= M}
    std::uint64_t small_class_involutions = 0;  // #{x involution : cl(x) <= M}
    double bound_a = 0;                         // N^{(2+eps)/4}
    double bound_b = 0;                         // N^{1/d}
    double bound_c = 0;                         // N^{1/2d}
    bool pass_a = false, pass_b = false, pass_c = false;
};

/// Natural logarithms throughout. Requires N >= 3 (log log N must be
/// defined), d >= 2 and eps > 0.
AuditReport audit_conditions(const Group& G, std::uint32_t d, double epsilon,
                             const ProfileOptions& opt = {});

} // namespace cgl
