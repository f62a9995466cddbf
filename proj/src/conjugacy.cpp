#include "cgl/conjugacy.hpp"

#include <cmath>
#include <numeric>

namespace cgl {

namespace {

ConjugacyProfile singleton_classes(const Group& G, std::uint64_t involutions) {
    const std::uint32_t n = G.order();
    ConjugacyProfile p;
    p.class_size.assign(n, 1);
    p.class_id.resize(n);
    p.representatives.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        p.class_id[x] = x;
        p.representatives[x] = x;
    }
    p.class_count = n;
    p.involution_count = involutions;
    return p;
}

ConjugacyProfile dihedral_profile(const Group& G) {
    const std::uint32_t m = static_cast<std::uint32_t>(G.param());
    const std::uint32_t n = G.order();
    ConjugacyProfile p;
    p.class_size.assign(n, 0);
    p.class_id.assign(n, 0);

    auto start_class = [&](std::uint32_t rep) {
        p.representatives.push_back(rep);
        return p.class_count++;
    };

    p.class_size[0] = 1;
    p.class_id[0] = start_class(0);
    // rotation classes {r^k, r^{-k}}
    for (std::uint32_t k = 1; 2 * k < m || (2 * k == m); ++k) {
        if (2 * k == m) {
            p.class_size[k] = 1;
            p.class_id[k] = start_class(k);
            break;
        }
        const std::uint32_t id = start_class(k);
        p.class_size[k] = p.class_size[m - k] = 2;
        p.class_id[k] = p.class_id[m - k] = id;
    }
    // reflections: one class if m odd, split by rotation parity if m even
    if (m % 2 == 1) {
        const std::uint32_t id = start_class(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            p.class_size[m + i] = m;
            p.class_id[m + i] = id;
        }
    } else {
        const std::uint32_t even_id = start_class(m);
        const std::uint32_t odd_id = start_class(m + 1);
        for (std::uint32_t i = 0; i < m; ++i) {
            p.class_size[m + i] = m / 2;
            p.class_id[m + i] = (i % 2 == 0) ? even_id : odd_id;
        }
    }
    p.involution_count = (m % 2 == 0) ? m + 1 : m;
    return p;
}

ConjugacyProfile orbit_profile(const Group& G) {
    const std::uint32_t n = G.order();
    ConjugacyProfile p;
    p.class_size.assign(n, 0);
    p.class_id.assign(n, 0);
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (p.class_size[x] != 0) continue;
        const std::uint32_t id = p.class_count++;
        p.representatives.push_back(x);
        orbit.clear();
        for (std::uint32_t y = 0; y < n; ++y) {
            const std::uint32_t c = G.conjugate(x, y);
            if (stamp[c] != id + 1) {
                stamp[c] = id + 1;
                orbit.push_back(c);
            }
        }
        for (std::uint32_t c : orbit) {
            p.class_size[c] = static_cast<std::uint32_t>(orbit.size());
            p.class_id[c] = id;
        }
    }
    for (std::uint32_t x = 1; x < n; ++x)
        if (G.op(x, x) == 0) ++p.involution_count;
    return p;
}

} // namespace

ConjugacyProfile conjugacy_profile(const Group& G, const ProfileOptions& opt) {
    if (!opt.force_generic) {
        switch (G.family()) {
            case Family::cyclic:
                return singleton_classes(G, G.order() % 2 == 0 && G.order() >= 2 ? 1 : 0);
            case Family::elem2:
                return singleton_classes(G, G.order() - 1);
            case Family::dihedral:
                return dihedral_profile(G);
            default:
                break;
        }
    }
    if (G.order() > opt.max_orbit_order)
        throw CapacityError(
            "conjugacy_profile: order " + std::to_string(G.order()) + " exceeds orbit cap " +
            std::to_string(opt.max_orbit_order) +
            " (closed-form profiles exist for cyclic, elem2 and dihedral groups)");
    return orbit_profile(G);
}

std::pair<std::int64_t, std::int64_t> class_harmonic_sum(const ConjugacyProfile& profile) {
    // num/den accumulated exactly; every cl(x) divides |G| so the reduced
    // denominator stays bounded by |G| and int64 is ample for N <= 2*10^5.
    std::int64_t num = 0, den = 1;
    for (std::uint32_t c : profile.class_size) {
        num = num * c + den;
        den *= c;
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::uint64_t square_root_count(const Group& G, std::uint32_t x) {
    if (x >= G.order()) throw ArgumentError("square_root_count: index out of range");
    std::uint64_t count = 0;
    for (std::uint32_t y = 0; y < G.order(); ++y)
        if (G.op(y, y) == x) ++count;
    return count;
}

std::vector<std::uint32_t> square_root_histogram(const Group& G) {
    std::vector<std::uint32_t> counts(G.order(), 0);
    for (std::uint32_t y = 0; y < G.order(); ++y) ++counts[G.op(y, y)];
    return counts;
}

CentralizerCounts centralizer_count(const Group& G, std::uint32_t x) {
    if (x >= G.order()) throw ArgumentError("centralizer_count: index out of range");
    const std::uint32_t xi = G.inv(x);
    CentralizerCounts c{0, 0};
    for (std::uint32_t y = 0; y < G.order(); ++y) {
        const std::uint32_t conj = G.conjugate(x, y);
        if (conj == x) ++c.commuting;
        if (conj == xi) ++c.inverting;
    }
    return c;
}

AuditReport audit_conditions(const Group& G, std::uint32_t d, double epsilon,
                             const ProfileOptions& opt) {
    const double n = static_cast<double>(G.order());
    if (G.order() < 3)
        throw ArgumentError("audit_conditions: N <= e makes log log N undefined");
    if (d < 2) throw ArgumentError("audit_conditions: d must be >= 2");
    if (!(epsilon > 0)) throw ArgumentError("audit_conditions: epsilon must be > 0");

    const ConjugacyProfile profile = conjugacy_profile(G, opt);
    AuditReport r;
    r.M = std::exp(2.0 * std::sqrt(std::log(n) * std::log(std::log(n))));
    r.involutions = profile.involution_count;
    for (std::uint32_t x = 0; x < G.order(); ++x) {
        if (static_cast<double>(profile.class_size[x]) <= r.M) {
            ++r.small_class_elements;
            if (G.is_involution(x)) ++r.small_class_involutions;
        }
    }
    r.bound_a = std::pow(n, (2.0 + epsilon) / 4.0);
    r.bound_b = std::pow(n, 1.0 / d);
    r.bound_c = std::pow(n, 1.0 / (2.0 * d));
    r.pass_a = static_cast<double>(r.involutions) <= r.bound_a;
    r.pass_b = static_cast<double>(r.small_class_elements) <= r.bound_b;
    r.pass_c = static_cast<double>(r.small_class_involutions) <= r.bound_c;
    return r;
}

} // namespace cgl
