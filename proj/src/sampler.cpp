#include "cgl/sampler.hpp"

#include <algorithm>

#include "cgl/rng.hpp"

namespace cgl {

namespace {

void build_closure(const Group& G, GenSet& s) {
    s.closure.clear();
    s.closure.reserve(2 * s.members.size());
    for (std::uint32_t g : s.members) {
        if (g == 0) continue;
        s.closure.push_back(g);
        s.closure.push_back(G.inv(g));
    }
    std::sort(s.closure.begin(), s.closure.end());
    s.closure.erase(std::unique(s.closure.begin(), s.closure.end()), s.closure.end());
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ArgumentError("probability p must lie in [0, 1], got " + std::to_string(p));
}

} // namespace

bool GenSet::contains(std::uint32_t g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

bool GenSet::closure_contains(std::uint32_t g) const {
    return std::binary_search(closure.begin(), closure.end(), g);
}

GenSet make_genset(const Group& G, std::vector<std::uint32_t> members) {
    for (std::uint32_t g : members)
        if (g >= G.order())
            throw ArgumentError("generator index " + std::to_string(g) +
                                " out of range for group of order " + std::to_string(G.order()));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    GenSet s;
    s.members = std::move(members);
    build_closure(G, s);
    return s;
}

UniformTable coupled_table(const Group& G, std::uint64_t seed, std::uint64_t stream) {
    UniformTable t;
    t.seed = seed;
    t.stream = stream;
    t.u.resize(G.order());
    for (std::uint32_t g = 0; g < G.order(); ++g)
        t.u[g] = rng::uniform01(seed, rng::Purpose::genset, stream, g);
    return t;
}

GenSet materialize(const Group& G, const UniformTable& table, double p) {
    check_probability(p);
    GenSet s;
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (table.u[g] < p) s.members.push_back(g);
    build_closure(G, s);
    return s;
}

GenSet sample_generators(const Group& G, double p, std::uint64_t seed) {
    check_probability(p);
    GenSet s;
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (rng::uniform01(seed, rng::Purpose::genset, 0, g) < p) s.members.push_back(g);
    build_closure(G, s);
    return s;
}

} // namespace cgl
