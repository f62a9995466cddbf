#include "cgl/group.hpp"

#include <algorithm>
#include <numeric>

namespace cgl {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

constexpr std::uint64_t kMaxOrder = 0x7fffffffu;

std::uint64_t checked_order(std::uint64_t order, const std::string& what) {
    if (order == 0 || order > kMaxOrder)
        throw ArgumentError(what + ": group order " + std::to_string(order) +
                            " outside supported range [1, 2^31-1]");
    return order;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::cyclic: return "cyclic";
        case Family::elem2: return "elem2";
        case Family::dihedral: return "dihedral";
        case Family::symmetric: return "symmetric";
        case Family::affqr: return "affqr";
    }
    return "?";
}

Group Group::make(Family family, std::uint64_t param) {
    Group g;
    g.family_ = family;
    g.param_ = param;
    switch (family) {
        case Family::cyclic:
            g.order_ = static_cast<std::uint32_t>(checked_order(param, "cyclic"));
            break;
        case Family::elem2:
            if (param < 1 || param > 30)
                throw ArgumentError("elem2: n must be in [1, 30], got " + std::to_string(param));
            g.order_ = 1u << param;
            break;
        case Family::dihedral:
            if (param < 1)
                throw ArgumentError("dihedral: m must be >= 1");
            g.order_ = static_cast<std::uint32_t>(checked_order(2 * param, "dihedral"));
            g.half_ = static_cast<std::uint32_t>(param);
            break;
        case Family::symmetric: {
            if (param < 1 || param > 8)
                throw ArgumentError("symmetric: n must be in [1, 8], got " + std::to_string(param));
            g.sym_n_ = static_cast<std::uint32_t>(param);
            g.fact_[0] = 1;
            for (std::uint32_t i = 1; i <= 8; ++i) g.fact_[i] = g.fact_[i - 1] * i;
            g.order_ = g.fact_[param];
            break;
        }
        case Family::affqr: {
            if (!is_prime(param))
                throw ArgumentError("affqr: " + std::to_string(param) + " is not prime");
            if (param % 4 != 3)
                throw ArgumentError("affqr: prime must satisfy p = 3 (mod 4), got " +
                                    std::to_string(param) + " = " + std::to_string(param % 4) +
                                    " (mod 4)");
            const std::uint32_t p = static_cast<std::uint32_t>(param);
            g.prime_ = p;
            g.order_ = static_cast<std::uint32_t>(checked_order(param * (param - 1) / 2, "affqr"));
            g.qr_rank_.assign(p, -1);
            for (std::uint64_t a = 1; a < p; ++a) g.qr_rank_[a * a % p] = 0;
            for (std::uint32_t a = 1; a < p; ++a)
                if (g.qr_rank_[a] == 0) g.qr_value_.push_back(a);
            for (std::size_t r = 0; r < g.qr_value_.size(); ++r)
                g.qr_rank_[g.qr_value_[r]] = static_cast<std::int32_t>(r);
            g.inv_mod_.assign(p, 0);
            for (std::uint32_t a = 1; a < p; ++a) {
                // Fermat: a^(p-2)
                std::uint64_t base = a, e = p - 2, acc = 1;
                while (e) {
                    if (e & 1) acc = acc * base % p;
                    base = base * base % p;
                    e >>= 1;
                }
                g.inv_mod_[a] = static_cast<std::uint32_t>(acc);
            }
            break;
        }
    }
    return g;
}

Group Group::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
        throw ArgumentError("family spec must be 'family:param', got '" + spec + "'");
    const std::string name = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    std::uint64_t param = 0;
    try {
        std::size_t used = 0;
        param = std::stoull(rest, &used, 10);
        if (used != rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ArgumentError("family spec '" + spec + "': parameter '" + rest +
                            "' is not a non-negative integer");
    }
    for (Family f : {Family::cyclic, Family::elem2, Family::dihedral,
                     Family::symmetric, Family::affqr})
        if (name == family_name(f)) return make(f, param);
    throw ArgumentError("unknown family '" + name +
                        "' (expected cyclic, elem2, dihedral, symmetric, or affqr)");
}

std::string Group::spec_string() const {
    return std::string(family_name(family_)) + ":" + std::to_string(param_);
}

std::uint32_t Group::affqr_index(std::uint32_t a, std::uint32_t b) const {
    if (family_ != Family::affqr) throw ArgumentError("affqr_index on non-affqr group");
    if (a == 0 || a >= prime_ || b >= prime_ || qr_rank_[a] < 0)
        throw ArgumentError("affqr_index: (a, b) = (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") is not a group element");
    return static_cast<std::uint32_t>(qr_rank_[a]) * prime_ + b;
}

std::pair<std::uint32_t, std::uint32_t> Group::affqr_coeffs(std::uint32_t g) const {
    if (family_ != Family::affqr) throw ArgumentError("affqr_coeffs on non-affqr group");
    check_index(g);
    return {qr_value_[g / prime_], g % prime_};
}

std::vector<std::uint32_t> Group::perm_of_index(std::uint32_t g) const {
    if (family_ != Family::symmetric) throw ArgumentError("perm_of_index on non-symmetric group");
    check_index(g);
    const std::uint32_t n = sym_n_;
    std::uint32_t pool[8];
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::uint32_t> images(n);
    std::uint32_t rem = g;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t f = fact_[n - 1 - i];
        const std::uint32_t digit = rem / f;
        rem %= f;
        images[i] = pool[digit];
        for (std::uint32_t j = digit; j + 1 < n - i; ++j) pool[j] = pool[j + 1];
    }
    return images;
}

std::uint32_t Group::index_of_perm(const std::vector<std::uint32_t>& images) const {
    if (family_ != Family::symmetric) throw ArgumentError("index_of_perm on non-symmetric group");
    const std::uint32_t n = sym_n_;
    if (images.size() != n) throw ArgumentError("index_of_perm: wrong permutation length");
    std::uint32_t rank = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t smaller = 0;
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (images[j] < images[i]) ++smaller;
        rank += smaller * fact_[n - 1 - i];
    }
    return rank;
}

std::uint32_t Group::sym_op(std::uint32_t g, std::uint32_t h) const {
    const std::uint32_t n = sym_n_;
    std::uint32_t a[8], b[8], c[8], pool[8];
    // decode both Lehmer ranks
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    std::uint32_t rem = g;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t f = fact_[n - 1 - i];
        const std::uint32_t digit = rem / f;
        rem %= f;
        a[i] = pool[digit];
        for (std::uint32_t j = digit; j + 1 < n - i; ++j) pool[j] = pool[j + 1];
    }
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    rem = h;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t f = fact_[n - 1 - i];
        const std::uint32_t digit = rem / f;
        rem %= f;
        b[i] = pool[digit];
        for (std::uint32_t j = digit; j + 1 < n - i; ++j) pool[j] = pool[j + 1];
    }
    // (g*h)(x) = g(h(x))
    for (std::uint32_t i = 0; i < n; ++i) c[i] = a[b[i]];
    std::uint32_t rank = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t smaller = 0;
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (c[j] < c[i]) ++smaller;
        rank += smaller * fact_[n - 1 - i];
    }
    return rank;
}

std::uint32_t Group::sym_inv(std::uint32_t g) const {
    const std::uint32_t n = sym_n_;
    std::uint32_t a[8], c[8], pool[8];
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    std::uint32_t rem = g;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t f = fact_[n - 1 - i];
        const std::uint32_t digit = rem / f;
        rem %= f;
        a[i] = pool[digit];
        for (std::uint32_t j = digit; j + 1 < n - i; ++j) pool[j] = pool[j + 1];
    }
    for (std::uint32_t i = 0; i < n; ++i) c[a[i]] = i;
    std::uint32_t rank = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t smaller = 0;
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (c[j] < c[i]) ++smaller;
        rank += smaller * fact_[n - 1 - i];
    }
    return rank;
}

} // namespace cgl
