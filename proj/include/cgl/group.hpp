#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgl/errors.hpp"

namespace cgl {

enum class Family { cyclic, elem2, dihedral, symmetric, affqr };

const char* family_name(Family f);

/// A finite group with dense element indices 0..order-1 and index 0 the
/// identity. Arithmetic is closed-form per family; no multiplication table
/// is stored, so groups of order up to ~10^7 are cheap to create.
///
/// Families:
///   cyclic:N      Z_N, index = residue
///   elem2:n       Z_2^n, index = bitmask, every element self-inverse
///   dihedral:m    order 2m; index i<m is r^i, index m+i is s*r^i
///   symmetric:n   S_n for n <= 8, index = Lehmer rank of the permutation
///   affqr:p       maps x -> ax+b over F_p with a a nonzero quadratic
///                 residue, p prime and p = 3 (mod 4); order p(p-1)/2
///
/// Composition convention for function families: (f*g)(x) = f(g(x)).
/// Immutable after construction; concurrent reads are safe.
class Group {
public:
    static Group make(Family family, std::uint64_t param);

    /// Parses the CLI grammar "cyclic:N", "elem2:n", "dihedral:m",
    /// "symmetric:n", "affqr:p".
    static Group parse(const std::string& spec);

    Family family() const { return family_; }
    std::uint64_t param() const { return param_; }
    std::uint32_t order() const { return order_; }
    bool abelian() const { return family_ == Family::cyclic || family_ == Family::elem2; }
    std::string spec_string() const;

    std::uint32_t op(std::uint32_t g, std::uint32_t h) const;
    std::uint32_t inv(std::uint32_t g) const;

    /// y^{-1} x y
    std::uint32_t conjugate(std::uint32_t x, std::uint32_t y) const {
        return op(op(inv(y), x), y);
    }

    bool is_involution(std::uint32_t g) const { return g != 0 && op(g, g) == 0; }

    // affqr accessors: f_{a,b}(x) = ax + b.
    std::uint32_t affqr_index(std::uint32_t a, std::uint32_t b) const;
    std::pair<std::uint32_t, std::uint32_t> affqr_coeffs(std::uint32_t g) const;

    // symmetric accessors: image arrays (sigma(0), ..., sigma(n-1)).
    std::vector<std::uint32_t> perm_of_index(std::uint32_t g) const;
    std::uint32_t index_of_perm(const std::vector<std::uint32_t>& images) const;

private:
    Group() = default;

    void check_index(std::uint32_t g) const {
        if (g >= order_) {
            throw ArgumentError("element index " + std::to_string(g) +
                                " out of range for group of order " + std::to_string(order_));
        }
    }

    std::uint32_t sym_op(std::uint32_t g, std::uint32_t h) const;
    std::uint32_t sym_inv(std::uint32_t g) const;

    Family family_ = Family::cyclic;
    std::uint64_t param_ = 1;
    std::uint32_t order_ = 1;

    // dihedral
    std::uint32_t half_ = 0;

    // symmetric
    std::uint32_t sym_n_ = 0;
    std::array<std::uint32_t, 9> fact_{};

    // affqr
    std::uint32_t prime_ = 0;
    std::vector<std::uint32_t> qr_value_;  // rank -> residue, ascending so rank(1) = 0
    std::vector<std::int32_t> qr_rank_;    // residue -> rank, -1 if not a QR
    std::vector<std::uint32_t> inv_mod_;   // residue -> inverse mod p
};

inline std::uint32_t Group::op(std::uint32_t g, std::uint32_t h) const {
    check_index(g);
    check_index(h);
    switch (family_) {
        case Family::cyclic: {
            std::uint32_t s = g + h;
            return s >= order_ ? s - order_ : s;
        }
        case Family::elem2:
            return g ^ h;
        case Family::dihedral: {
            // (s^j1 r^i1)(s^j2 r^i2) = s^(j1+j2) r^(i2 +- i1)
            const std::uint32_t m = half_;
            const bool j1 = g >= m, j2 = h >= m;
            const std::uint32_t i1 = j1 ? g - m : g;
            const std::uint32_t i2 = j2 ? h - m : h;
            std::uint32_t i = j2 ? (m - i1) % m + i2 : i1 + i2;
            if (i >= m) i -= m;
            return (j1 != j2) ? m + i : i;
        }
        case Family::symmetric:
            return sym_op(g, h);
        case Family::affqr: {
            const std::uint64_t p = prime_;
            const std::uint32_t a1 = qr_value_[g / prime_], b1 = g % prime_;
            const std::uint32_t a2 = qr_value_[h / prime_], b2 = h % prime_;
            const std::uint32_t a = static_cast<std::uint32_t>((std::uint64_t)a1 * a2 % p);
            const std::uint32_t b = static_cast<std::uint32_t>(((std::uint64_t)a1 * b2 + b1) % p);
            return static_cast<std::uint32_t>(qr_rank_[a]) * prime_ + b;
        }
    }
    return 0;
}

inline std::uint32_t Group::inv(std::uint32_t g) const {
    check_index(g);
    switch (family_) {
        case Family::cyclic:
            return g == 0 ? 0 : order_ - g;
        case Family::elem2:
            return g;
        case Family::dihedral: {
            const std::uint32_t m = half_;
            if (g >= m) return g;                    // reflections are involutions
            return g == 0 ? 0 : m - g;
        }
        case Family::symmetric:
            return sym_inv(g);
        case Family::affqr: {
            // (a,b)^{-1} = (a^{-1}, -a^{-1} b)
            const std::uint32_t a = qr_value_[g / prime_], b = g % prime_;
            const std::uint32_t ai = inv_mod_[a];
            const std::uint32_t nb = static_cast<std::uint32_t>((std::uint64_t)ai * b % prime_);
            const std::uint32_t bi = nb == 0 ? 0 : prime_ - nb;
            return static_cast<std::uint32_t>(qr_rank_[ai]) * prime_ + bi;
        }
    }
    return 0;
}

} // namespace cgl
