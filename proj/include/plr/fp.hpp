#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plr/errors.hpp"

namespace plr {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// The prime p together with the arithmetic of F_p. Residues are kept
// canonical in [0, p) after every operation. p < 2^31 so that products of
// residues fit in 64 bits.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t reduce(std::uint64_t v) const noexcept {
        return static_cast<std::uint32_t>(v % p_);
    }

    // Extended Euclid. Throws ZeroInversion when a == 0.
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeModulus&) const = default;

private:
    std::uint32_t p_;
};

using FpScalar = std::uint32_t;              // canonical residue in [0, p)
using FpVector = std::vector<std::uint32_t>;

// <c, x> = sum_{d < D} c_d x_d + c_D for c of length D+1 and x of length D.
FpScalar fp_affine_eval(const PrimeModulus& m, std::span<const FpScalar> c,
                        std::span<const FpScalar> x);

}  // namespace plr
