#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "plr/errors.hpp"

namespace plr {

mpz_class pow_ui(std::uint32_t base, unsigned exp);

// Truncated p-adic integer: a residue modulo p^E with explicit precision E.
// Arithmetic requires equal primes and equal precisions. E == 0 is the
// trivial ring (every value is 0).
class ZpTrunc {
public:
    ZpTrunc(mpz_class value, std::uint32_t p, unsigned precision);

    static ZpTrunc zero(std::uint32_t p, unsigned precision) {
        return ZpTrunc(0, p, precision);
    }

    const mpz_class& value() const noexcept { return value_; }
    std::uint32_t prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return prec_; }

    friend ZpTrunc operator+(const ZpTrunc& a, const ZpTrunc& b);
    friend ZpTrunc operator-(const ZpTrunc& a, const ZpTrunc& b);
    friend ZpTrunc operator*(const ZpTrunc& a, const ZpTrunc& b);

    // min(E, v_p(value)); the zero value has valuation E.
    unsigned valuation() const;

    // value / p at precision E - 1. Throws NotDivisible when p does not
    // divide the value.
    ZpTrunc exact_div_p() const;

    // Reduction to a lower precision.
    ZpTrunc truncate(unsigned new_precision) const;

    // Reduction modulo p.
    std::uint32_t mod_p() const;

    bool operator==(const ZpTrunc&) const = default;

private:
    mpz_class value_;
    std::uint32_t p_;
    unsigned prec_;
};

// <c, x> = sum_{d < D} c_d x_d + c_D at the common precision of the operands.
ZpTrunc zp_affine_eval(std::span<const ZpTrunc> c, std::span<const ZpTrunc> x);

}  // namespace plr
