#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "plr/modp_regress.hpp"
#include "plr/zp.hpp"

namespace plr {

// Samples over Z/p^E with explicit working precision. `ids` carries the
// original index labels through the digit-peeling filtration.
struct PadicDataset {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    unsigned precision = 1;           // E
    std::vector<mpz_class> xs;        // N * D, row-major, entries in [0, p^E)
    std::vector<mpz_class> ys;        // N
    std::vector<std::size_t> ids;     // N

    std::size_t size() const noexcept { return ys.size(); }
};

// Last-digit estimate: integer representatives in [0, p) of a mod-p
// coefficient vector, length D + 1.
using DigitEstimate = std::vector<std::uint32_t>;

struct EmptyLocus : Error {
    explicit EmptyLocus(unsigned level)
        : Error("no index survived digit peeling at level " + std::to_string(level)),
          level(level) {}
    unsigned level;
};

// Reduction of every sample modulo p.
Dataset reduce_mod_p(const PadicDataset& data);

// Mod-p regression of the reduced samples, lifted to representatives in [0, p).
DigitEstimate last_digit_regression(const PadicDataset& data, const RegressConfig& config);

// Keeps the indices whose residual y - <theta, x> is divisible by p at the
// current precision, divides those residuals by p, and re-truncates x to one
// digit less. Throws EmptyLocus when nothing survives.
PadicDataset peel_level(const PadicDataset& data, const DigitEstimate& theta,
                        unsigned level = 0);

// Ids of `original` whose residual against the accumulated coefficient vector
// has valuation >= level + 1 at full precision. Agrees with the filter of
// peel_level after `level` peels; kept as the second route for cross-checks.
std::vector<std::size_t> noise_free_filter(const PadicDataset& original,
                                           const std::vector<mpz_class>& c_accum,
                                           unsigned level);

struct PadicFitResult {
    std::vector<mpz_class> coeffs;      // length D + 1, entries in [0, p^E)
    RunStats stats;                     // counters summed over all levels
    std::vector<RunStats> level_stats;  // one entry per digit level
};

// Digit-peeling estimation of the coefficient vector modulo p^E. Level e
// runs the mod-p regression with the seed stream derive(config.seed, e), so
// results at lower precision are prefixes of results at higher precision.
PadicFitResult trailing_digits_regression(const PadicDataset& data,
                                          const RegressConfig& config);

}  // namespace plr
