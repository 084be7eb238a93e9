#pragma once

#include <cstdint>
#include <vector>

#include "plr/modp_regress.hpp"
#include "plr/padic_regress.hpp"

namespace plr {

// Mod-p instance with ground truth: y_i = <truth, x_i> outside
// noise_indices, noisy y drawn uniformly (it may coincide with the clean
// value). Exactly round(r * N) indices are corrupted.
struct ModpInstance {
    Dataset data;
    FpVector truth;                          // length D + 1, nonzero
    std::vector<std::size_t> noise_indices;  // sorted
    double r = 0.0;
};

ModpInstance gen_modp_instance(std::uint32_t p, std::size_t dim, std::size_t n_samples,
                               double r, std::uint64_t seed);

// p-adic instance with per-index corruption levels: an index corrupted at
// level e has a residual of exact valuation e (clean indices carry level E).
// Corruption follows a survival process with per-level probability r, so
// #(I_e \ I_{e+1}) / #I_e ~ r for every e < E.
struct PadicInstance {
    PadicDataset data;
    std::vector<mpz_class> truth;            // length D + 1, entries in [0, p^E)
    std::vector<unsigned> corruption_levels; // per index, E means clean
    double r = 0.0;
};

PadicInstance gen_padic_instance(std::uint32_t p, std::size_t dim, unsigned precision,
                                 std::size_t n_samples, double r, std::uint64_t seed);

}  // namespace plr
