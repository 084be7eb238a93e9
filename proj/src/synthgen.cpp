#include "plr/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace plr {

namespace {

FpVector random_nonzero_vector(const PrimeModulus& mod, std::size_t len, Rng& rng) {
    FpVector v(len);
    for (;;) {
        bool nonzero = false;
        for (auto& a : v) {
            a = static_cast<FpScalar>(rng.below(mod.p()));
            nonzero |= a != 0;
        }
        if (nonzero) return v;
    }
}

// round(r * N) distinct indices via a partial Fisher-Yates shuffle
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t swap_with = j + static_cast<std::size_t>(rng.below(n - j));
        std::swap(idx[j], idx[swap_with]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

// uniform residue modulo p^E, drawn digit by digit (ascending)
mpz_class random_zp(std::uint32_t p, unsigned precision, Rng& rng) {
    mpz_class v = 0;
    mpz_class q = 1;
    for (unsigned e = 0; e < precision; ++e) {
        v += q * static_cast<unsigned long>(rng.below(p));
        q *= p;
    }
    return v;
}

// uniform unit modulo p^precision (last digit nonzero); precision >= 1
mpz_class random_zp_unit(std::uint32_t p, unsigned precision, Rng& rng) {
    mpz_class v = 1 + static_cast<unsigned long>(rng.below(p - 1));
    mpz_class q = p;
    for (unsigned e = 1; e < precision; ++e) {
        v += q * static_cast<unsigned long>(rng.below(p));
        q *= p;
    }
    return v;
}

}  // namespace

ModpInstance gen_modp_instance(std::uint32_t p, std::size_t dim, std::size_t n_samples,
                               double r, std::uint64_t seed) {
    Rng rng(seed);
    ModpInstance inst{Dataset{PrimeModulus(p), dim, {}, {}}, {}, {}, r};
    Dataset& data = inst.data;
    const PrimeModulus& mod = data.mod;

    inst.truth = random_nonzero_vector(mod, dim + 1, rng);
    data.xs.resize(n_samples * dim);
    for (auto& a : data.xs) a = static_cast<FpScalar>(rng.below(p));

    const auto k = static_cast<std::size_t>(std::llround(r * static_cast<double>(n_samples)));
    inst.noise_indices = random_subset(n_samples, k, rng);

    data.ys.resize(n_samples);
    auto noisy = inst.noise_indices.begin();
    for (std::size_t i = 0; i < n_samples; ++i) {
        if (noisy != inst.noise_indices.end() && *noisy == i) {
            data.ys[i] = static_cast<FpScalar>(rng.below(p));
            ++noisy;
        } else {
            data.ys[i] = fp_affine_eval(mod, inst.truth, data.x(i));
        }
    }
    return inst;
}

PadicInstance gen_padic_instance(std::uint32_t p, std::size_t dim, unsigned precision,
                                 std::size_t n_samples, double r, std::uint64_t seed) {
    Rng rng(seed);
    PadicInstance inst;
    inst.r = r;
    PadicDataset& data = inst.data;
    data.p = p;
    data.dim = dim;
    data.precision = precision;
    const mpz_class q = pow_ui(p, precision);

    inst.truth.reserve(dim + 1);
    for (std::size_t d = 0; d <= dim; ++d) inst.truth.push_back(random_zp(p, precision, rng));

    data.xs.reserve(n_samples * dim);
    for (std::size_t i = 0; i < n_samples * dim; ++i)
        data.xs.push_back(random_zp(p, precision, rng));

    data.ys.resize(n_samples);
    data.ids.resize(n_samples);
    inst.corruption_levels.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        data.ids[i] = i;
        mpz_class clean = inst.truth[dim];
        for (std::size_t d = 0; d < dim; ++d) clean += inst.truth[d] * data.xs[i * dim + d];

        unsigned level = 0;
        while (level < precision && rng.unit_real() >= r) ++level;
        inst.corruption_levels[i] = level;
        if (level < precision) {
            // exact valuation `level`: clean + p^level * unit
            clean += pow_ui(p, level) * random_zp_unit(p, precision - level, rng);
        }
        mpz_mod(data.ys[i].get_mpz_t(), clean.get_mpz_t(), q.get_mpz_t());
    }
    return inst;
}

}  // namespace plr
