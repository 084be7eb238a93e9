#include "plr/padic_regress.hpp"

#include <algorithm>

namespace plr {

namespace {

// y - <c, x> reduced into [0, q) for integer coefficient entries
mpz_class residual(const PadicDataset& data, std::size_t i,
                   const std::vector<mpz_class>& c, const mpz_class& q) {
    mpz_class acc = data.ys[i] - c[data.dim];
    for (std::size_t d = 0; d < data.dim; ++d) {
        acc -= c[d] * data.xs[i * data.dim + d];
    }
    mpz_class out;
    mpz_mod(out.get_mpz_t(), acc.get_mpz_t(), q.get_mpz_t());
    return out;
}

}  // namespace

Dataset reduce_mod_p(const PadicDataset& data) {
    Dataset out{PrimeModulus(data.p), data.dim, {}, {}};
    out.xs.reserve(data.xs.size());
    out.ys.reserve(data.ys.size());
    for (const auto& v : data.xs)
        out.xs.push_back(static_cast<FpScalar>(mpz_fdiv_ui(v.get_mpz_t(), data.p)));
    for (const auto& v : data.ys)
        out.ys.push_back(static_cast<FpScalar>(mpz_fdiv_ui(v.get_mpz_t(), data.p)));
    return out;
}

DigitEstimate last_digit_regression(const PadicDataset& data, const RegressConfig& config) {
    const FitResult fit = linear_regression_mod_p(reduce_mod_p(data), config);
    return fit.coeffs;  // residues already are the representatives in [0, p)
}

PadicDataset peel_level(const PadicDataset& data, const DigitEstimate& theta,
                        unsigned level) {
    if (data.precision == 0)
        throw PrecisionMismatch("cannot peel a precision-0 dataset");
    if (theta.size() != data.dim + 1)
        throw LengthMismatch("digit estimate length does not match the dataset");
    const mpz_class q = pow_ui(data.p, data.precision);
    const mpz_class q_next = pow_ui(data.p, data.precision - 1);
    std::vector<mpz_class> theta_z(theta.begin(), theta.end());

    PadicDataset out;
    out.p = data.p;
    out.dim = data.dim;
    out.precision = data.precision - 1;
    for (std::size_t i = 0; i < data.size(); ++i) {
        mpz_class t = residual(data, i, theta_z, q);
        if (!mpz_divisible_ui_p(t.get_mpz_t(), data.p)) continue;
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), data.p);
        for (std::size_t d = 0; d < data.dim; ++d) {
            mpz_class xr;
            mpz_mod(xr.get_mpz_t(), data.xs[i * data.dim + d].get_mpz_t(),
                    q_next.get_mpz_t());
            out.xs.push_back(std::move(xr));
        }
        out.ys.push_back(std::move(t));
        out.ids.push_back(data.ids.empty() ? i : data.ids[i]);
    }
    if (out.ys.empty()) throw EmptyLocus(level);
    return out;
}

std::vector<std::size_t> noise_free_filter(const PadicDataset& original,
                                           const std::vector<mpz_class>& c_accum,
                                           unsigned level) {
    const mpz_class q = pow_ui(original.p, original.precision);
    const unsigned want = std::min(level + 1, original.precision);
    const mpz_class divisor = pow_ui(original.p, want);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const mpz_class t = residual(original, i, c_accum, q);
        if (mpz_divisible_p(t.get_mpz_t(), divisor.get_mpz_t()))
            out.push_back(original.ids.empty() ? i : original.ids[i]);
    }
    return out;
}

PadicFitResult trailing_digits_regression(const PadicDataset& data,
                                          const RegressConfig& config) {
    PadicFitResult result;
    result.coeffs.assign(data.dim + 1, mpz_class(0));
    mpz_class q = 1;
    PadicDataset current = data;
    for (unsigned e = 0; e < data.precision; ++e) {
        RegressConfig level_config = config;
        level_config.seed = Rng::derive(config.seed, e);
        const FitResult fit = linear_regression_mod_p(reduce_mod_p(current), level_config);
        result.level_stats.push_back(fit.stats);
        result.stats.c0 += fit.stats.c0;
        result.stats.c1 += fit.stats.c1;
        result.stats.elapsed_trials += fit.stats.elapsed_trials;
        result.stats.rows_reached = fit.stats.rows_reached;
        for (std::size_t d = 0; d <= data.dim; ++d) {
            result.coeffs[d] += q * fit.coeffs[d];
        }
        try {
            current = peel_level(current, fit.coeffs, e);
        } catch (const EmptyLocus&) {
            throw EmptyLocus(e);
        }
        q *= data.p;
    }
    return result;
}

}  // namespace plr
