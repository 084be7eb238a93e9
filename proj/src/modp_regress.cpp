#include "plr/modp_regress.hpp"

#include <cmath>

#include "plr/kernels.hpp"

namespace plr {

std::size_t floor_log_p(std::uint32_t p, std::size_t n) {
    std::size_t k = 0;
    std::uint64_t power = 1;
    while (power <= n / p) {  // overflow-free p^(k+1) <= n test
        power *= p;
        ++k;
    }
    return k;
}

std::size_t threshold_n(std::size_t dim, const PrimeModulus& mod, std::size_t n_samples) {
    const std::size_t k = floor_log_p(mod.p(), n_samples);
    return dim + 1 > k ? std::max<std::size_t>(1, dim + 1 - k) : 1;
}

Regime regime_check(const PrimeModulus& mod, std::size_t dim, std::size_t n_samples) {
    return dim <= 2 * floor_log_p(mod.p(), n_samples) ? Regime::Warning : Regime::Ok;
}

bool noise_free_matrix(const Dataset& data, const EchelonForm& form) {
    const EquationSystem es = form.equation_system();  // throws EmptyForm
    const std::size_t n = data.size();
    const std::size_t count = kernels::consensus_count(
        data.mod.p(), n, data.dim, data.xs.data(), data.ys.data(), es.coeffs.data(), es.count);
    // Threshold by codimension: a hull that is NOT contained in the target
    // hyperplane carries about N * p^-codim samples, so a candidate must beat
    // that expectation. At full rank (codim 1, W itself a hyperplane) the test
    // degenerates to a strict majority vote, which is what actually rejects
    // noisy candidates; intermediate levels mostly guard against degenerate
    // hulls. Scaling by p^(rows-1) instead would make the test vacuous as soon
    // as p^(rows-1) > N, because the picked samples alone give count >= rows.
    const std::size_t codim = es.count;  // D + 2 - rows
    std::uint64_t scale = 2;
    if (codim > 1) {
        scale = 1;
        for (std::size_t k = 0; k < codim; ++k) {
            scale *= data.mod.p();
            if (scale > n) {  // clamp: any larger power decides the same way
                scale = static_cast<std::uint64_t>(n) + 1;
                break;
            }
        }
    }
    return scale * count > n;
}

bool noise_free_locus(const Dataset& data, std::span<const std::size_t> indices) {
    EchelonForm form(data.mod, data.dim);
    for (const std::size_t i : indices) {
        if (form.insert(data.x(i), data.ys[i]) == InsertOutcome::Inconsistent) return false;
    }
    return noise_free_matrix(data, form);
}

namespace {

std::size_t draw_index(const Dataset& data, Rng& rng, std::uint64_t& draws_left,
                       RunStats& stats) {
    if (draws_left == 0) throw TrialBudgetExhausted(stats);
    --draws_left;
    ++stats.elapsed_trials;
    return static_cast<std::size_t>(rng.below(data.size()));
}

}  // namespace

std::size_t extend_phase1(const Dataset& data, EchelonForm& form,
                          std::vector<std::size_t>& picked, std::size_t n, Rng& rng,
                          std::uint64_t& draws_left, RunStats& stats) {
    while (form.rows() < n) {
        const std::size_t i = draw_index(data, rng, draws_left, stats);
        switch (form.insert(data.x(i), data.ys[i])) {
            case InsertOutcome::Inserted:
                picked.push_back(i);
                break;
            case InsertOutcome::Dependent:
                break;  // no row added; resample
            case InsertOutcome::Inconsistent:
                return form.rows();  // caller restarts
        }
    }
    return form.rows();
}

std::size_t extend_phase2(const Dataset& data, EchelonForm& form,
                          std::vector<std::size_t>& picked, std::uint32_t rep, Rng& rng,
                          std::uint64_t& draws_left, RunStats& stats) {
    std::uint32_t consecutive = 0;
    while (form.rows() < data.dim + 1) {
        const std::size_t i = draw_index(data, rng, draws_left, stats);
        EchelonForm trial = form;
        const bool grew = trial.insert(data.x(i), data.ys[i]) == InsertOutcome::Inserted;
        if (!grew || !noise_free_matrix(data, trial)) {
            ++stats.c1;
            if (++consecutive >= rep) return form.rows();
            continue;
        }
        form = std::move(trial);
        picked.push_back(i);
        consecutive = 0;
    }
    return form.rows();
}

namespace {

std::uint64_t default_max_restarts(std::size_t n) {
    // 10 * (1 - r)^-n with an assumed noise rate of 0.1
    const double est = 10.0 * std::pow(1.0 / 0.9, static_cast<double>(n));
    if (est > 1e15) return static_cast<std::uint64_t>(1e15);
    return static_cast<std::uint64_t>(std::ceil(est));
}

}  // namespace

FitResult linear_regression_mod_p(const Dataset& data, const RegressConfig& config) {
    const std::size_t n = threshold_n(data.dim, data.mod, data.size());
    const std::uint64_t max_restarts =
        config.max_restarts.value_or(default_max_restarts(n));
    std::uint64_t draws_left = config.max_draws != 0
                                   ? config.max_draws
                                   : 10000ULL * static_cast<std::uint64_t>(data.size());
    Rng rng(config.seed);
    RunStats stats;
    for (;;) {
        EchelonForm form(data.mod, data.dim);
        std::vector<std::size_t> picked;
        std::size_t rows = extend_phase1(data, form, picked, n, rng, draws_left, stats);
        if (rows >= n && noise_free_matrix(data, form)) {
            rows = extend_phase2(data, form, picked, config.rep, rng, draws_left, stats);
            if (rows == data.dim + 1) {
                stats.rows_reached = rows;
                return FitResult{form.coefficient_vector(), stats};
            }
        }
        stats.rows_reached = rows;
        if (++stats.c0 > max_restarts) throw RestartBudgetExhausted(stats);
    }
}

}  // namespace plr
