#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plr/echelon.hpp"
#include "plr/fp.hpp"
#include "plr/rng.hpp"

namespace plr {

// Samples (x_i, y_i) over F_p, densely indexed by 0..N-1.
struct Dataset {
    PrimeModulus mod;
    std::size_t dim = 0;              // D
    std::vector<FpScalar> xs;         // N * D, row-major
    std::vector<FpScalar> ys;         // N

    std::size_t size() const noexcept { return ys.size(); }
    std::span<const FpScalar> x(std::size_t i) const {
        return {xs.data() + i * dim, dim};
    }
};

struct RegressConfig {
    std::uint32_t rep = 3;
    std::optional<std::uint64_t> max_restarts;  // unset: heuristic from the threshold
    std::uint64_t seed = 0;
    std::uint64_t max_draws = 0;                // 0: defaults to 10^4 * N
};

struct RunStats {
    std::uint64_t c0 = 0;              // outer-loop restarts
    std::uint64_t c1 = 0;              // failed candidate trials past the threshold
    std::size_t rows_reached = 0;      // final row count
    std::uint64_t elapsed_trials = 0;  // total random index draws
};

struct RestartBudgetExhausted : Error {
    explicit RestartBudgetExhausted(RunStats s)
        : Error("restart budget exhausted"), stats(s) {}
    RunStats stats;
};

struct TrialBudgetExhausted : Error {
    explicit TrialBudgetExhausted(RunStats s)
        : Error("draw budget exhausted"), stats(s) {}
    RunStats stats;
};

// Largest k with p^k <= n.
std::size_t floor_log_p(std::uint32_t p, std::size_t n);

// max(1, D + 1 - floor(log_p N)): the candidate size below which the
// consensus test is skipped.
std::size_t threshold_n(std::size_t dim, const PrimeModulus& mod, std::size_t n_samples);

enum class Regime { Ok, Warning };

// Warns when D <= 2 * floor(log_p N): in that zone the consensus gate's
// expected pass condition fails and the regression is prone to never
// terminating.
Regime regime_check(const PrimeModulus& mod, std::size_t dim, std::size_t n_samples);

// The consensus criterion: with c = #{i : sample i lies on the hull of A's
// samples} and m = D + 2 - rows(A) the codimension of the hull, decides
// scale * c > N where scale = 2 at codimension 1 (a strict majority vote on
// the candidate hyperplane) and p^m otherwise. The power is clamped at N + 1,
// which leaves the predicate unchanged.
bool noise_free_matrix(const Dataset& data, const EchelonForm& form);

// Folds insertions of the indexed samples; false as soon as one insertion is
// inconsistent, otherwise the consensus criterion on the resulting form.
bool noise_free_locus(const Dataset& data, std::span<const std::size_t> indices);

// Random insertions until the form has n rows. Dependent draws are resampled;
// an inconsistent draw stops early (the returned row count is then < n).
// Every draw decrements *draws_left; throws TrialBudgetExhausted at zero.
std::size_t extend_phase1(const Dataset& data, EchelonForm& form,
                          std::vector<std::size_t>& picked, std::size_t n, Rng& rng,
                          std::uint64_t& draws_left, RunStats& stats);

// Guarded growth to D + 1 rows: each draw is tried on a copy of the form and
// kept only when it adds a row and the consensus criterion still holds.
// rep consecutive failures end the phase; each failure increments stats.c1.
std::size_t extend_phase2(const Dataset& data, EchelonForm& form,
                          std::vector<std::size_t>& picked, std::uint32_t rep, Rng& rng,
                          std::uint64_t& draws_left, RunStats& stats);

struct FitResult {
    FpVector coeffs;  // length D + 1
    RunStats stats;
};

// Randomized two-phase estimation of the coefficient vector. Deterministic
// in (data, config.seed). Throws RestartBudgetExhausted / TrialBudgetExhausted
// when the configured budgets run out.
FitResult linear_regression_mod_p(const Dataset& data, const RegressConfig& config);

}  // namespace plr
