// Command-line interface: generate synthetic instances, fit coefficient
// vectors, run seeded experiment batteries, and verify results against
// stored ground truth.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters or
// malformed input, 3 restart budget exhausted, 4 empty locus while peeling.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plr/io.hpp"
#include "plr/kernels.hpp"
#include "plr/modp_regress.hpp"
#include "plr/padic_regress.hpp"
#include "plr/synthgen.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRestartBudget = 3;
constexpr int kExitEmptyLocus = 4;

void print_regime_warnings(std::uint32_t p, std::size_t dim, std::size_t n) {
    if (p <= 3) {
        std::cerr << "warning: p = " << p
                  << " narrows the consensus margin; false positives are more likely\n";
    }
    if (plr::regime_check(plr::PrimeModulus(p), dim, n) == plr::Regime::Warning) {
        std::cerr << "warning: D <= 2*floor(log_p N); the consensus gate is "
                     "unreliable and the regression may not terminate\n";
    }
}

struct CaseRow {
    std::size_t case_id = 0;
    std::uint64_t c0 = 0;
    std::uint64_t c1 = 0;
    bool success = false;
    std::int64_t elapsed_ms = 0;
};

struct FitOutput {
    std::vector<mpz_class> coeffs;
    plr::RunStats stats;
};

FitOutput fit_instance_file(const plr::InstanceFile& file, const plr::RegressConfig& config) {
    FitOutput out;
    if (file.precision <= 1) {
        const plr::FitResult fit = plr::linear_regression_mod_p(file.to_dataset(), config);
        out.coeffs.assign(fit.coeffs.begin(), fit.coeffs.end());
        out.stats = fit.stats;
    } else {
        const plr::PadicFitResult fit =
            plr::trailing_digits_regression(file.to_padic_dataset(), config);
        out.coeffs = fit.coeffs;
        out.stats = fit.stats;
    }
    return out;
}

json fit_result_json(const FitOutput& out) {
    json j;
    json c = json::array();
    for (const auto& v : out.coeffs) c.push_back(v.get_str(10));
    j["c"] = std::move(c);
    j["c0"] = out.stats.c0;
    j["c1"] = out.stats.c1;
    return j;
}

int cmd_gen(std::uint32_t p, std::size_t dim, std::size_t n, double r, unsigned precision,
            std::uint64_t seed, const std::string& out_path) {
    plr::InstanceFile file;
    if (precision <= 1) {
        file = plr::make_instance_file(plr::gen_modp_instance(p, dim, n, r, seed), seed);
    } else {
        file = plr::make_instance_file(plr::gen_padic_instance(p, dim, precision, n, r, seed),
                                       seed);
    }
    if (out_path.empty() || out_path == "-") {
        plr::write_instance(std::cout, file);
    } else {
        plr::write_instance(out_path, file);
    }
    return kExitOk;
}

int cmd_fit(const std::string& path, const plr::RegressConfig& config) {
    const plr::InstanceFile file = plr::read_instance(path);
    print_regime_warnings(file.p, file.dim, file.n_samples);
    try {
        const FitOutput out = fit_instance_file(file, config);
        std::cout << fit_result_json(out).dump() << '\n';
        return kExitOk;
    } catch (const plr::RestartBudgetExhausted& e) {
        std::cerr << "error: " << e.what() << " (c0=" << e.stats.c0 << ", c1=" << e.stats.c1
                  << ")\n";
        return kExitRestartBudget;
    } catch (const plr::EmptyLocus& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEmptyLocus;
    }
}

int cmd_experiment(std::uint32_t p, std::size_t dim, std::size_t n, double r,
                   unsigned precision, std::uint32_t rep, std::size_t cases,
                   std::uint64_t seed, std::optional<std::uint64_t> max_restarts,
                   const std::string& format) {
    print_regime_warnings(p, dim, n);
    std::vector<CaseRow> rows;
    rows.reserve(cases);
    for (std::size_t case_id = 0; case_id < cases; ++case_id) {
        const std::uint64_t gen_seed = plr::Rng::derive(seed, 2 * case_id);
        plr::RegressConfig config;
        config.rep = rep;
        config.seed = plr::Rng::derive(seed, 2 * case_id + 1);
        config.max_restarts = max_restarts;

        CaseRow row;
        row.case_id = case_id;
        const auto start = std::chrono::steady_clock::now();
        try {
            if (precision <= 1) {
                const plr::ModpInstance inst = plr::gen_modp_instance(p, dim, n, r, gen_seed);
                const plr::FitResult fit = plr::linear_regression_mod_p(inst.data, config);
                row.c0 = fit.stats.c0;
                row.c1 = fit.stats.c1;
                row.success = fit.coeffs == inst.truth;
            } else {
                const plr::PadicInstance inst =
                    plr::gen_padic_instance(p, dim, precision, n, r, gen_seed);
                const plr::PadicFitResult fit =
                    plr::trailing_digits_regression(inst.data, config);
                row.c0 = fit.stats.c0;
                row.c1 = fit.stats.c1;
                row.success = fit.coeffs == inst.truth;
            }
        } catch (const plr::RestartBudgetExhausted& e) {
            row.c0 = e.stats.c0;
            row.c1 = e.stats.c1;
            row.success = false;
        } catch (const plr::TrialBudgetExhausted& e) {
            row.c0 = e.stats.c0;
            row.c1 = e.stats.c1;
            row.success = false;
        } catch (const plr::EmptyLocus&) {
            row.success = false;
        }
        row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        rows.push_back(row);
    }

    if (format == "csv") {
        std::cout << "case,c0,c1,success,elapsed_ms\n";
        for (const auto& row : rows) {
            std::cout << row.case_id << ',' << row.c0 << ',' << row.c1 << ','
                      << (row.success ? "true" : "false") << ',' << row.elapsed_ms << '\n';
        }
    } else {
        json report;
        json params;
        params["p"] = p;
        params["D"] = dim;
        params["E"] = precision;
        params["N"] = n;
        params["r"] = r;
        params["rep"] = rep;
        params["cases"] = cases;
        params["seed"] = seed;
        if (max_restarts) params["max_restarts"] = *max_restarts;
        report["parameters"] = std::move(params);
        json jrows = json::array();
        for (const auto& row : rows) {
            json jr;
            jr["case"] = row.case_id;
            jr["c0"] = row.c0;
            jr["c1"] = row.c1;
            jr["success"] = row.success;
            jr["elapsed_ms"] = row.elapsed_ms;
            jrows.push_back(std::move(jr));
        }
        report["rows"] = std::move(jrows);
        std::cout << report.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& result_path) {
    const plr::InstanceFile file = plr::read_instance(instance_path);
    if (!file.truth) {
        std::cerr << "error: instance file carries no ground truth\n";
        return kExitUsage;
    }
    std::ifstream in(result_path);
    if (!in) {
        std::cerr << "error: cannot open " << result_path << '\n';
        return kExitUsage;
    }
    json result = json::parse(in, nullptr, false);
    if (result.is_discarded() || !result.contains("c")) {
        std::cerr << "error: malformed result file\n";
        return kExitUsage;
    }
    std::vector<mpz_class> fitted;
    for (const auto& j : result.at("c")) {
        fitted.emplace_back(j.get_ref<const std::string&>(), 10);
    }
    const std::vector<mpz_class>& truth = *file.truth;
    if (fitted.size() != truth.size()) {
        std::cerr << "mismatch: fitted vector has length " << fitted.size() << ", expected "
                  << truth.size() << '\n';
        return kExitMismatch;
    }
    const mpz_class q = plr::pow_ui(file.p, file.precision);
    for (std::size_t d = 0; d < truth.size(); ++d) {
        mpz_class got;
        mpz_mod(got.get_mpz_t(), fitted[d].get_mpz_t(), q.get_mpz_t());
        if (got != truth[d]) {
            std::cerr << "mismatch at coordinate " << d << ": expected " << truth[d].get_str(10)
                      << ", got " << got.get_str(10) << '\n';
            return kExitMismatch;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Consensus-based linear regression over F_p and Z/p^E"};
    app.require_subcommand(1);

    std::uint32_t p = 7;
    std::size_t dim = 1;
    std::size_t n_samples = 0;
    double r = 0.0;
    unsigned precision = 1;
    std::uint64_t seed = 0;
    std::uint32_t rep = 3;
    std::size_t cases = 10;
    std::optional<std::uint64_t> max_restarts;
    std::uint64_t max_draws = 0;
    std::string out_path;
    std::string instance_path;
    std::string result_path;
    std::string format = "csv";

    auto* gen = app.add_subcommand("gen", "Generate a synthetic instance (JSON lines)");
    gen->add_option("--p", p, "prime modulus")->required();
    gen->add_option("--D", dim, "dimension D")->required();
    gen->add_option("--N", n_samples, "number of samples")->required();
    gen->add_option("--r", r, "noise probability bound in [0,1)")->check(CLI::Range(0.0, 0.999999));
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--E", precision, "p-adic precision (default 1: mod-p instance)");
    gen->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* fit = app.add_subcommand("fit", "Fit a coefficient vector to an instance file");
    fit->add_option("instance", instance_path, "instance file")->required();
    fit->add_option("--rep", rep, "phase-2 retrial budget");
    fit->add_option("--max-restarts", max_restarts, "restart budget");
    fit->add_option("--max-draws", max_draws, "total random draw budget");
    fit->add_option("--seed", seed, "RNG seed");

    auto* experiment =
        app.add_subcommand("experiment", "Run a seeded battery of generate-and-fit cases");
    experiment->add_option("--p", p, "prime modulus")->required();
    experiment->add_option("--D", dim, "dimension D")->required();
    experiment->add_option("--N", n_samples, "number of samples")->required();
    experiment->add_option("--r", r, "noise probability bound")->check(CLI::Range(0.0, 0.999999));
    experiment->add_option("--E", precision, "p-adic precision (default 1)");
    experiment->add_option("--rep", rep, "phase-2 retrial budget");
    experiment->add_option("--cases", cases, "number of cases");
    experiment->add_option("--seed", seed, "master RNG seed");
    experiment->add_option("--max-restarts", max_restarts, "restart budget per case");
    experiment->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Check a fit result against stored truth");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("--result", result_path, "fit result JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(p, dim, n_samples, r, precision, seed, out_path);
        if (fit->parsed()) {
            plr::RegressConfig config;
            config.rep = rep;
            config.seed = seed;
            config.max_restarts = max_restarts;
            config.max_draws = max_draws;
            return cmd_fit(instance_path, config);
        }
        if (experiment->parsed()) {
            return cmd_experiment(p, dim, n_samples, r, precision, rep, cases, seed,
                                  max_restarts, format);
        }
        if (verify->parsed()) return cmd_verify(instance_path, result_path);
    } catch (const plr::NotPrime& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const plr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
