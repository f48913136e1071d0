// Command-line driver: eigenvalue studies of the clamped plate problem on
// desk-scale domains, with margin reports for the universal inequalities.

#include <cstdint>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "platelab/operators.hpp"
#include "platelab/oracles.hpp"
#include "platelab/report.hpp"
#include "platelab/sequence_lemma.hpp"

namespace {

using namespace platelab;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool force_dense = false;
    bool force_shift_invert = false;
    double tol = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "study configuration file")->required();
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--seed", o.seed, "override the RNG seed")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_flag("--dense", o.force_dense, "force the dense solver");
    cmd->add_flag("--shift-invert", o.force_shift_invert, "force the shift-invert solver");
    cmd->add_option("--tol", o.tol, "solver tolerance override");
}

StudyConfig load_config(const CommonOpts& o) {
    StudyConfig cfg = StudyConfig::from_file(o.config_path);
    if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
    if (o.seed_set) cfg.seed = o.seed;
    if (o.force_dense) cfg.solver = "dense";
    if (o.force_shift_invert) cfg.solver = "shift-invert";
    if (o.tol > 0) cfg.tol = o.tol;
    return cfg;
}

int run_and_emit(StudyConfig cfg) {
    const StudyReport rep = run_study(cfg);
    emit_report(rep, cfg.out_dir);
    std::cout << std::setprecision(12);
    std::cout << "solver: " << rep.solver_method << ", eps_band: " << rep.eps_band << "\n";
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i)
        std::cout << "gamma_" << i + 1 << " = " << rep.eigenvalues[i] << "\n";
    std::cout << "constant C = " << rep.constant_c << "\n";
    for (const auto& ir : rep.inequality_reports)
        std::cout << ir.id << ": " << to_string(ir.verdict())
                  << " (min margin " << ir.min_margin() << ")\n";
    std::cout << "report written to " << cfg.out_dir << "\n";
    return study_exit_code(rep);
}

int cmd_oracle(const std::string& which, int K) {
    const OracleSpectrum s = which == "beam" ? beam_spectrum(K) : disk_spectrum(K);
    std::cout << std::setprecision(15);
    std::cout << "k,root,eigenvalue,residual\n";
    for (int k = 0; k < static_cast<int>(s.values.size()); ++k)
        std::cout << k + 1 << ',' << s.roots[k] << ',' << s.values[k] << ','
                  << s.residuals[k] << "\n";
    return 0;
}

int cmd_lemma21(int instances, int length, double spread, std::uint64_t seed) {
    int equality_cases = 0;
    double worst_slack = 0.0;
    for (int i = 0; i < instances; ++i) {
        const SequenceInstance inst = random_instance(seed + i, length, spread);
        const double bound = lemma_bound(inst.mu[0], inst.mu[1], inst.A, inst.B);
        worst_slack = std::min(worst_slack, bound - inst.S);
        const auto best = brute_force_max(inst.mu, inst.A, inst.B);
        if (std::abs(best.s_max - bound) <= 1e-12 * (1.0 + bound)) ++equality_cases;
    }
    std::cout << std::setprecision(12);
    std::cout << "instances = " << instances << "\n";
    std::cout << "worst slack (bound - S, negative means violation) = " << worst_slack << "\n";
    std::cout << "equality cases (optimum on two smallest values) = " << equality_cases << "\n";
    return worst_slack < -1e-12 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clamped plate eigenvalue laboratory"};
    app.require_subcommand(1);

    CommonOpts solve_o, func_o, verify_o, trial_o, conv_o;
    auto* solve_cmd = app.add_subcommand("solve", "solve the spectrum and emit a full report");
    add_common(solve_cmd, solve_o);
    auto* func_cmd = app.add_subcommand("functionals", "first-eigenfunction functionals and C");
    add_common(func_cmd, func_o);
    auto* verify_cmd = app.add_subcommand("verify", "inequality margin reports");
    add_common(verify_cmd, verify_o);
    auto* trial_cmd = app.add_subcommand("trialfn", "trial-function identity and margin checks");
    add_common(trial_cmd, trial_o);
    auto* conv_cmd = app.add_subcommand("converge", "grid convergence study");
    add_common(conv_cmd, conv_o);

    std::string oracle_which = "beam";
    int oracle_k = 10;
    auto* oracle_cmd = app.add_subcommand("oracle", "print an analytic reference spectrum");
    oracle_cmd->add_option("--which", oracle_which, "beam | disk")
        ->check(CLI::IsMember({"beam", "disk"}));
    oracle_cmd->add_option("--K", oracle_k, "number of eigenvalues");

    int lem_instances = 1000, lem_length = 12;
    double lem_spread = 1.0;
    std::uint64_t lem_seed = 20240815;
    auto* lem_cmd = app.add_subcommand("lemma21", "randomized two-point maximization suite");
    lem_cmd->add_option("--instances", lem_instances, "number of random instances");
    lem_cmd->add_option("--length", lem_length, "sequence length");
    lem_cmd->add_option("--spread", lem_spread, "value spread");
    lem_cmd->add_option("--seed", lem_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_which, oracle_k);
        if (lem_cmd->parsed()) return cmd_lemma21(lem_instances, lem_length, lem_spread, lem_seed);

        if (solve_cmd->parsed()) return run_and_emit(load_config(solve_o));
        if (conv_cmd->parsed()) {
            StudyConfig cfg = load_config(conv_o);
            if (cfg.divisions.size() < 3) {
                std::cerr << "converge: config must list at least 3 division counts\n";
                return 3;
            }
            return run_and_emit(std::move(cfg));
        }
        if (func_cmd->parsed()) {
            StudyConfig cfg = load_config(func_o);
            cfg.inequalities.clear();
            cfg.trial_g.clear();
            cfg.trial_a.clear();
            return run_and_emit(std::move(cfg));
        }
        if (verify_cmd->parsed()) {
            StudyConfig cfg = load_config(verify_o);
            cfg.trial_g.clear();
            cfg.trial_a.clear();
            return run_and_emit(std::move(cfg));
        }
        if (trial_cmd->parsed()) {
            StudyConfig cfg = load_config(trial_o);
            cfg.inequalities.clear();
            if (cfg.trial_g.empty()) cfg.trial_g = {"cos2", "sin3", "bump"};
            return run_and_emit(std::move(cfg));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
