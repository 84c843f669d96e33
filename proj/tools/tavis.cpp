// Command-line front end: simulate, sweep, verify.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tavis/app.hpp"
#include "tavis/errors.hpp"

namespace {

struct Flags {
    std::optional<double> nbar, ratio, phase, tau_start, tau_end, tail_tol;
    std::optional<int> steps;
    std::optional<std::string> backend, out, config;
    std::vector<double> sweep_ratios, sweep_nbars;
};

void add_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--nbar", f.nbar, "initial mean photon number");
    cmd->add_option("--ratio", f.ratio, "coupling ratio R = g2/g1");
    cmd->add_option("--phase", f.phase, "coherent-state phase (rad)");
    cmd->add_option("--tau-start", f.tau_start, "first scaled time g1 t");
    cmd->add_option("--tau-end", f.tau_end, "last scaled time g1 t");
    cmd->add_option("--steps", f.steps, "number of time points");
    cmd->add_option("--backend", f.backend, "closed_form or oracle");
    cmd->add_option("--out", f.out, "output CSV (simulate) or directory (sweep)");
    cmd->add_option("--config", f.config, "JSON configuration file; flags override it");
    cmd->add_option("--sweep-ratios", f.sweep_ratios, "coupling ratios to sweep")->delimiter(',');
    cmd->add_option("--sweep-nbars", f.sweep_nbars, "mean photon numbers to sweep")->delimiter(',');
    cmd->add_option("--tail-tol", f.tail_tol, "admissible Poisson tail mass above the truncation");
}

tavis::RunConfig resolve(const Flags& f) {
    tavis::RunConfig cfg = f.config ? tavis::load_config_file(*f.config) : tavis::RunConfig{};
    if (f.nbar) cfg.nbar = *f.nbar;
    if (f.ratio) cfg.ratio = *f.ratio;
    if (f.phase) cfg.phase = *f.phase;
    if (f.tau_start) cfg.tau_start = *f.tau_start;
    if (f.tau_end) cfg.tau_end = f.tau_end;
    if (f.steps) cfg.steps = f.steps;
    if (f.tail_tol) cfg.tail_tol = *f.tail_tol;
    if (f.backend) cfg.backend = tavis::parse_backend(*f.backend);
    if (f.out) cfg.out = f.out;
    if (!f.sweep_ratios.empty()) cfg.sweep_ratios = f.sweep_ratios;
    if (!f.sweep_nbars.empty()) cfg.sweep_nbars = f.sweep_nbars;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two nonidentical two-level atoms in a coherent cavity field"};
    app.require_subcommand(1);
    Flags flags;
    auto* simulate = app.add_subcommand("simulate", "write purity / photon-number time series as CSV");
    auto* sweep = app.add_subcommand("sweep", "one CSV per (R, nbar) point plus features.json");
    auto* verify = app.add_subcommand("verify", "check closed-form amplitudes against the oracle");
    for (auto* cmd : {simulate, sweep, verify}) add_flags(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const tavis::RunConfig cfg = resolve(flags);
        if (simulate->parsed()) {
            const auto series = tavis::run_simulate(cfg);
            std::cerr << "wrote " << series.points.size() << " rows to " << cfg.out.value_or("tavis_series.csv")
                      << '\n';
        } else if (sweep->parsed()) {
            for (const auto& pt : tavis::run_sweep(cfg)) {
                std::printf("R=%-8g nbar=%-6g collapse_min=%.4f revival_max=%.4f t_rev=%.3f  %s\n", pt.ratio,
                            pt.nbar, pt.features.purity_collapse_min, pt.features.purity_revival_max,
                            pt.features.t_revival_measured, pt.csv_path.c_str());
            }
        } else if (verify->parsed()) {
            const auto rep = tavis::run_verify(cfg);
            std::printf("samples=%zu max_deviation=%.3e tolerance=%.0e\n", rep.samples, rep.max_deviation,
                        tavis::kVerifyTolerance);
            if (!rep.passed) {
                std::printf("worst: n=%d R=%.17g tau=%.17g\n", rep.worst_n, rep.worst_ratio, rep.worst_tau);
                return 1;
            }
        }
    } catch (const tavis::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const tavis::TruncationTooTight& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
