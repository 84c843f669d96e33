#include "tavis/app.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "tavis/closed_form.hpp"
#include "tavis/errors.hpp"
#include "tavis/oracle.hpp"

namespace tavis {

namespace fs = std::filesystem;

void RunConfig::merge_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "nbar") nbar = value.get<double>();
            else if (key == "ratio") ratio = value.get<double>();
            else if (key == "phase") phase = value.get<double>();
            else if (key == "tail_tol") tail_tol = value.get<double>();
            else if (key == "tau_start") tau_start = value.get<double>();
            else if (key == "tau_end") tau_end = value.get<double>();
            else if (key == "steps") steps = value.get<int>();
            else if (key == "backend") backend = parse_backend(value.get<std::string>());
            else if (key == "out") out = value.get<std::string>();
            else if (key == "sweep_ratios") sweep_ratios = value.get<std::vector<double>>();
            else if (key == "sweep_nbars") sweep_nbars = value.get<std::vector<double>>();
            else throw ConfigError("unknown configuration key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad configuration value: ") + e.what());
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open configuration file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse " + path + ": " + e.what());
    }
    RunConfig cfg;
    cfg.merge_json(j);
    return cfg;
}

double default_tau_end(double nbar) { return 1.25 * revival_time(std::max(nbar, features::kMinMeanPhotons)); }

ModelParams params_for(const RunConfig& config, double ratio, double nbar) {
    return make_params(ratio, nbar, config.phase, config.tail_tol);
}

std::vector<double> tau_grid_for(const RunConfig& config, double nbar) {
    const double end = config.tau_end.value_or(default_tau_end(nbar));
    const int steps = config.steps.value_or(kDefaultSteps);
    if (!(config.tau_start >= 0.)) throw ConfigError("tau-start must be >= 0");
    if (!(end > config.tau_start)) throw ConfigError("tau-end must exceed tau-start");
    if (steps < 2) throw ConfigError("steps must be >= 2");
    return linspace(config.tau_start, end, steps);
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const ObservableSeries& series) {
    os << "tau,purity_direct,purity_eq8,linear_entropy,von_neumann_entropy,field_purity,mean_n,p_ee,p_eg,p_ge,p_gg\n";
    for (const auto& p : series.points) {
        const double row[] = {p.tau,           p.purity_direct,      p.purity_eq8,   p.linear_entropy,
                              p.von_neumann_entropy, p.field_purity, p.mean_photon_number,
                              p.pops.p_ee,     p.pops.p_eg,          p.pops.p_ge,    p.pops.p_gg};
        for (std::size_t k = 0; k < std::size(row); ++k) os << (k ? "," : "") << format_number(row[k]);
        os << '\n';
    }
}

nlohmann::json to_json(const FeatureReport& rep) {
    return {
        {"r_ratio", rep.r_ratio},
        {"mean_photons", rep.mean_photons},
        {"t_revival_predicted", rep.t_revival_predicted},
        {"t_revival_measured", rep.t_revival_measured},
        {"purity_collapse_min", rep.purity_collapse_min},
        {"purity_revival_max", rep.purity_revival_max},
        {"collapse_window", {rep.collapse_window.first, rep.collapse_window.second}},
        {"revival_window", {rep.revival_window.first, rep.revival_window.second}},
    };
}

namespace {

void write_series_file(const fs::path& path, const ObservableSeries& series) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    write_csv(os, series);
    os.flush();
    if (!os) throw IoError("write failed for " + path.string());
}

std::string sweep_file_name(double ratio, double nbar) {
    return "series_R" + format_number(ratio) + "_nbar" + format_number(nbar) + ".csv";
}

}  // namespace

ObservableSeries run_simulate(const RunConfig& config) {
    const ModelParams params = params_for(config, config.ratio, config.nbar);
    const auto grid = tau_grid_for(config, config.nbar);
    ObservableSeries series = compute_series(params, grid, config.backend);
    write_series_file(config.out.value_or("tavis_series.csv"), series);
    return series;
}

std::vector<SweepPoint> run_sweep(const RunConfig& config) {
    if (config.sweep_ratios.empty() && config.sweep_nbars.empty())
        throw ConfigError("sweep needs --sweep-ratios and/or --sweep-nbars");
    const auto ratios = config.sweep_ratios.empty() ? std::vector<double>{config.ratio} : config.sweep_ratios;
    const auto nbars = config.sweep_nbars.empty() ? std::vector<double>{config.nbar} : config.sweep_nbars;
    const fs::path dir = config.out.value_or("tavis_sweep");

    std::vector<SweepPoint> points;
    nlohmann::json reports = nlohmann::json::array();
    for (double nbar : nbars) {
        for (double ratio : ratios) {
            const ModelParams params = params_for(config, ratio, nbar);
            const ObservableSeries series = compute_series(params, tau_grid_for(config, nbar), config.backend);
            SweepPoint pt;
            pt.ratio = ratio;
            pt.nbar = nbar;
            pt.csv_path = (dir / sweep_file_name(ratio, nbar)).string();
            try {
                pt.features = detect_features(series, params);
            } catch (const InsufficientSpan& e) {
                throw ConfigError(e.what());
            } catch (const DomainError& e) {
                throw ConfigError(e.what());
            }
            write_series_file(pt.csv_path, series);
            reports.push_back(to_json(pt.features));
            points.push_back(std::move(pt));
        }
    }

    const fs::path json_path = dir / "features.json";
    std::ofstream os(json_path);
    if (!os) throw IoError("cannot open " + json_path.string() + " for writing");
    os << reports.dump(2) << '\n';
    if (!os) throw IoError("write failed for " + json_path.string());
    return points;
}

VerifyReport run_verify(const RunConfig& config) {
    const auto& ratios = config.sweep_ratios.empty() ? kVerifyRatios : config.sweep_ratios;
    const double end = config.tau_end.value_or(kVerifyTauEnd);
    const int steps = config.steps.value_or(kVerifySteps);
    if (!(end > config.tau_start) || config.tau_start < 0.) throw ConfigError("invalid verification time range");
    const auto grid = linspace(config.tau_start, end, steps);

    VerifyReport rep;
    for (double r : ratios) {
        if (!(r >= 0.)) throw ConfigError("coupling ratios must be >= 0");
        for (int n = 0; n <= kVerifyMaxSector; ++n) {
            for (double tau : grid) {
                const auto a = amplitudes_closed(n, r, tau).as_array();
                const auto b = amplitudes_oracle(n, r, tau).as_array();
                for (std::size_t k = 0; k < 4; ++k) {
                    double d = std::abs(a[k] - b[k]);
                    if (!std::isfinite(d)) d = INFINITY;
                    if (d > rep.max_deviation) {
                        rep.max_deviation = d;
                        rep.worst_n = n;
                        rep.worst_ratio = r;
                        rep.worst_tau = tau;
                    }
                }
                ++rep.samples;
            }
        }
    }
    rep.passed = rep.max_deviation <= kVerifyTolerance;
    return rep;
}

}  // namespace tavis
