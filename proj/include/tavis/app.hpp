#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tavis/features.hpp"
#include "tavis/model.hpp"
#include "tavis/observables.hpp"

namespace tavis {

/// Settings shared by the simulate, sweep and verify subcommands. Unset
/// optionals take subcommand-specific defaults.
struct RunConfig {
    double nbar = 50.;
    double ratio = 0.5;
    double phase = 0.;
    double tail_tol = kDefaultTailTolerance;
    double tau_start = 0.;
    std::optional<double> tau_end;
    std::optional<int> steps;
    Backend backend = Backend::closed_form;
    std::optional<std::string> out;
    std::vector<double> sweep_ratios;
    std::vector<double> sweep_nbars;

    /// Overlays keys present in a JSON object; unknown keys are rejected.
    void merge_json(const nlohmann::json& j);
};

RunConfig load_config_file(const std::string& path);

inline constexpr int kDefaultSteps = 2000;
inline constexpr double kVerifyTolerance = 1e-8;
inline constexpr int kVerifyMaxSector = 40;
inline constexpr double kVerifyTauEnd = 50.;
inline constexpr int kVerifySteps = 50;
inline const std::vector<double> kVerifyRatios{0., 1e-6, 0.1, 0.5, 0.999999, 1., 2.};

/// Default end of the time axis: a quarter beyond the revival so that
/// detect_features() has its full window.
double default_tau_end(double nbar);

ModelParams params_for(const RunConfig& config, double ratio, double nbar);
std::vector<double> tau_grid_for(const RunConfig& config, double nbar);

void write_csv(std::ostream& os, const ObservableSeries& series);
std::string format_number(double v);
nlohmann::json to_json(const FeatureReport& rep);

/// Computes the default single-configuration series and writes it as CSV
/// to config.out (default "tavis_series.csv").
ObservableSeries run_simulate(const RunConfig& config);

struct SweepPoint {
    double ratio = 0.;
    double nbar = 0.;
    std::string csv_path;
    FeatureReport features;
};

/// Cartesian product of sweep_ratios x sweep_nbars (an empty list falls back
/// to the scalar value). Writes one CSV per point and features.json into the
/// directory config.out (default "tavis_sweep").
std::vector<SweepPoint> run_sweep(const RunConfig& config);

struct VerifyReport {
    double max_deviation = 0.;
    int worst_n = 0;
    double worst_ratio = 0.;
    double worst_tau = 0.;
    std::size_t samples = 0;
    bool passed = false;
};

/// Closed form against the eigendecomposition oracle over sectors 0..40,
/// the ratio list and the time grid.
VerifyReport run_verify(const RunConfig& config);

}  // namespace tavis
