#pragma once

#include <utility>

#include "tavis/model.hpp"
#include "tavis/observables.hpp"

namespace tavis {

using Window = std::pair<double, double>;

/// Collapse/revival landmarks of one purity / photon-number run.
struct FeatureReport {
    double r_ratio = 0.;
    double mean_photons = 0.;
    double t_revival_predicted = 0.;  // 2 pi sqrt(nbar)
    double t_revival_measured = 0.;
    double purity_collapse_min = 0.;
    double purity_revival_max = 0.;
    Window collapse_window{};
    Window revival_window{};
};

namespace features {

// Single-atom collapse time for a coherent field, sqrt(2)/g1.
inline const double kCollapseStart = 1.4142135623730951;
inline constexpr double kCollapseEndFraction = 0.25;
inline constexpr double kRevivalLowFraction = 0.8;
inline constexpr double kRevivalHighFraction = 1.2;
// Sliding sub-window used to measure the photon-number oscillation amplitude.
inline constexpr double kOscillationWidthFraction = 1. / 40.;
inline constexpr double kMinMeanPhotons = 4.;

}  // namespace features

/// Revival time of the photon-number oscillations, 2 pi sqrt(nbar) in g1 t.
double revival_time(double mean_photons);

/// Shortest tau_end a series needs for detect_features().
double required_span(double mean_photons);

/// Throws InsufficientSpan if the series misses either window and
/// DomainError if nbar < 4.
FeatureReport detect_features(const ObservableSeries& series, const ModelParams& params);

}  // namespace tavis
