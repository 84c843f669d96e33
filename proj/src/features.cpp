#include "tavis/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tavis/errors.hpp"

namespace tavis {

double revival_time(double mean_photons) { return 2. * std::numbers::pi * std::sqrt(mean_photons); }

double required_span(double mean_photons) {
    const double t = revival_time(mean_photons);
    return features::kRevivalHighFraction * t + 0.5 * features::kOscillationWidthFraction * t;
}

namespace {

bool inside(double t, const Window& w) { return t >= w.first && t <= w.second; }

}  // namespace

FeatureReport detect_features(const ObservableSeries& series, const ModelParams& params) {
    if (params.mean_photons < features::kMinMeanPhotons)
        throw DomainError("feature detection needs nbar >= 4");

    FeatureReport rep;
    rep.r_ratio = params.r_ratio;
    rep.mean_photons = params.mean_photons;
    const double t_rev = revival_time(params.mean_photons);
    rep.t_revival_predicted = t_rev;
    rep.collapse_window = {features::kCollapseStart, features::kCollapseEndFraction * t_rev};
    rep.revival_window = {features::kRevivalLowFraction * t_rev, features::kRevivalHighFraction * t_rev};

    const auto& pts = series.points;
    if (pts.size() < 2 || pts.front().tau > rep.collapse_window.first ||
        pts.back().tau < rep.revival_window.second)
        throw InsufficientSpan("series must cover [0, " + std::to_string(rep.revival_window.second) + "]");

    rep.purity_collapse_min = 1.;
    rep.purity_revival_max = 0.;
    for (const auto& p : pts) {
        if (inside(p.tau, rep.collapse_window)) rep.purity_collapse_min = std::min(rep.purity_collapse_min, p.purity_direct);
        if (inside(p.tau, rep.revival_window)) rep.purity_revival_max = std::max(rep.purity_revival_max, p.purity_direct);
    }

    // Peak-to-peak swing of <n> inside a sliding sub-window; the revival is
    // where the swing is largest. Two-pointer sweep over the sorted grid.
    const double half = 0.5 * features::kOscillationWidthFraction * t_rev;
    double best_swing = -1.;
    std::size_t lo = 0, hi = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double t = pts[k].tau;
        if (!inside(t, rep.revival_window)) continue;
        while (pts[lo].tau < t - half) ++lo;
        while (hi + 1 < pts.size() && pts[hi + 1].tau <= t + half) ++hi;
        double mn = pts[lo].mean_photon_number, mx = mn;
        for (std::size_t j = lo; j <= hi; ++j) {
            mn = std::min(mn, pts[j].mean_photon_number);
            mx = std::max(mx, pts[j].mean_photon_number);
        }
        if (mx - mn > best_swing) {
            best_swing = mx - mn;
            rep.t_revival_measured = t;
        }
    }
    return rep;
}

}  // namespace tavis
