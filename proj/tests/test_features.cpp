#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tavis/errors.hpp"
#include "tavis/features.hpp"

using namespace tavis;

TEST_SUITE("features") {

TEST_CASE("windows follow the revival time") {
    const auto p = make_params(0.5, 16.);
    const auto series = compute_series(p, linspace(0., required_span(16.) + 0.5, 600));
    const auto rep = detect_features(series, p);
    const double t_rev = 2. * std::numbers::pi * 4.;
    CHECK(rep.t_revival_predicted == doctest::Approx(t_rev));
    CHECK(rep.collapse_window.first == doctest::Approx(std::sqrt(2.)));
    CHECK(rep.collapse_window.second == doctest::Approx(0.25 * t_rev));
    CHECK(rep.revival_window.first == doctest::Approx(0.8 * t_rev));
    CHECK(rep.revival_window.second == doctest::Approx(1.2 * t_rev));
    CHECK(rep.purity_collapse_min <= rep.purity_revival_max);
    CHECK(rep.purity_collapse_min >= 0.25);
    CHECK(rep.purity_revival_max <= 1.);
    CHECK(rep.t_revival_measured >= rep.revival_window.first);
    CHECK(rep.t_revival_measured <= rep.revival_window.second);
}

TEST_CASE("synthetic series: extrema and oscillation peak") {
    // Purity dips to 0.3 at tau = 3 and peaks at 0.9 at tau = 1.05 t_rev;
    // <n> oscillates with an envelope centred on 0.95 t_rev.
    ModelParams p = make_params(0.5, 25.);
    const double t_rev = revival_time(25.);
    ObservableSeries s;
    for (double t : linspace(0., 1.3 * t_rev, 4001)) {
        ObservablePoint pt;
        pt.tau = t;
        pt.purity_direct = 0.6 - 0.3 * std::exp(-std::pow(t - 3., 2)) + 0.3 * std::exp(-std::pow(t - 1.05 * t_rev, 2));
        pt.mean_photon_number = 25. + std::exp(-std::pow((t - 0.95 * t_rev) / 2., 2)) * std::sin(20. * t);
        s.points.push_back(pt);
    }
    const auto rep = detect_features(s, p);
    CHECK(rep.purity_collapse_min == doctest::Approx(0.3).epsilon(1e-3));
    CHECK(rep.purity_revival_max == doctest::Approx(0.9).epsilon(1e-3));
    CHECK(rep.t_revival_measured == doctest::Approx(0.95 * t_rev).epsilon(0.01));
}

TEST_CASE("short series are rejected") {
    const auto p = make_params(0.5, 50.);
    const auto s = compute_series(p, linspace(0., 40., 50));
    CHECK_THROWS_AS(detect_features(s, p), InsufficientSpan);
}

TEST_CASE("weak fields are rejected") {
    const auto p = make_params(0.5, 2.);
    const auto s = compute_series(p, linspace(0., 30., 50));
    CHECK_THROWS_AS(detect_features(s, p), DomainError);
}

TEST_CASE("photon-number revival sits at 2 pi sqrt(nbar) for all R") {
    for (double r : {0., 0.5, 1.}) {
        const auto p = make_params(r, 50.);
        const auto s = compute_series(p, linspace(0., required_span(50.), 2000));
        const auto rep = detect_features(s, p);
        CHECK(std::abs(rep.t_revival_measured / rep.t_revival_predicted - 1.) < 0.05);
    }
}

}
