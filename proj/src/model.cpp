#include "tavis/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tavis/errors.hpp"

namespace tavis {

namespace {

double log_poisson(double mean, int n) {
    if (mean == 0.) return n == 0 ? 0. : -INFINITY;
    return -mean + n * std::log(mean) - std::lgamma(n + 1.);
}

}  // namespace

void ModelParams::validate() const {
    if (!(r_ratio >= 0.) || !std::isfinite(r_ratio))
        throw ConfigError("coupling ratio must be finite and >= 0, got " + std::to_string(r_ratio));
    if (!(mean_photons >= 0.) || !std::isfinite(mean_photons))
        throw ConfigError("mean photon number must be finite and >= 0, got " + std::to_string(mean_photons));
    if (!(phase >= 0. && phase < 2. * std::numbers::pi))
        throw ConfigError("phase must lie in [0, 2pi)");
    if (!(tail_tolerance > 0. && tail_tolerance < 1.))
        throw ConfigError("tail tolerance must lie in (0, 1)");
    if (n_max < 1) throw ConfigError("n_max must be >= 1");
}

ModelParams make_params(double r_ratio, double mean_photons, double phase, double tail_tolerance, int n_max) {
    ModelParams p;
    p.r_ratio = r_ratio;
    p.mean_photons = mean_photons;
    p.tail_tolerance = tail_tolerance;
    if (!std::isfinite(phase)) throw ConfigError("phase must be finite");
    p.phase = std::fmod(phase, 2. * std::numbers::pi);
    if (p.phase < 0.) p.phase += 2. * std::numbers::pi;
    if (p.phase >= 2. * std::numbers::pi) p.phase = 0.;
    if (!(tail_tolerance > 0. && tail_tolerance < 1.))
        throw ConfigError("tail tolerance must lie in (0, 1)");
    if (!(mean_photons >= 0.) || !std::isfinite(mean_photons))
        throw ConfigError("mean photon number must be finite and >= 0");
    p.n_max = n_max > 0 ? n_max : choose_truncation(mean_photons, tail_tolerance);
    p.validate();
    return p;
}

double PoissonWeights::total() const {
    double s = 0.;
    for (double w : weights) s += w;
    return s;
}

double poisson_tail(double mean_photons, int n_max) {
    if (mean_photons == 0.) return 0.;
    // Sum from the far end down so the small terms are accumulated first.
    const double spread = std::sqrt(mean_photons);
    const int start = n_max + 1;
    int stop = static_cast<int>(std::ceil(std::max<double>(start, mean_photons) + 40. * spread + 60.));
    double tail = 0.;
    for (int n = stop; n >= start; --n) tail += std::exp(log_poisson(mean_photons, n));
    return tail;
}

int choose_truncation(double mean_photons, double tail_tolerance) {
    if (mean_photons == 0.) return kMinTruncation;
    // The tail is decreasing in n_max; bisect between the floor and a bound
    // far past the Poisson bulk.
    int lo = kMinTruncation - 1;
    int hi = static_cast<int>(std::ceil(mean_photons + 40. * std::sqrt(mean_photons) + 60.));
    if (poisson_tail(mean_photons, kMinTruncation) < tail_tolerance) return kMinTruncation;
    while (poisson_tail(mean_photons, hi) >= tail_tolerance) hi *= 2;
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (poisson_tail(mean_photons, mid) < tail_tolerance)
            hi = mid;
        else
            lo = mid;
    }
    return std::max(hi, kMinTruncation);
}

PoissonWeights coherent_weights(const ModelParams& params) {
    params.validate();
    const double tail = poisson_tail(params.mean_photons, params.n_max);
    if (tail > params.tail_tolerance)
        throw TruncationTooTight("Poisson tail above n_max = " + std::to_string(params.n_max) + " is " +
                                 std::to_string(tail) + ", tolerance " + std::to_string(params.tail_tolerance));

    PoissonWeights out;
    out.weights.resize(params.n_max + 1);
    out.amplitudes.resize(params.n_max + 1);
    for (int n = 0; n <= params.n_max; ++n) {
        const double lp = log_poisson(params.mean_photons, n);
        const double modulus = std::exp(0.5 * lp);
        out.weights[n] = modulus * modulus;
        out.amplitudes[n] = std::polar(modulus, n * params.phase);
    }
    return out;
}

}  // namespace tavis
