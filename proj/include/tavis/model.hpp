#pragma once

#include <complex>
#include <vector>

namespace tavis {

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr int kMinTruncation = 8;

/// Physical configuration of the two-atom / one-mode system.
///
/// All times are scaled by the first atom's coupling (tau = g1 t), so g1
/// never appears explicitly. Construct through make_params() to get a
/// validated instance with an automatically chosen truncation.
struct ModelParams {
    double r_ratio = 0.5;       // R = g2 / g1
    double mean_photons = 50.;  // nbar = |z|^2
    double phase = 0.;          // arg z, in [0, 2pi)
    int n_max = 0;              // highest sector index kept
    double tail_tolerance = kDefaultTailTolerance;

    /// Throws ConfigError if any invariant is violated.
    void validate() const;
};

/// Builds validated parameters. n_max <= 0 selects choose_truncation();
/// the phase is wrapped into [0, 2pi).
ModelParams make_params(double r_ratio, double mean_photons, double phase = 0.,
                        double tail_tolerance = kDefaultTailTolerance, int n_max = 0);

struct PoissonWeights {
    std::vector<double> weights;                   // p_n, n = 0..n_max
    std::vector<std::complex<double>> amplitudes;  // z^n e^{-|z|^2/2} / sqrt(n!)

    double total() const;
};

/// Poisson probability mass strictly above n_max, summed in log space.
double poisson_tail(double mean_photons, int n_max);

/// Smallest n_max whose Poisson tail is below tail_tolerance, never below 8.
int choose_truncation(double mean_photons, double tail_tolerance);

/// Throws TruncationTooTight if params.n_max leaves too much mass in the tail.
PoissonWeights coherent_weights(const ModelParams& params);

}  // namespace tavis
