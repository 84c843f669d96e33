#pragma once

#include <array>
#include <complex>

namespace tavis {

using cplx = std::complex<double>;

/// Amplitudes of one excitation sector n on the ordered basis
/// |+,+;n-2>, |+,-;n-1>, |-,+;n-1>, |-,-;n>.
struct SectorAmplitudes {
    int n = 0;
    cplx c1{}, c2{}, c3{}, c4{1., 0.};

    std::array<cplx, 4> as_array() const { return {c1, c2, c3, c4}; }
    double norm_squared() const;
};

/// Eigenfrequencies of a sector block (n >= 2), in units of g1.
struct SectorSpectrum {
    double lambda_plus = 0.;
    double lambda_minus = 0.;
    double beta = 0.;
};

namespace closed_form {

// Below this value of lambda_minus * tau, sin(x)/lambda_minus is taken from
// its Taylor series. Only R ~ 1 reaches it.
inline constexpr double kSincThreshold = 1e-4;

}  // namespace closed_form

/// Throws DomainError if n < 2 or r_ratio < 0.
SectorSpectrum sector_spectrum(int n, double r_ratio);

/// Analytic amplitudes for atoms starting in |-,-> and sector n.
/// Throws DomainError for tau < 0, n < 0 or r_ratio < 0.
SectorAmplitudes amplitudes_closed(int n, double r_ratio, double tau);

}  // namespace tavis
