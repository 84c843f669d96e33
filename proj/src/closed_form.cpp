#include "tavis/closed_form.hpp"

#include <cmath>
#include <string>

#include "tavis/errors.hpp"

namespace tavis {

double SectorAmplitudes::norm_squared() const {
    return std::norm(c1) + std::norm(c2) + std::norm(c3) + std::norm(c4);
}

SectorSpectrum sector_spectrum(int n, double r_ratio) {
    if (n < 2) throw DomainError("sector_spectrum needs n >= 2, got " + std::to_string(n));
    if (!(r_ratio >= 0.)) throw DomainError("coupling ratio must be >= 0");

    const double q = 1. + r_ratio * r_ratio;
    const double nn1 = static_cast<double>(n) * (n - 1);
    // beta^2 = (2n-1)^2 q^2 - 4n(n-1)(1-R^2)^2, rearranged into a sum of
    // non-negative terms.
    const double beta = std::sqrt(q * q + 16. * nn1 * r_ratio * r_ratio);
    const double sum = q * (2. * n - 1.) + beta;  // 2 lambda_+^2
    SectorSpectrum s;
    s.beta = beta;
    s.lambda_plus = std::sqrt(0.5 * sum);
    // lambda_+^2 lambda_-^2 = n(n-1)(1-R^2)^2
    s.lambda_minus = std::abs(1. - r_ratio * r_ratio) * std::sqrt(2. * nn1 / sum);
    return s;
}

namespace {

// sin(lambda tau) / lambda, regular at lambda = 0.
double sin_over(double lambda, double tau) {
    const double x = lambda * tau;
    if (std::abs(x) < closed_form::kSincThreshold) return tau * (1. - x * x / 6.);
    return std::sin(x) / lambda;
}

}  // namespace

SectorAmplitudes amplitudes_closed(int n, double r_ratio, double tau) {
    if (n < 0) throw DomainError("sector index must be >= 0");
    if (!(r_ratio >= 0.)) throw DomainError("coupling ratio must be >= 0");
    if (!(tau >= 0.)) throw DomainError("scaled time must be >= 0");

    constexpr cplx i{0., 1.};
    SectorAmplitudes a;
    a.n = n;
    if (n == 0) return a;

    const double r = r_ratio;
    const double q = 1. + r * r;
    if (n == 1) {
        const double w = std::sqrt(q);
        const double s = std::sin(w * tau) / w;
        a.c2 = -i * s;
        a.c3 = -i * r * s;
        a.c4 = std::cos(w * tau);
        return a;
    }

    const auto [lp, lm, beta] = sector_spectrum(n, r);
    const double dn = n;
    const double sqn = std::sqrt(dn);
    const double bq = beta + q;  // beta + (1 + R^2); beta - (1 + R^2) = 16n(n-1)R^2 / bq
    const double cos_p = std::cos(lp * tau);
    const double cos_m = std::cos(lm * tau);
    const double sin_p = std::sin(lp * tau);
    const double sin_m = sin_over(lm, tau);

    a.c1 = 2. * r * std::sqrt(dn * (dn - 1.)) / beta * (cos_p - cos_m);

    // lambda_+^2 + (1-R^2)n = (4n - q + beta)/2, lambda_-^2 + (1-R^2)n = (4n - q - beta)/2
    const double c2p = bq * (4. * dn - q + beta) / (8. * beta * lp * sqn);
    const double c2m = 2. * r * r * (dn - 1.) * sqn * (4. * dn - q - beta) / (beta * bq);
    a.c2 = -i * (c2p * sin_p + c2m * sin_m);

    // lambda_+^2 - (1-R^2)n = 2nR^2 (4(n-1)/bq + 1), lambda_-^2 - (1-R^2)n = (4nR^2 - q - beta)/2
    const double c3p = r * sqn * (4. * (dn - 1.) + bq) / (2. * beta * lp);
    const double c3m = 2. * r * (dn - 1.) * sqn * (4. * dn * r * r - q - beta) / (beta * bq);
    a.c3 = -i * (c3p * sin_p + c3m * sin_m);

    a.c4 = bq / (2. * beta) * cos_p + 8. * r * r * dn * (dn - 1.) / (beta * bq) * cos_m;
    return a;
}

}  // namespace tavis
