#include "tavis/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tavis/errors.hpp"
#include "tavis/oracle.hpp"

namespace tavis {

Backend parse_backend(std::string_view name) {
    if (name == "closed_form" || name == "closed-form") return Backend::closed_form;
    if (name == "oracle") return Backend::oracle;
    throw ConfigError("unknown backend '" + std::string(name) + "' (expected closed_form or oracle)");
}

std::string_view to_string(Backend backend) {
    return backend == Backend::oracle ? "oracle" : "closed_form";
}

double JointState::norm() const {
    double s = 0.;
    for (std::size_t n = 0; n < sectors.size(); ++n) s += std::norm(coherent[n]) * sectors[n].norm_squared();
    return s;
}

Eigen::MatrixXcd JointState::components() const {
    const auto fock = static_cast<Eigen::Index>(sectors.size());
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(4, fock);
    for (Eigen::Index n = 0; n < fock; ++n) {
        const auto& s = sectors[n];
        const cplx w = coherent[n];
        if (n >= 2) psi(0, n - 2) += w * s.c1;
        if (n >= 1) {
            psi(1, n - 1) += w * s.c2;
            psi(2, n - 1) += w * s.c3;
        }
        psi(3, n) += w * s.c4;
    }
    return psi;
}

JointState build_joint_state(const ModelParams& params, const PoissonWeights& weights, double tau,
                             Backend backend) {
    if (!(tau >= 0.)) throw DomainError("scaled time must be >= 0");
    JointState st;
    st.tau = tau;
    st.coherent = weights.amplitudes;
    st.sectors.reserve(params.n_max + 1);
    for (int n = 0; n <= params.n_max; ++n)
        st.sectors.push_back(backend == Backend::oracle ? amplitudes_oracle(n, params.r_ratio, tau)
                                                        : amplitudes_closed(n, params.r_ratio, tau));
    return st;
}

JointState build_joint_state(const ModelParams& params, double tau, Backend backend) {
    return build_joint_state(params, coherent_weights(params), tau, backend);
}

AtomicDensityMatrix reduce_atomic(const JointState& state) {
    const Eigen::MatrixXcd psi = state.components();
    AtomicDensityMatrix out;
    out.rho = psi * psi.adjoint();
    const double trace = out.rho.trace().real();
    out.rho /= trace;
    return out;
}

double purity_direct(const AtomicDensityMatrix& rho) { return rho.rho.cwiseAbs2().sum(); }

double field_purity(const JointState& state) {
    const Eigen::MatrixXcd psi = state.components();
    const Eigen::MatrixXcd rho_field = psi.transpose() * psi.conjugate();
    const double trace = rho_field.trace().real();
    return rho_field.cwiseAbs2().sum() / (trace * trace);
}

double von_neumann_entropy(const AtomicDensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho.rho, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw EigensolverFailure("density matrix eigendecomposition failed");
    double s = 0.;
    for (double lam : eig.eigenvalues()) {
        lam = std::clamp(lam, 0., 1.);
        if (lam > 0.) s -= lam * std::log(lam);
    }
    return s;
}

double mean_photon_number(const JointState& state) {
    double photons = 0.;
    for (std::size_t n = 0; n < state.sectors.size(); ++n) {
        const auto& s = state.sectors[n];
        const double dn = static_cast<double>(n);
        double term = dn * std::norm(s.c4);
        if (n >= 1) term += (dn - 1.) * (std::norm(s.c2) + std::norm(s.c3));
        if (n >= 2) term += (dn - 2.) * std::norm(s.c1);
        photons += std::norm(state.coherent[n]) * term;
    }
    return photons / state.norm();
}

Populations populations(const AtomicDensityMatrix& rho) {
    return {rho.rho(0, 0).real(), rho.rho(1, 1).real(), rho.rho(2, 2).real(), rho.rho(3, 3).real()};
}

double purity_eq8(const ModelParams& params, const PoissonWeights& weights, double tau) {
    const int nmax = params.n_max;
    const double r = params.r_ratio;
    const double nbar = params.mean_photons;

    std::vector<SectorAmplitudes> c;
    c.reserve(nmax + 3);
    for (int m = 0; m <= nmax + 2; ++m) c.push_back(amplitudes_closed(m, r, tau));

    // Diagonal sums.
    double d1 = 0., d2 = 0., d3 = 0., d4 = 0.;
    // Coherences: (2|1), (3|1), (4|2), (4|3), (4|1), (3|2) pairings.
    cplx x21{}, x31{}, x42{}, x43{}, x41{}, x32{};
    for (int n = 0; n <= nmax; ++n) {
        const double p = weights.weights[n];
        const double n1 = n + 1., n2 = n + 2.;
        const auto& a0 = c[n];
        const auto& a1 = c[n + 1];
        const auto& a2 = c[n + 2];

        d1 += p / (n1 * n2) * std::norm(a2.c1);
        d2 += p / n1 * std::norm(a1.c2);
        d3 += p / n1 * std::norm(a1.c3);
        d4 += p * std::norm(a0.c4);

        x21 += p / (n1 * std::sqrt(n2)) * std::conj(a1.c2) * a2.c1;
        x31 += p / (n1 * std::sqrt(n2)) * std::conj(a1.c3) * a2.c1;
        x42 += p / std::sqrt(n1) * std::conj(a0.c4) * a1.c2;
        x43 += p / std::sqrt(n1) * std::conj(a0.c4) * a1.c3;
        x41 += p / std::sqrt(n1 * n2) * std::conj(a0.c4) * a2.c1;
        x32 += p / n1 * std::conj(a1.c3) * a1.c2;
    }

    const double nb2 = nbar * nbar;
    double purity = nb2 * nb2 * d1 * d1;
    purity += nb2 * (d2 * d2 + d3 * d3);
    purity += d4 * d4;
    purity += 2. * nb2 * nbar * (std::norm(x21) + std::norm(x31));
    purity += 2. * nbar * (std::norm(x42) + std::norm(x43));
    purity += 2. * nb2 * std::norm(x41);
    purity += 2. * nb2 * std::norm(x32);
    return purity;
}

double purity_eq8(const ModelParams& params, double tau) {
    return purity_eq8(params, coherent_weights(params), tau);
}

ObservablePoint evaluate_point(const ModelParams& params, const PoissonWeights& weights, double tau,
                               Backend backend) {
    const JointState state = build_joint_state(params, weights, tau, backend);
    const AtomicDensityMatrix rho = reduce_atomic(state);

    ObservablePoint pt;
    pt.tau = tau;
    pt.purity_direct = purity_direct(rho);
    pt.purity_eq8 = purity_eq8(params, weights, tau);
    pt.linear_entropy = 1. - pt.purity_direct;
    pt.von_neumann_entropy = von_neumann_entropy(rho);
    pt.field_purity = field_purity(state);
    pt.mean_photon_number = mean_photon_number(state);
    pt.pops = populations(rho);
    return pt;
}

ObservableSeries compute_series(const ModelParams& params, const std::vector<double>& tau_grid,
                                Backend backend) {
    const PoissonWeights weights = coherent_weights(params);
    ObservableSeries series;
    series.points.reserve(tau_grid.size());
    for (double tau : tau_grid) series.points.push_back(evaluate_point(params, weights, tau, backend));
    return series;
}

std::vector<double> ObservableSeries::tau() const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.tau);
    return v;
}

std::vector<double> ObservableSeries::purity() const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.purity_direct);
    return v;
}

std::vector<double> ObservableSeries::mean_photons() const {
    std::vector<double> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.mean_photon_number);
    return v;
}

std::vector<double> linspace(double start, double end, int steps) {
    if (steps < 2) throw ConfigError("a time grid needs at least 2 points");
    std::vector<double> grid(steps);
    const double h = (end - start) / (steps - 1);
    for (int k = 0; k < steps; ++k) grid[k] = start + k * h;
    grid.back() = end;
    return grid;
}

}  // namespace tavis
