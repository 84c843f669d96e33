#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tavis/closed_form.hpp"
#include "tavis/model.hpp"

namespace tavis {

enum class Backend { closed_form, oracle };

Backend parse_backend(std::string_view name);
std::string_view to_string(Backend backend);

/// Atom-field pure state at one instant: coherent amplitudes times the
/// per-sector amplitudes, sectors 0..n_max.
struct JointState {
    double tau = 0.;
    std::vector<SectorAmplitudes> sectors;
    std::vector<cplx> coherent;  // field amplitude of sector n

    /// Sum_n p_n sum_i |c_i|^2; below one by the truncated Poisson tail.
    double norm() const;

    /// Wave function psi(a, f): row a indexes |+,+>, |+,->, |-,+>, |-,->,
    /// column f is the photon number. Not renormalized.
    Eigen::MatrixXcd components() const;
};

/// Reduced state of the atom pair on (|+,+>, |+,->, |-,+>, |-,->).
struct AtomicDensityMatrix {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
};

struct Populations {
    double p_ee = 0., p_eg = 0., p_ge = 0., p_gg = 0.;
};

JointState build_joint_state(const ModelParams& params, double tau, Backend backend);
JointState build_joint_state(const ModelParams& params, const PoissonWeights& weights, double tau,
                             Backend backend);

/// Partial trace over the field, renormalized to unit trace.
AtomicDensityMatrix reduce_atomic(const JointState& state);

double purity_direct(const AtomicDensityMatrix& rho);

/// Atomic purity from the seven-term Poisson series over closed-form
/// amplitudes (independent of the partial-trace route).
double purity_eq8(const ModelParams& params, double tau);
double purity_eq8(const ModelParams& params, const PoissonWeights& weights, double tau);

/// Tr(rho_field^2) from the explicit (n_max+1)-dimensional field density matrix.
double field_purity(const JointState& state);

double von_neumann_entropy(const AtomicDensityMatrix& rho);

/// <a^+ a>, renormalized by the truncated norm.
double mean_photon_number(const JointState& state);

Populations populations(const AtomicDensityMatrix& rho);

struct ObservablePoint {
    double tau = 0.;
    double purity_direct = 1.;
    double purity_eq8 = 1.;
    double linear_entropy = 0.;
    double von_neumann_entropy = 0.;
    double field_purity = 1.;
    double mean_photon_number = 0.;
    Populations pops;
};

struct ObservableSeries {
    std::vector<ObservablePoint> points;

    std::vector<double> tau() const;
    std::vector<double> purity() const;
    std::vector<double> mean_photons() const;
};

ObservablePoint evaluate_point(const ModelParams& params, const PoissonWeights& weights, double tau,
                               Backend backend);

/// Evaluates every observable on the grid; rows stay in grid order.
ObservableSeries compute_series(const ModelParams& params, const std::vector<double>& tau_grid,
                                Backend backend = Backend::closed_form);

/// steps >= 2 equally spaced points with both endpoints included.
std::vector<double> linspace(double start, double end, int steps);

}  // namespace tavis
