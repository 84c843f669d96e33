#pragma once

#include <Eigen/Dense>

#include "tavis/closed_form.hpp"

namespace tavis {

/// Interaction-picture Hamiltonian restricted to one excitation sector, in
/// units of hbar g1. Dimension 1, 3 or 4 for n = 0, 1, >= 2; the last basis
/// vector is always |-,-;n>.
struct HamiltonianBlock {
    int n = 0;
    Eigen::MatrixXd matrix;
};

HamiltonianBlock hamiltonian_block(int n, double r_ratio);

/// Brute-force reference for amplitudes_closed(): propagates |-,-;n> with
/// exp(-i H tau) built from a dense symmetric eigendecomposition of the block.
SectorAmplitudes amplitudes_oracle(int n, double r_ratio, double tau);

/// Propagates an arbitrary sector vector (length = block dimension).
Eigen::VectorXcd evolve_block(const HamiltonianBlock& block, const Eigen::VectorXcd& psi, double tau);

}  // namespace tavis
