#include "tavis/oracle.hpp"

#include <cmath>
#include <string>

#include "tavis/errors.hpp"

namespace tavis {

HamiltonianBlock hamiltonian_block(int n, double r_ratio) {
    if (n < 0) throw DomainError("sector index must be >= 0");
    if (!(r_ratio >= 0.)) throw DomainError("coupling ratio must be >= 0");

    HamiltonianBlock block{n, {}};
    if (n == 0) {
        block.matrix = Eigen::MatrixXd::Zero(1, 1);
        return block;
    }
    if (n == 1) {
        // |+,-;0>, |-,+;0>, |-,-;1>
        block.matrix = Eigen::MatrixXd::Zero(3, 3);
        block.matrix(0, 2) = block.matrix(2, 0) = 1.;
        block.matrix(1, 2) = block.matrix(2, 1) = r_ratio;
        return block;
    }
    // |+,+;n-2>, |+,-;n-1>, |-,+;n-1>, |-,-;n>. Atom 1 couples with g1,
    // atom 2 with g2 = R g1; a photon annihilation from m photons gives sqrt(m).
    const double s1 = std::sqrt(n - 1.);
    const double s0 = std::sqrt(static_cast<double>(n));
    auto& h = block.matrix;
    h = Eigen::MatrixXd::Zero(4, 4);
    h(0, 1) = h(1, 0) = r_ratio * s1;
    h(0, 2) = h(2, 0) = s1;
    h(1, 3) = h(3, 1) = s0;
    h(2, 3) = h(3, 2) = r_ratio * s0;
    return block;
}

Eigen::VectorXcd evolve_block(const HamiltonianBlock& block, const Eigen::VectorXcd& psi, double tau) {
    if (psi.size() != block.matrix.rows()) throw DomainError("state dimension does not match block");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block.matrix);
    if (eig.info() != Eigen::Success)
        throw EigensolverFailure("symmetric eigendecomposition failed for sector " + std::to_string(block.n));

    const Eigen::MatrixXcd v = eig.eigenvectors().cast<cplx>();
    Eigen::VectorXcd phases(eig.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) phases[k] = std::polar(1., -eig.eigenvalues()[k] * tau);
    return v * phases.asDiagonal() * (v.adjoint() * psi);
}

SectorAmplitudes amplitudes_oracle(int n, double r_ratio, double tau) {
    if (!(tau >= 0.)) throw DomainError("scaled time must be >= 0");
    const HamiltonianBlock block = hamiltonian_block(n, r_ratio);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(block.matrix.rows());
    psi0[psi0.size() - 1] = 1.;
    const Eigen::VectorXcd psi = evolve_block(block, psi0, tau);

    SectorAmplitudes a;
    a.n = n;
    switch (psi.size()) {
        case 1:
            a.c4 = psi[0];
            break;
        case 3:
            a.c2 = psi[0];
            a.c3 = psi[1];
            a.c4 = psi[2];
            break;
        default:
            a.c1 = psi[0];
            a.c2 = psi[1];
            a.c3 = psi[2];
            a.c4 = psi[3];
    }
    return a;
}

}  // namespace tavis
