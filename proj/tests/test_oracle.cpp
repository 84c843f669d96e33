#include <cmath>
#include <random>

#include "doctest.h"
#include "tavis/closed_form.hpp"
#include "tavis/oracle.hpp"

using namespace tavis;

namespace {

Eigen::VectorXcd as_vector(const SectorAmplitudes& a, Eigen::Index dim) {
    Eigen::VectorXcd v(dim);
    if (dim == 1) v << a.c4;
    else if (dim == 3) v << a.c2, a.c3, a.c4;
    else v << a.c1, a.c2, a.c3, a.c4;
    return v;
}

// C2 and C3 exactly as printed in the original derivation, with a minus
// sign between the lambda_+ and lambda_- terms. Kept to document the
// misprint the closed form corrects.
std::pair<cplx, cplx> printed_c2_c3(int n, double r, double tau) {
    const double q = 1. + r * r;
    const double beta = std::sqrt(std::pow((2. * n - 1.) * q, 2) - 4. * (n - 1.) * n * std::pow(1. - r * r, 2));
    const double lp = std::sqrt(q * (2. * n - 1.) + beta) / std::sqrt(2.);
    const double lm = std::sqrt(q * (2. * n - 1.) - beta) / std::sqrt(2.);
    const cplx i{0., 1.};
    const double sn = std::sqrt(static_cast<double>(n));
    const cplx c2 = -4. * i * r * r * (n - 1.) * sn / beta *
                    ((lp * lp + (1. - r * r) * n) / (lp * (beta - q)) * std::sin(lp * tau) -
                     (lm * lm + (1. - r * r) * n) / (lm * (beta + q)) * std::sin(lm * tau));
    const cplx c3 = -4. * i * r * (n - 1.) * sn / beta *
                    ((lp * lp - (1. - r * r) * n) / (lp * (beta - q)) * std::sin(lp * tau) -
                     (lm * lm - (1. - r * r) * n) / (lm * (beta + q)) * std::sin(lm * tau));
    return {c2, c3};
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("block shapes and matrix elements") {
    const auto b0 = hamiltonian_block(0, 0.3);
    CHECK(b0.matrix.rows() == 1);
    CHECK(b0.matrix(0, 0) == 0.);

    const auto b1 = hamiltonian_block(1, 1.);
    REQUIRE(b1.matrix.rows() == 3);
    Eigen::Matrix3d e1;
    e1 << 0, 0, 1, 0, 0, 1, 1, 1, 0;
    CHECK((b1.matrix - e1).norm() == 0.);

    const auto b3 = hamiltonian_block(3, 0.5);
    REQUIRE(b3.matrix.rows() == 4);
    Eigen::Matrix4d e3 = Eigen::Matrix4d::Zero();
    e3(0, 1) = e3(1, 0) = 0.5 * std::sqrt(2.);
    e3(0, 2) = e3(2, 0) = std::sqrt(2.);
    e3(1, 3) = e3(3, 1) = std::sqrt(3.);
    e3(2, 3) = e3(3, 2) = 0.5 * std::sqrt(3.);
    CHECK((b3.matrix - e3).norm() < 1e-15);
    CHECK((b3.matrix - b3.matrix.transpose()).norm() == 0.);
    CHECK(b3.matrix.diagonal().norm() == 0.);
}

TEST_CASE("identity evolution at tau = 0") {
    for (int n = 0; n <= 12; ++n) {
        const auto a = amplitudes_oracle(n, 0.8, 0.);
        CHECK(std::abs(a.c4 - 1.) < 1e-14);
        CHECK(std::abs(a.c1) + std::abs(a.c2) + std::abs(a.c3) < 1e-14);
    }
}

TEST_CASE("one-excitation sector matches the analytic Rabi solution") {
    const double w = std::sqrt(1.25);
    for (double t : {0.1, 1., 5.5, 30.}) {
        const auto a = amplitudes_oracle(1, 0.5, t);
        CHECK(std::abs(a.c2 - cplx(0., -std::sin(w * t) / w)) < 1e-10);
        CHECK(std::abs(a.c3 - cplx(0., -0.5 * std::sin(w * t) / w)) < 1e-10);
        CHECK(std::abs(a.c4 - std::cos(w * t)) < 1e-10);
        CHECK(a.c1 == cplx{});
    }
}

TEST_CASE("unitarity") {
    CHECK(std::abs(amplitudes_oracle(10, 0.7, 5.).norm_squared() - 1.) < 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> r(0., 3.), t(0., 100.);
    for (int k = 0; k < 500; ++k) {
        const auto a = amplitudes_oracle(k % 120, r(rng), t(rng));
        CHECK(std::abs(a.norm_squared() - 1.) < 1e-12);
    }
}

TEST_CASE("energy is conserved within a sector") {
    for (int n : {1, 2, 9, 40}) {
        const auto block = hamiltonian_block(n, 0.6);
        const auto dim = block.matrix.rows();
        for (double t : {0., 0.7, 4., 25.}) {
            const auto v = as_vector(amplitudes_oracle(n, 0.6, t), dim);
            const cplx e = v.dot(block.matrix.cast<cplx>() * v);
            CHECK(std::abs(e) < 1e-10);
        }
    }
}

TEST_CASE("block spectrum equals +-lambda_plus, +-lambda_minus") {
    for (int n = 2; n <= 60; ++n) {
        for (double r : {0., 0.25, 0.5, 1., 2.}) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hamiltonian_block(n, r).matrix);
            const auto s = sector_spectrum(n, r);
            std::vector<double> expected{-s.lambda_plus, -s.lambda_minus, s.lambda_minus, s.lambda_plus};
            std::sort(expected.begin(), expected.end());
            for (int k = 0; k < 4; ++k) CHECK(std::abs(eig.eigenvalues()[k] - expected[k]) < 1e-10);
        }
    }
}

TEST_CASE("evolution composes") {
    const auto block = hamiltonian_block(15, 0.45);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(4);
    psi0[3] = 1.;
    const auto two_steps = evolve_block(block, evolve_block(block, psi0, 2.5), 7.25);
    const auto one_step = evolve_block(block, psi0, 9.75);
    CHECK((two_steps - one_step).norm() < 1e-10);
}

TEST_CASE("printed C2/C3 disagree with the oracle; corrected form agrees") {
    for (int n : {2, 3, 6}) {
        const double r = 0.5, t = 1.7;
        const auto [p2, p3] = printed_c2_c3(n, r, t);
        const auto o = amplitudes_oracle(n, r, t);
        const auto c = amplitudes_closed(n, r, t);
        CHECK(std::max(std::abs(p2 - o.c2), std::abs(p3 - o.c3)) > 1e-2);
        CHECK(std::abs(c.c2 - o.c2) < 1e-10);
        CHECK(std::abs(c.c3 - o.c3) < 1e-10);
    }
}

}
