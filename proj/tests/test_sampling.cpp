#include "redsim/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace redsim;

TEST_CASE("sampled states are normalized and seed-reproducible") {
    Sampler a(42);
    Sampler b(42);
    for (int trial = 0; trial < 20; ++trial) {
        const PureState sa = a.pure_state(3, 3);
        const PureState sb = b.pure_state(3, 3);
        REQUIRE((sa.amp() - sb.amp()).cwiseAbs().maxCoeff() == 0.0);
        REQUIRE(std::abs(sa.amp().squaredNorm() - 1.0) < 1e-12);
    }
}

TEST_CASE("sampled spectra are descending unit vectors") {
    Sampler sampler(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 4;
        const Eigen::VectorXd coeffs = sampler.schmidt_spectrum(d);
        REQUIRE(std::abs(coeffs.squaredNorm() - 1.0) < 1e-12);
        for (int k = 0; k + 1 < d; ++k) REQUIRE(coeffs[k] >= coeffs[k + 1]);
        REQUIRE(coeffs.minCoeff() >= 0.0);
    }
}

TEST_CASE("unit parameters live in (0, 1]") {
    Sampler sampler(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const double u = sampler.unit_param();
        REQUIRE(u > 0.0);
        REQUIRE(u <= 1.0);
    }
}

TEST_CASE("sampled unitaries are unitary") {
    Sampler sampler(9);
    for (int d = 2; d <= 4; ++d) {
        const Eigen::MatrixXcd u = sampler.unitary(d);
        REQUIRE((u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <
                1e-12);
    }
}
