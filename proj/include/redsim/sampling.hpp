// sampling.hpp
// Seeded random inputs for the verification suites: rotation-invariant
// complex-Gaussian state vectors, uniform-simplex Schmidt spectra, Haar-ish
// local unitaries.

#pragma once

#include "redsim/state.hpp"
#include "redsim/swap.hpp"

#include <cstdint>
#include <random>

namespace redsim {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Amplitudes iid complex normal, then normalized.
    PureState pure_state(int d_left, int d_right);

    /// Squared coefficients uniform on the simplex; returned descending.
    Eigen::VectorXd schmidt_spectrum(int d);

    /// As schmidt_spectrum, resampled until visibly non-uniform.
    Eigen::VectorXd nonmaximal_spectrum(int d);

    /// Uniform in (0, 1].
    double unit_param();

    SwapParams swap_params() { return {unit_param(), unit_param()}; }

    /// Unitary from the QR factorization of a complex Gaussian matrix.
    Eigen::MatrixXcd unitary(int d);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace redsim
