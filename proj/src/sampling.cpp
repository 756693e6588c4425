#include "redsim/sampling.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace redsim {

PureState Sampler::pure_state(int d_left, int d_right) {
    Eigen::MatrixXcd amp(d_left, d_right);
    for (int i = 0; i < d_left; ++i)
        for (int j = 0; j < d_right; ++j)
            amp(i, j) = Complex(normal_(rng_), normal_(rng_));
    return PureState::normalized(std::move(amp));
}

Eigen::VectorXd Sampler::schmidt_spectrum(int d) {
    // Exponential spacings normalize to a uniform point on the simplex.
    Eigen::VectorXd squared(d);
    double sum = 0.0;
    for (int k = 0; k < d; ++k) {
        double u;
        do {
            u = uniform_(rng_);
        } while (u <= 0.0);
        squared[k] = -std::log(u);
        sum += squared[k];
    }
    squared /= sum;
    std::sort(squared.data(), squared.data() + d, std::greater<double>());
    return squared.array().sqrt();
}

Eigen::VectorXd Sampler::nonmaximal_spectrum(int d) {
    const double uniform_coeff = 1.0 / std::sqrt(static_cast<double>(d));
    for (;;) {
        Eigen::VectorXd coeffs = schmidt_spectrum(d);
        if ((coeffs.array() - uniform_coeff).abs().maxCoeff() > 1e-6) return coeffs;
    }
}

double Sampler::unit_param() {
    return 1.0 - uniform_(rng_);
}

Eigen::MatrixXcd Sampler::unitary(int d) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g(i, j) = Complex(normal_(rng_), normal_(rng_));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ();
}

}  // namespace redsim
