#include "redsim/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace redsim {

GeneralQubitBasis::GeneralQubitBasis(double n, double m) : n_(n), m_(m) {
    if (!(n >= 0.0 && n <= 1.0) || !(m >= 0.0 && m <= 1.0)) {
        throw std::invalid_argument("GeneralQubitBasis: n and m must be real values in [0, 1]");
    }
    vectors_.reserve(4);
    for (int r = 0; r < 2; ++r) {
        for (int h = 0; h < 2; ++h) {
            Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(2, 2);
            for (int t = 0; t < 2; ++t) {
                amp(t, t ^ h) = phase(r, t) * weight(r, h, t);
            }
            vectors_.push_back(PureState::normalized(std::move(amp)));
        }
    }
}

double GeneralQubitBasis::weight(int r, int h, int t) const {
    if ((r == 0 && h == 0 && t == 1) || (r == 1 && h == 0 && t == 0)) return n_;
    if ((r == 0 && h == 1 && t == 1) || (r == 1 && h == 1 && t == 0)) return m_;
    return 1.0;
}

double GeneralQubitBasis::weight_norm(int r, int h) const {
    double sum = 0.0;
    for (int t = 0; t < 2; ++t) {
        const double w = weight(r, h, t);
        sum += w * w;
    }
    return sum;
}

double GeneralQubitBasis::transfer_factor(int h) const {
    return h == 0 ? n_ : m_;
}

bool GeneralQubitBasis::degenerate(int r, int h) const {
    return weight(r, h, 0) * weight(r, h, 1) == 0.0;
}

const PureState& GeneralQubitBasis::vector(int r, int h) const {
    if (r < 0 || r > 1 || h < 0 || h > 1) {
        throw std::invalid_argument("GeneralQubitBasis::vector: indices must be 0 or 1");
    }
    return vectors_[static_cast<std::size_t>(2 * r + h)];
}

QuditBellBasis::QuditBellBasis(int d) : d_(d) {
    if (d < 2) {
        throw std::invalid_argument("QuditBellBasis: d must be >= 2");
    }
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    vectors_.reserve(static_cast<std::size_t>(d) * d);
    for (int r = 0; r < d; ++r) {
        for (int h = 0; h < d; ++h) {
            Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(d, d);
            for (int t = 0; t < d; ++t) {
                amp(t, (t + h) % d) = phase(r, t) * inv_sqrt_d;
            }
            vectors_.push_back(PureState(std::move(amp)));
        }
    }
}

Complex QuditBellBasis::phase(int r, int t) const {
    const double angle = 2.0 * std::numbers::pi * r * t / d_;
    return Complex(std::cos(angle), std::sin(angle));
}

const PureState& QuditBellBasis::vector(int r, int h) const {
    if (r < 0 || r >= d_ || h < 0 || h >= d_) {
        throw std::invalid_argument("QuditBellBasis::vector: indices out of range");
    }
    return vectors_[static_cast<std::size_t>(r) * d_ + h];
}

}  // namespace redsim
