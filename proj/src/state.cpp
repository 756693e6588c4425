#include "redsim/state.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace redsim {

PureState::PureState(Eigen::MatrixXcd amp) : amp_(std::move(amp)) {
    if (amp_.rows() < 2 || amp_.cols() < 2) {
        throw std::invalid_argument("PureState: both subsystem dimensions must be >= 2");
    }
    const double norm2 = amp_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw std::invalid_argument("PureState: amplitudes are not normalized");
    }
}

PureState PureState::normalized(Eigen::MatrixXcd amp) {
    const double norm = amp.norm();
    if (!(norm > 1e-150)) {
        throw std::invalid_argument("PureState: cannot normalize a zero vector");
    }
    amp /= norm;
    return PureState(std::move(amp));
}

PureState PureState::computational(int d_left, int d_right, int i, int j) {
    if (i < 0 || i >= d_left || j < 0 || j >= d_right) {
        throw std::invalid_argument("PureState::computational: index out of range");
    }
    Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(d_left, d_right);
    amp(i, j) = 1.0;
    return PureState(std::move(amp));
}

PureState PureState::maximally_entangled(int d) {
    if (d < 2) {
        throw std::invalid_argument("PureState::maximally_entangled: d must be >= 2");
    }
    Eigen::MatrixXcd amp = Eigen::MatrixXcd::Identity(d, d) / std::sqrt(static_cast<double>(d));
    return PureState(std::move(amp));
}

PureState PureState::from_spectrum(const Eigen::VectorXd& coeffs) {
    const int d = static_cast<int>(coeffs.size());
    if (d < 2) {
        throw std::invalid_argument("PureState::from_spectrum: need at least two coefficients");
    }
    Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        if (coeffs[k] < -kNormTol) {
            throw std::invalid_argument("PureState::from_spectrum: negative Schmidt coefficient");
        }
        amp(k, k) = coeffs[k];
    }
    return PureState(std::move(amp));
}

PureState PureState::swapped_sides() const {
    return PureState(amp_.transpose());
}

double PureState::overlap(const PureState& other) const {
    if (dim_left() != other.dim_left() || dim_right() != other.dim_right()) {
        throw std::invalid_argument("PureState::overlap: dimension mismatch");
    }
    Complex inner = (amp_.conjugate().cwiseProduct(other.amp_)).sum();
    return std::abs(inner);
}

SchmidtForm SchmidtForm::from_spectrum(Eigen::VectorXd coeffs) {
    const int d = static_cast<int>(coeffs.size());
    if (d < 2) {
        throw std::invalid_argument("SchmidtForm::from_spectrum: need at least two coefficients");
    }
    double sum2 = 0.0;
    for (int k = 0; k < d; ++k) {
        if (coeffs[k] < 0.0) {
            throw std::invalid_argument("SchmidtForm::from_spectrum: negative coefficient");
        }
        if (k + 1 < d && coeffs[k] < coeffs[k + 1]) {
            throw std::invalid_argument("SchmidtForm::from_spectrum: coefficients must be descending");
        }
        sum2 += coeffs[k] * coeffs[k];
    }
    if (std::abs(sum2 - 1.0) > kNormTol) {
        throw std::invalid_argument("SchmidtForm::from_spectrum: spectrum not normalized");
    }
    SchmidtForm sf;
    sf.coeffs = std::move(coeffs);
    sf.left_unitary = Eigen::MatrixXcd::Identity(d, d);
    sf.right_unitary = Eigen::MatrixXcd::Identity(d, d);
    return sf;
}

SchmidtForm schmidt_decompose(const PureState& s) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.amp(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtForm sf;
    sf.coeffs = svd.singularValues();
    sf.left_unitary = svd.matrixU();
    // amp = U Σ V^H and V^H = conj(V)ᵀ, so the right rotation is conj(V).
    sf.right_unitary = svd.matrixV().conjugate();
    return sf;
}

JointState::JointState(std::array<int, 4> dims) : dims_(dims) {
    std::size_t total = 1;
    for (int d : dims_) {
        if (d < 2) {
            throw std::invalid_argument("JointState: every subsystem dimension must be >= 2");
        }
        total *= static_cast<std::size_t>(d);
    }
    data_.assign(total, Complex{0.0, 0.0});
}

double JointState::norm() const {
    double sum = 0.0;
    for (const Complex& c : data_) sum += std::norm(c);
    return std::sqrt(sum);
}

JointState tensor(const PureState& a, const PureState& b) {
    JointState joint({a.dim_left(), a.dim_right(), b.dim_left(), b.dim_right()});
    for (int i = 0; i < a.dim_left(); ++i)
        for (int j = 0; j < a.dim_right(); ++j)
            for (int p = 0; p < b.dim_left(); ++p)
                for (int q = 0; q < b.dim_right(); ++q)
                    joint.at(i, j, p, q) = a.amp(i, j) * b.amp(p, q);
    return joint;
}

PureState ProjectionOutcome::post_state() const {
    if (!possible()) {
        throw std::domain_error("ProjectionOutcome: impossible outcome has no state");
    }
    return PureState::normalized(residual);
}

ProjectionOutcome project_measurement(const JointState& joint,
                                      const PureState& basis_vector,
                                      std::pair<int, int> measured_pair) {
    const auto [u, v] = measured_pair;
    if (u == v || u < 0 || v < 0 || u > 3 || v > 3) {
        throw std::invalid_argument("project_measurement: measured_pair must name two distinct subsystems in 0..3");
    }
    const auto& dims = joint.dims();
    if (basis_vector.dim_left() != dims[u] || basis_vector.dim_right() != dims[v]) {
        throw std::invalid_argument("project_measurement: basis vector dimensions do not match the measured pair");
    }

    // Remaining subsystems in ascending order form the residual (rows, cols).
    std::array<int, 2> kept{};
    int k = 0;
    for (int s = 0; s < 4; ++s) {
        if (s != u && s != v) kept[k++] = s;
    }

    Eigen::MatrixXcd residual = Eigen::MatrixXcd::Zero(dims[kept[0]], dims[kept[1]]);
    std::array<int, 4> idx{};
    for (int x = 0; x < dims[kept[0]]; ++x) {
        for (int y = 0; y < dims[kept[1]]; ++y) {
            Complex acc{0.0, 0.0};
            for (int s = 0; s < dims[u]; ++s) {
                for (int t = 0; t < dims[v]; ++t) {
                    idx[kept[0]] = x;
                    idx[kept[1]] = y;
                    idx[u] = s;
                    idx[v] = t;
                    acc += std::conj(basis_vector.amp(s, t)) * joint.at(idx[0], idx[1], idx[2], idx[3]);
                }
            }
            residual(x, y) = acc;
        }
    }

    ProjectionOutcome out;
    out.probability = residual.squaredNorm();
    out.residual = std::move(residual);
    return out;
}

}  // namespace redsim
