#include "redsim/density.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace redsim {

namespace {
constexpr double kEigClamp = 1e-12;   // spectrum noise floor for entropies
constexpr double kNegEigTol = 1e-10;  // how negative an eigenvalue may be before rejection
}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 2) {
        throw std::invalid_argument("DensityMatrix: matrix must be square with dim >= 2");
    }
    if (std::abs(rho_.trace().real() - 1.0) > kNormTol || std::abs(rho_.trace().imag()) > kNormTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
        throw std::invalid_argument("DensityMatrix: matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kNegEigTol) {
        throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::projector(const PureState& s) {
    const int n = s.dim_left() * s.dim_right();
    Eigen::VectorXcd vec(n);
    for (int i = 0; i < s.dim_left(); ++i)
        for (int j = 0; j < s.dim_right(); ++j)
            vec(i * s.dim_right() + j) = s.amp(i, j);
    return DensityMatrix(vec * vec.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 2) {
        throw std::invalid_argument("DensityMatrix::maximally_mixed: dim must be >= 2");
    }
    return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_left, int dim_right, Side keep) {
    if (dim_left < 2 || dim_right < 2 || dim_left * dim_right != rho.dim()) {
        throw std::invalid_argument("partial_trace: dimensions do not factor the density matrix");
    }
    const auto& m = rho.rho();
    auto idx = [dim_right](int a, int b) { return a * dim_right + b; };

    if (keep == Side::left) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_left, dim_left);
        for (int a = 0; a < dim_left; ++a)
            for (int c = 0; c < dim_left; ++c)
                for (int b = 0; b < dim_right; ++b)
                    out(a, c) += m(idx(a, b), idx(c, b));
        return DensityMatrix(std::move(out));
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_right, dim_right);
    for (int b = 0; b < dim_right; ++b)
        for (int d = 0; d < dim_right; ++d)
            for (int a = 0; a < dim_left; ++a)
                out(b, d) += m(idx(a, b), idx(a, d));
    return DensityMatrix(std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.rho(), Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        const double e = es.eigenvalues()[k];
        if (e < kEigClamp) continue;
        entropy -= e * std::log2(e);
    }
    return entropy < 0.0 ? 0.0 : entropy;
}

double spectrum_entropy(const Eigen::VectorXd& schmidt_coeffs) {
    double entropy = 0.0;
    for (int k = 0; k < schmidt_coeffs.size(); ++k) {
        const double p = schmidt_coeffs[k] * schmidt_coeffs[k];
        if (p < kEigClamp) continue;
        entropy -= p * std::log2(p);
    }
    return entropy < 0.0 ? 0.0 : entropy;
}

}  // namespace redsim
