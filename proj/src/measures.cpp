#include "redsim/measures.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redsim {

namespace {

const Eigen::Matrix2cd& pauli(int i) {
    static const Eigen::Matrix2cd x = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    static const Eigen::Matrix2cd y =
        (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    switch (i) {
        case 0: return x;
        case 1: return y;
        default: return z;
    }
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

double pair_sum(const Eigen::VectorXd& coeffs) {
    double sum = 0.0;
    for (int i = 0; i < coeffs.size(); ++i)
        for (int j = i + 1; j < coeffs.size(); ++j)
            sum += coeffs[i] * coeffs[i] * coeffs[j] * coeffs[j];
    return sum;
}

}  // namespace

double concurrence_two_qubit(const PureState& s) {
    if (s.dim_left() != 2 || s.dim_right() != 2) {
        throw std::invalid_argument("concurrence_two_qubit: state must be two-qubit");
    }
    return 2.0 * std::abs(s.amp().determinant());
}

double concurrence_qudit(const SchmidtForm& sf, int d) {
    if (d < 2 || sf.dim() != d) {
        throw std::invalid_argument("concurrence_qudit: spectrum size does not match d");
    }
    return spectrum_concurrence(sf.coeffs, d);
}

double spectrum_concurrence(const Eigen::VectorXd& coeffs, int d) {
    if (d < 2 || coeffs.size() != d) {
        throw std::invalid_argument("spectrum_concurrence: spectrum size does not match d");
    }
    const double scale = 2.0 * d / (d - 1.0);
    return std::sqrt(scale * pair_sum(coeffs));
}

double concurrence(const PureState& s) {
    if (s.dim_left() != s.dim_right()) {
        throw std::invalid_argument("concurrence: state must be square (d ⊗ d)");
    }
    if (s.dim_left() == 2) return concurrence_two_qubit(s);
    return concurrence_qudit(schmidt_decompose(s), s.dim_left());
}

double sub_concurrence(const SchmidtForm& sf, int i, int j, int d) {
    if (d < 2 || sf.dim() != d) {
        throw std::invalid_argument("sub_concurrence: spectrum size does not match d");
    }
    if (i < 0 || j >= d || i >= j) {
        throw std::invalid_argument("sub_concurrence: indices must satisfy 0 <= i < j < d");
    }
    return std::sqrt(2.0 * d / (d - 1.0)) * sf.coeffs[i] * sf.coeffs[j];
}

BlochForm bloch_form(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("bloch_form: density matrix must be two-qubit");
    }
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    BlochForm bf;
    for (int i = 0; i < 3; ++i) {
        bf.r_vec[i] = (rho.rho() * kron2(pauli(i), id)).trace().real();
        bf.s_vec[i] = (rho.rho() * kron2(id, pauli(i))).trace().real();
        for (int j = 0; j < 3; ++j) {
            bf.t(i, j) = (rho.rho() * kron2(pauli(i), pauli(j))).trace().real();
        }
    }
    return bf;
}

double teleportation_fidelity_pure(double concurrence) {
    if (concurrence < -kNormTol || concurrence > 1.0 + kNormTol) {
        throw std::invalid_argument("teleportation_fidelity_pure: concurrence must lie in [0, 1]");
    }
    return (2.0 + std::clamp(concurrence, 0.0, 1.0)) / 3.0;
}

double teleportation_fidelity_mixed(const DensityMatrix& rho) {
    const BlochForm bf = bloch_form(rho);
    // Σ√uᵢ over the eigenvalues of TᵀT is the sum of singular values of T;
    // taking it from the SVD avoids squaring the round-off of small entries.
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(bf.t);
    return 0.5 * (1.0 + svd.singularValues().sum() / 3.0);
}

double dense_coding_capacity_mixed(const DensityMatrix& rho_ab, int d) {
    if (d < 2 || rho_ab.dim() != d * d) {
        throw std::invalid_argument("dense_coding_capacity_mixed: matrix is not on H_d ⊗ H_d");
    }
    const DensityMatrix rho_b = partial_trace(rho_ab, d, d, Side::right);
    // A negative entropy difference means the state gives no advantage; the
    // plain d-level payload still carries log₂d bits.
    const double advantage = von_neumann_entropy(rho_b) - von_neumann_entropy(rho_ab);
    return std::log2(static_cast<double>(d)) + std::max(0.0, advantage);
}

double dense_coding_capacity_pure(const PureState& s) {
    if (s.dim_left() != s.dim_right()) {
        throw std::invalid_argument("dense_coding_capacity_pure: state must be square (d ⊗ d)");
    }
    const SchmidtForm sf = schmidt_decompose(s);
    return std::log2(static_cast<double>(s.dim_left())) + spectrum_entropy(sf.coeffs);
}

}  // namespace redsim
