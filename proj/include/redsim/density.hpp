// density.hpp
// Small density matrices: validation, partial trace, von Neumann entropy.

#pragma once

#include "redsim/state.hpp"

#include <Eigen/Dense>

namespace redsim {

/// A physical density matrix: trace 1, Hermitian, positive semidefinite
/// (all within construction tolerances).
class DensityMatrix {
public:
    explicit DensityMatrix(Eigen::MatrixXcd rho);

    /// |s⟩⟨s| on the composite space, with index k = i·d_right + j.
    static DensityMatrix projector(const PureState& s);

    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Eigen::MatrixXcd& rho() const { return rho_; }

private:
    Eigen::MatrixXcd rho_;
};

enum class Side { left, right };

/// Reduced state of one factor of rho on H_{dim_left} ⊗ H_{dim_right}.
/// Rejects dimensions that do not factor rho.
DensityMatrix partial_trace(const DensityMatrix& rho, int dim_left, int dim_right, Side keep);

/// −Σ e_k log₂ e_k over the spectrum, with eigenvalues below 1e-12 clamped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy (bits) of the squared-coefficient distribution of a Schmidt spectrum.
double spectrum_entropy(const Eigen::VectorXd& schmidt_coeffs);

}  // namespace redsim
