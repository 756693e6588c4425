// measures.hpp
// Entanglement and capacity functionals: concurrence, teleportation fidelity,
// super-dense-coding capacity.

#pragma once

#include "redsim/density.hpp"
#include "redsim/state.hpp"

#include <Eigen/Dense>

namespace redsim {

/// 2|det(amp)| for a two-qubit pure state; equals 2λ₀λ₁ of the Schmidt spectrum.
double concurrence_two_qubit(const PureState& s);

/// √( (2d/(d−1)) Σ_{i<j} λᵢ²λⱼ² ). Reduces to the two-qubit value at d = 2.
double concurrence_qudit(const SchmidtForm& sf, int d);

/// Same functional on a bare coefficient array (order-independent).
double spectrum_concurrence(const Eigen::VectorXd& coeffs, int d);

/// Concurrence of any square pure state: determinant route for qubits,
/// Schmidt route otherwise.
double concurrence(const PureState& s);

/// √(2d/(d−1)) λᵢλⱼ — the concurrence a state would have if only Schmidt
/// coefficients i and j survived. Requires i < j.
double sub_concurrence(const SchmidtForm& sf, int i, int j, int d);

/// Local Bloch vectors and correlation matrix of a two-qubit density matrix:
/// r_i = Tr[ρ(σᵢ⊗I)], s_i = Tr[ρ(I⊗σᵢ)], t_ij = Tr[ρ(σᵢ⊗σⱼ)], Pauli order (x,y,z).
struct BlochForm {
    Eigen::Vector3d r_vec;
    Eigen::Vector3d s_vec;
    Eigen::Matrix3d t;
};

BlochForm bloch_form(const DensityMatrix& rho);

/// F = (2 + C)/3 for a pure two-qubit resource of concurrence C.
double teleportation_fidelity_pure(double concurrence);

/// F = ½[1 + ⅓ Σᵢ √uᵢ] with uᵢ the eigenvalues of TᵀT from the Bloch form.
double teleportation_fidelity_mixed(const DensityMatrix& rho);

/// log₂d + max(0, S(ρ_B) − S(ρ_AB)) in bits, for ρ_AB on H_d ⊗ H_d; values
/// above log₂d signal an advantage over the unassisted channel.
double dense_coding_capacity_mixed(const DensityMatrix& rho_ab, int d);

/// log₂d + S(ρ_B) in bits; S(ρ_B) is the entropy of the squared Schmidt spectrum.
double dense_coding_capacity_pure(const PureState& s);

}  // namespace redsim
