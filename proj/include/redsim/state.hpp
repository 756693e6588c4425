// state.hpp
// Pure bipartite states, Schmidt decomposition, four-party joint tensors
// and projective measurement of a subsystem pair.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace redsim {

using Complex = std::complex<double>;

// Tolerance for "this vector is normalized" checks on constructed states.
inline constexpr double kNormTol = 1e-12;
// Below this, a measurement outcome is treated as impossible and carries no state.
inline constexpr double kImpossibleProb = 1e-14;

/// A normalized pure state on H_{d_left} ⊗ H_{d_right}.
/// amp(i, j) is the coefficient of |i⟩|j⟩.
class PureState {
public:
    /// Requires Σ|amp|² = 1 within kNormTol and both dimensions ≥ 2.
    explicit PureState(Eigen::MatrixXcd amp);

    /// Rescales amp to unit norm. Rejects vectors with vanishing norm.
    static PureState normalized(Eigen::MatrixXcd amp);

    /// Computational basis state |i⟩|j⟩.
    static PureState computational(int d_left, int d_right, int i, int j);

    /// (1/√d) Σ_t |t⟩|t⟩.
    static PureState maximally_entangled(int d);

    /// Σ_k coeffs[k] |k⟩|k⟩ for a valid Schmidt spectrum (Σλ² = 1, λ ≥ 0).
    static PureState from_spectrum(const Eigen::VectorXd& coeffs);

    int dim_left() const { return static_cast<int>(amp_.rows()); }
    int dim_right() const { return static_cast<int>(amp_.cols()); }
    const Eigen::MatrixXcd& amp() const { return amp_; }
    Complex amp(int i, int j) const { return amp_(i, j); }

    /// Exchange the two subsystems: amp ↦ ampᵀ.
    PureState swapped_sides() const;

    /// |⟨this|other⟩| — phase-insensitive overlap.
    double overlap(const PureState& other) const;

private:
    Eigen::MatrixXcd amp_;
};

/// Canonical Schmidt data of a pure bipartite state:
/// amp = left_unitary · diag(coeffs) · right_unitaryᵀ with coeffs descending, ≥ 0.
struct SchmidtForm {
    Eigen::VectorXd coeffs;
    Eigen::MatrixXcd left_unitary;
    Eigen::MatrixXcd right_unitary;

    /// Wraps a bare spectrum (descending, Σλ²=1) with identity rotations.
    static SchmidtForm from_spectrum(Eigen::VectorXd coeffs);

    int dim() const { return static_cast<int>(coeffs.size()); }
};

/// Singular value decomposition of amp, with the phase freedom pushed into
/// the unitaries so the coefficients come out real, non-negative, descending.
SchmidtForm schmidt_decompose(const PureState& s);

/// Four-party amplitude tensor T[i][j][p][q]; storage is row-major flat.
class JointState {
public:
    explicit JointState(std::array<int, 4> dims);

    const std::array<int, 4>& dims() const { return dims_; }

    Complex& at(int i, int j, int p, int q) { return data_[index(i, j, p, q)]; }
    Complex at(int i, int j, int p, int q) const { return data_[index(i, j, p, q)]; }

    double norm() const;

private:
    std::size_t index(int i, int j, int p, int q) const {
        return ((static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + p) * dims_[3] + q;
    }

    std::array<int, 4> dims_;
    std::vector<Complex> data_;
};

/// T[i][j][p][q] = a.amp(i,j) · b.amp(p,q); unit norm for normalized inputs.
JointState tensor(const PureState& a, const PureState& b);

/// Result of projecting two subsystems of a joint state onto a basis vector.
/// residual is the unnormalized state of the two remaining subsystems
/// (smaller subsystem index first); probability is its squared norm.
struct ProjectionOutcome {
    double probability = 0.0;
    Eigen::MatrixXcd residual;

    bool possible() const { return probability >= kImpossibleProb; }

    /// residual / √probability. Throws std::domain_error for impossible outcomes.
    PureState post_state() const;
};

/// Contracts basis_vector† against the subsystems named by measured_pair
/// (first slot of the vector ↔ measured_pair.first, second ↔ .second).
ProjectionOutcome project_measurement(const JointState& joint,
                                      const PureState& basis_vector,
                                      std::pair<int, int> measured_pair);

}  // namespace redsim
