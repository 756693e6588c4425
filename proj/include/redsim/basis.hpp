// basis.hpp
// Bipartite measurement bases for entanglement swapping: the entangling-parameter
// qubit family and the qudit Bell family. Both are complete orthonormal families
// indexed by (r, h), with every vector supported on pairs |t⟩|t⊕h⟩.

#pragma once

#include "redsim/state.hpp"

#include <array>
#include <vector>

namespace redsim {

/// Four orthonormal two-qubit vectors
///   |v_rh⟩ = (1/√B_rh) Σ_t (−1)^{rt} w(r,h,t) |t⟩|t⊕h⟩,
/// where the weight w is n, m or 1 depending on (r,h,t) and B_rh = Σ_t w².
/// n = m = 1 reproduces the standard Bell basis; n = 0 (or m = 0) degenerates
/// the h = 0 (h = 1) pair into product vectors but keeps the family orthonormal.
class GeneralQubitBasis {
public:
    /// Requires real n, m in [0, 1].
    GeneralQubitBasis(double n, double m);

    double n() const { return n_; }
    double m() const { return m_; }

    /// Weight of the |t⟩|t⊕h⟩ term before normalization.
    double weight(int r, int h, int t) const;

    /// B_rh = Σ_t weight(r,h,t)².
    double weight_norm(int r, int h) const;

    /// |det| of the unnormalized 2×2 coefficient matrix of vector (r,h):
    /// the factor by which one swap multiplies the product of resource
    /// concurrences (before the 1/2M normalization). Equals n for h = 0, m for h = 1.
    double transfer_factor(int h) const;

    /// Phase (−1)^{rt} of the |t⟩|t⊕h⟩ term.
    static double phase(int r, int t) { return (r * t) % 2 == 0 ? 1.0 : -1.0; }

    /// True when vector (r,h) is a product vector (zero entangling weight).
    bool degenerate(int r, int h) const;

    const PureState& vector(int r, int h) const;

    static constexpr int dim() { return 2; }
    static constexpr int size() { return 4; }

private:
    double n_;
    double m_;
    std::vector<PureState> vectors_;  // index 2r + h
};

/// The d² orthonormal vectors |v_rh⟩ = (1/√d) Σ_t ω^{rt} |t⟩|t⊕h⟩ with
/// ω = e^{2πi/d} and ⊕ addition mod d.
class QuditBellBasis {
public:
    explicit QuditBellBasis(int d);

    int dim() const { return d_; }
    int size() const { return d_ * d_; }

    /// ω^{rt}.
    Complex phase(int r, int t) const;

    const PureState& vector(int r, int h) const;

private:
    int d_;
    std::vector<PureState> vectors_;  // index r·d + h
};

}  // namespace redsim
