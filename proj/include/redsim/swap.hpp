// swap.hpp
// Entanglement swapping: single swaps against either measurement family, and
// chains of swaps performed simultaneously (closed form) or sequentially
// (repeated single swaps). Both chain modes produce the same outcome ensemble.

#pragma once

#include "redsim/basis.hpp"
#include "redsim/state.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace redsim {

/// Entangling parameters of one intermediate node's measurement.
struct SwapParams {
    double n = 1.0;
    double m = 1.0;
};

/// One measurement outcome of a swap (or chain of swaps).
/// normalization is the squared norm of the unnormalized closed-form
/// amplitudes; it equals probability × the product of basis weight norms.
struct SwapOutcome {
    std::vector<std::pair<int, int>> outcome_indices;
    double probability = 0.0;
    double normalization = 0.0;
    std::optional<PureState> state;  // absent when the outcome cannot occur
};

/// Measures the inner pair of s12 ⊗ s23 in the given family. One outcome per
/// basis vector, ordered lexicographically in (r, h). Requires the inner
/// dimensions of both states to match the basis dimension.
std::vector<SwapOutcome> swap_once(const PureState& s12, const PureState& s23,
                                   const GeneralQubitBasis& basis);
std::vector<SwapOutcome> swap_once(const PureState& s12, const PureState& s23,
                                   const QuditBellBasis& basis);

/// Schmidt-diagonal representative of a state together with its Schmidt data.
/// Concurrence and entropy are unchanged by the local rotations.
std::pair<SchmidtForm, PureState> canonicalize_local(const PureState& s);

/// All g intermediate nodes of a (g+1)-link two-qubit chain measured at once.
/// 4^g outcomes, ordered lexicographically in the per-node (r, h) tuples.
/// params holds one (n, m) pair per intermediate node.
std::vector<SwapOutcome> chain_swap_simultaneous(const std::vector<PureState>& states,
                                                 const std::vector<SwapParams>& params);

/// The same chain measured node by node; outcome tuples, probabilities and
/// states (up to a global phase) agree with the simultaneous strategy.
std::vector<SwapOutcome> chain_swap_sequential(const std::vector<PureState>& states,
                                               const std::vector<SwapParams>& params);

}  // namespace redsim
