#include "redsim/swap.hpp"

#include <cmath>
#include <stdexcept>

namespace redsim {

namespace {

// Rows of b shifted by ⊕h: out(t, q) = b(t⊕h, q).
Eigen::MatrixXcd shift_rows(const Eigen::MatrixXcd& b, int h) {
    Eigen::MatrixXcd out(b.rows(), b.cols());
    const int d = static_cast<int>(b.rows());
    for (int t = 0; t < d; ++t) {
        out.row(t) = b.row((t + h) % d);
    }
    return out;
}

// Unnormalized post-measurement coefficients for outcome (r,h) of one swap:
// c(i,q) = Σ_t conj(phase)·weight · a(i,t) b(t⊕h,q). The 1/√B of the basis
// vector is accounted for in the probability, not here.
Eigen::MatrixXcd contract_qubit(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                const GeneralQubitBasis& basis, int r, int h) {
    Eigen::Vector2cd diag;
    for (int t = 0; t < 2; ++t) {
        diag(t) = GeneralQubitBasis::phase(r, t) * basis.weight(r, h, t);
    }
    return a * (diag.asDiagonal() * shift_rows(b, h));
}

Eigen::MatrixXcd contract_qudit(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                const QuditBellBasis& basis, int r, int h) {
    const int d = basis.dim();
    Eigen::VectorXcd diag(d);
    for (int t = 0; t < d; ++t) {
        diag(t) = std::conj(basis.phase(r, t));
    }
    return a * (diag.asDiagonal() * shift_rows(b, h));
}

SwapOutcome make_outcome(std::vector<std::pair<int, int>> indices, Eigen::MatrixXcd coeffs,
                         double weight_norm_product) {
    SwapOutcome out;
    out.outcome_indices = std::move(indices);
    out.normalization = coeffs.squaredNorm();
    out.probability = out.normalization / weight_norm_product;
    if (out.probability >= kImpossibleProb) {
        out.state = PureState::normalized(std::move(coeffs));
    }
    return out;
}

void check_inner_dims(const PureState& s12, const PureState& s23, int d) {
    if (s12.dim_right() != d || s23.dim_left() != d) {
        throw std::invalid_argument("swap_once: inner dimensions do not match the basis dimension");
    }
}

}  // namespace

std::vector<SwapOutcome> swap_once(const PureState& s12, const PureState& s23,
                                   const GeneralQubitBasis& basis) {
    check_inner_dims(s12, s23, GeneralQubitBasis::dim());
    std::vector<SwapOutcome> outcomes;
    outcomes.reserve(4);
    for (int r = 0; r < 2; ++r) {
        for (int h = 0; h < 2; ++h) {
            outcomes.push_back(make_outcome({{r, h}},
                                            contract_qubit(s12.amp(), s23.amp(), basis, r, h),
                                            basis.weight_norm(r, h)));
        }
    }
    return outcomes;
}

std::vector<SwapOutcome> swap_once(const PureState& s12, const PureState& s23,
                                   const QuditBellBasis& basis) {
    const int d = basis.dim();
    check_inner_dims(s12, s23, d);
    std::vector<SwapOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(d) * d);
    for (int r = 0; r < d; ++r) {
        for (int h = 0; h < d; ++h) {
            outcomes.push_back(make_outcome({{r, h}},
                                            contract_qudit(s12.amp(), s23.amp(), basis, r, h),
                                            static_cast<double>(d)));
        }
    }
    return outcomes;
}

std::pair<SchmidtForm, PureState> canonicalize_local(const PureState& s) {
    SchmidtForm sf = schmidt_decompose(s);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(s.dim_left(), s.dim_right());
    for (int k = 0; k < sf.coeffs.size(); ++k) {
        diag(k, k) = sf.coeffs[k];
    }
    return {std::move(sf), PureState::normalized(std::move(diag))};
}

namespace {

void check_chain_args(const std::vector<PureState>& states, const std::vector<SwapParams>& params) {
    if (states.size() < 2) {
        throw std::invalid_argument("chain swap: need at least two resource states");
    }
    if (params.size() != states.size() - 1) {
        throw std::invalid_argument("chain swap: need exactly one (n, m) pair per intermediate node");
    }
    for (const PureState& s : states) {
        if (s.dim_left() != 2 || s.dim_right() != 2) {
            throw std::invalid_argument("chain swap: every resource must be two-qubit");
        }
    }
}

}  // namespace

std::vector<SwapOutcome> chain_swap_simultaneous(const std::vector<PureState>& states,
                                                 const std::vector<SwapParams>& params) {
    check_chain_args(states, params);
    const int g = static_cast<int>(params.size());

    std::vector<GeneralQubitBasis> bases;
    bases.reserve(params.size());
    for (const SwapParams& p : params) {
        bases.emplace_back(p.n, p.m);
    }

    std::vector<SwapOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(1) << (2 * g));
    std::vector<std::pair<int, int>> indices(g);

    // Depth-first over per-node outcomes in (r, h) order, folding the chain
    // product a⁰ · Π_k (diag_k · shift_k · a^{k+1}) as we descend.
    auto descend = [&](auto&& self, int k, const Eigen::MatrixXcd& partial,
                       double weight_norm_product) -> void {
        if (k == g) {
            outcomes.push_back(make_outcome(indices, partial, weight_norm_product));
            return;
        }
        for (int r = 0; r < 2; ++r) {
            for (int h = 0; h < 2; ++h) {
                indices[k] = {r, h};
                self(self, k + 1, contract_qubit(partial, states[k + 1].amp(), bases[k], r, h),
                     weight_norm_product * bases[k].weight_norm(r, h));
            }
        }
    };
    descend(descend, 0, states[0].amp(), 1.0);
    return outcomes;
}

std::vector<SwapOutcome> chain_swap_sequential(const std::vector<PureState>& states,
                                               const std::vector<SwapParams>& params) {
    check_chain_args(states, params);
    const int g = static_cast<int>(params.size());

    std::vector<GeneralQubitBasis> bases;
    bases.reserve(params.size());
    for (const SwapParams& p : params) {
        bases.emplace_back(p.n, p.m);
    }

    std::vector<SwapOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(1) << (2 * g));
    std::vector<std::pair<int, int>> indices(g);

    // Measure node by node; joint probability is the product of conditionals.
    // Once an intermediate outcome is impossible the whole subtree carries
    // zero probability and no state.
    auto descend = [&](auto&& self, int k, const std::optional<PureState>& current,
                       double joint_probability, double weight_norm_product) -> void {
        if (k == g) {
            SwapOutcome out;
            out.outcome_indices = indices;
            out.probability = joint_probability;
            out.normalization = joint_probability * weight_norm_product;
            if (joint_probability >= kImpossibleProb) out.state = current;
            outcomes.push_back(std::move(out));
            return;
        }
        if (!current.has_value()) {
            for (int r = 0; r < 2; ++r) {
                for (int h = 0; h < 2; ++h) {
                    indices[k] = {r, h};
                    self(self, k + 1, std::nullopt, 0.0,
                         weight_norm_product * bases[k].weight_norm(r, h));
                }
            }
            return;
        }
        const auto step = swap_once(*current, states[k + 1], bases[k]);
        for (const SwapOutcome& so : step) {
            indices[k] = so.outcome_indices.front();
            self(self, k + 1, so.state, joint_probability * so.probability,
                 weight_norm_product * bases[k].weight_norm(so.outcome_indices.front().first,
                                                            so.outcome_indices.front().second));
        }
    };
    descend(descend, 0, states[0], 1.0, 1.0);
    return outcomes;
}

}  // namespace redsim
