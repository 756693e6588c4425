#include "redsim/relations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redsim {

namespace {
constexpr double kCaseTol = 1e-10;
}

ResidualReport verify_concurrence_product(const PureState& s12, const PureState& s23,
                                          double n, double m) {
    if (s12.dim_left() != 2 || s12.dim_right() != 2 || s23.dim_left() != 2 ||
        s23.dim_right() != 2) {
        throw std::invalid_argument("verify_concurrence_product: resources must be two-qubit");
    }
    const GeneralQubitBasis basis(n, m);
    const double c12 = concurrence_two_qubit(s12);
    const double c23 = concurrence_two_qubit(s23);

    ResidualReport report;
    report.relation = "concurrence-product";
    for (const SwapOutcome& out : swap_once(s12, s23, basis)) {
        report.probability_sum += out.probability;
        if (!out.state.has_value()) continue;
        OutcomeResidual res;
        res.outcome_indices = out.outcome_indices;
        res.probability = out.probability;
        res.lhs = concurrence_two_qubit(*out.state);
        res.rhs = basis.transfer_factor(out.outcome_indices[0].second) /
                  (2.0 * out.normalization) * c12 * c23;
        res.residual = std::abs(res.lhs - res.rhs);
        report.max_residual = std::max(report.max_residual, res.residual);
        report.outcomes.push_back(std::move(res));
    }
    return report;
}

double concurrence_cross_term(const SchmidtForm& sf12, const SchmidtForm& sf23, int d, int h) {
    if (sf12.dim() != d || sf23.dim() != d) {
        throw std::invalid_argument("concurrence_cross_term: spectrum size does not match d");
    }
    return concurrence_cross_term(sf12.coeffs, sf23.coeffs, d, h);
}

double concurrence_cross_term(const Eigen::VectorXd& lam, const Eigen::VectorXd& mu, int d,
                              int h) {
    if (d <= 2) return 0.0;
    const double scale = 2.0 * d / (d - 1.0);  // each squared sub-concurrence carries one
    double k = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int f = i + 1; f < d; ++f) {
            const double c2_if = scale * lam[i] * lam[i] * lam[f] * lam[f];
            double inner = 0.0;
            for (int l = 0; l < d; ++l) {
                for (int m = l + 1; m < d; ++m) {
                    if (l == i && m == f) continue;
                    const int ls = (l + h) % d;
                    const int ms = (m + h) % d;
                    inner += scale * mu[ls] * mu[ls] * mu[ms] * mu[ms];
                }
            }
            k += c2_if * inner;
        }
    }
    return k;
}

ResidualReport verify_qudit_concurrence(const SchmidtForm& sf12, const SchmidtForm& sf23,
                                        int d, int h) {
    if (h < 0 || h >= d) {
        throw std::invalid_argument("verify_qudit_concurrence: h must lie in [0, d)");
    }
    const PureState a = PureState::from_spectrum(sf12.coeffs);
    const PureState b = PureState::from_spectrum(sf23.coeffs);
    const QuditBellBasis basis(d);

    const double c12 = concurrence_qudit(sf12, d);
    const double c23 = concurrence_qudit(sf23, d);
    const double k = concurrence_cross_term(sf12, sf23, d, h);

    ResidualReport report;
    report.relation = "qudit-concurrence";
    report.k_term = k;
    for (const SwapOutcome& out : swap_once(a, b, basis)) {
        report.probability_sum += out.probability;
        if (out.outcome_indices[0].second != h || !out.state.has_value()) continue;
        OutcomeResidual res;
        res.outcome_indices = out.outcome_indices;
        res.probability = out.probability;
        const double c_chi = concurrence_qudit(schmidt_decompose(*out.state), d);
        res.lhs = c_chi * c_chi;
        res.rhs = (d - 1.0) / (2.0 * d * out.normalization * out.normalization) *
                  (c12 * c12 * c23 * c23 - k);
        res.residual = std::abs(res.lhs - res.rhs);
        report.max_residual = std::max(report.max_residual, res.residual);
        report.outcomes.push_back(std::move(res));
    }
    return report;
}

ResidualReport verify_fidelity_product(const PureState& s12, const PureState& s23,
                                       double n, double m) {
    if (s12.dim_left() != 2 || s12.dim_right() != 2 || s23.dim_left() != 2 ||
        s23.dim_right() != 2) {
        throw std::invalid_argument("verify_fidelity_product: resources must be two-qubit");
    }
    const GeneralQubitBasis basis(n, m);
    const double f12 = teleportation_fidelity_pure(concurrence_two_qubit(s12));
    const double f23 = teleportation_fidelity_pure(concurrence_two_qubit(s23));

    ResidualReport report;
    report.relation = "fidelity-product";
    for (const SwapOutcome& out : swap_once(s12, s23, basis)) {
        report.probability_sum += out.probability;
        if (!out.state.has_value()) continue;
        OutcomeResidual res;
        res.outcome_indices = out.outcome_indices;
        res.probability = out.probability;
        const double f_chi = teleportation_fidelity_mixed(DensityMatrix::projector(*out.state));
        res.lhs = 3.0 * f_chi - 2.0;
        res.rhs = basis.transfer_factor(out.outcome_indices[0].second) /
                  (2.0 * out.normalization) * (3.0 * f12 - 2.0) * (3.0 * f23 - 2.0);
        res.residual = std::abs(res.lhs - res.rhs);
        report.max_residual = std::max(report.max_residual, res.residual);
        report.outcomes.push_back(std::move(res));
    }
    return report;
}

ResidualReport verify_chain_fidelity_product(const std::vector<PureState>& states,
                                             const std::vector<SwapParams>& params) {
    const int g = static_cast<int>(params.size());
    double resource_product = 1.0;
    for (const PureState& s : states) {
        resource_product *= 3.0 * teleportation_fidelity_pure(concurrence_two_qubit(s)) - 2.0;
    }

    ResidualReport report;
    report.relation = "chain-fidelity-product";
    const double two_pow_g = std::pow(2.0, g);
    for (const SwapOutcome& out : chain_swap_simultaneous(states, params)) {
        report.probability_sum += out.probability;
        if (!out.state.has_value()) continue;
        double transfer = 1.0;
        for (int k = 0; k < g; ++k) {
            transfer *= out.outcome_indices[k].second == 0 ? params[k].n : params[k].m;
        }
        OutcomeResidual res;
        res.outcome_indices = out.outcome_indices;
        res.probability = out.probability;
        const double f_chi = teleportation_fidelity_mixed(DensityMatrix::projector(*out.state));
        res.lhs = 3.0 * f_chi - 2.0;
        res.rhs = transfer / (two_pow_g * out.normalization) * resource_product;
        res.residual = std::abs(res.lhs - res.rhs);
        report.max_residual = std::max(report.max_residual, res.residual);
        report.outcomes.push_back(std::move(res));
    }
    return report;
}

double swapped_entropy(const SchmidtForm& sf12, const SchmidtForm& sf23, int r, int h, int d) {
    if (sf12.dim() != d || sf23.dim() != d) {
        throw std::invalid_argument("swapped_entropy: spectrum size does not match d");
    }
    if (r < 0 || r >= d || h < 0 || h >= d) {
        throw std::invalid_argument("swapped_entropy: outcome indices out of range");
    }
    double norm = 0.0;
    for (int i = 0; i < d; ++i) {
        const double li = sf12.coeffs[i];
        const double mi = sf23.coeffs[(i + h) % d];
        norm += li * li * mi * mi;
    }
    if (norm < kImpossibleProb) {
        throw std::domain_error("swapped_entropy: outcome is impossible");
    }
    double entropy = 0.0;
    for (int i = 0; i < d; ++i) {
        const double li = sf12.coeffs[i];
        const double mi = sf23.coeffs[(i + h) % d];
        const double w = li * li * mi * mi;
        if (w < 1e-300) continue;
        entropy -= w / norm * std::log2(w / norm);
    }
    return entropy < 0.0 ? 0.0 : entropy;
}

bool spectrum_is_maximal(const Eigen::VectorXd& coeffs) {
    const double uniform = 1.0 / std::sqrt(static_cast<double>(coeffs.size()));
    return (coeffs.array() - uniform).abs().maxCoeff() <= kCaseTol;
}

CapacityCaseReport classify_capacity_case(const SchmidtForm& sf12, const SchmidtForm& sf23,
                                          int d) {
    if (sf12.dim() != d || sf23.dim() != d) {
        throw std::invalid_argument("classify_capacity_case: spectrum size does not match d");
    }
    const bool max12 = spectrum_is_maximal(sf12.coeffs);
    const bool max23 = spectrum_is_maximal(sf23.coeffs);

    CapacityCaseReport report;
    report.capacity_12 =
        dense_coding_capacity_pure(PureState::from_spectrum(sf12.coeffs));
    report.capacity_23 =
        dense_coding_capacity_pure(PureState::from_spectrum(sf23.coeffs));

    if (max12 && max23) {
        report.label = CapacityCase::both_maximal;
        report.reference = 2.0 * std::log2(static_cast<double>(d));
    } else if (max12 || max23) {
        report.label = CapacityCase::one_maximal;
        report.reference = max12 ? report.capacity_23 : report.capacity_12;
    } else {
        report.label = CapacityCase::neither_maximal;
        report.reference = std::max(report.capacity_12, report.capacity_23);
    }

    const QuditBellBasis basis(d);
    const auto outcomes = swap_once(PureState::from_spectrum(sf12.coeffs),
                                    PureState::from_spectrum(sf23.coeffs), basis);
    for (const SwapOutcome& out : outcomes) {
        if (!out.state.has_value()) continue;
        OutcomeCapacity oc;
        oc.r = out.outcome_indices[0].first;
        oc.h = out.outcome_indices[0].second;
        oc.probability = out.probability;
        oc.capacity = dense_coding_capacity_pure(*out.state);
        report.max_outcome_capacity = std::max(report.max_outcome_capacity, oc.capacity);
        if (report.label == CapacityCase::neither_maximal) {
            if (oc.capacity < report.reference - kCaseTol) ++report.strict_count;
        } else {
            report.max_deviation =
                std::max(report.max_deviation, std::abs(oc.capacity - report.reference));
        }
        report.outcomes.push_back(oc);
    }

    if (report.label == CapacityCase::neither_maximal) {
        report.relation_holds = report.max_outcome_capacity <= report.reference + kCaseTol;
    } else {
        report.relation_holds = report.max_deviation <= kCaseTol;
    }
    return report;
}

}  // namespace redsim
