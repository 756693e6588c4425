#include "redsim/verify.hpp"

#include "redsim/measures.hpp"
#include "redsim/relations.hpp"
#include "redsim/sampling.hpp"
#include "redsim/swap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace redsim {

namespace {

// Shared bookkeeping: track the worst residual and where it happened.
struct Tracker {
    double max_residual = 0.0;
    std::string worst_case;
    long outcomes = 0;

    void update(double residual, long outcomes_added, const std::string& description) {
        outcomes += outcomes_added;
        if (residual > max_residual) {
            max_residual = residual;
            worst_case = description;
        }
    }
};

std::string trial_tag(const char* what, int trial) {
    std::ostringstream oss;
    oss << what << " trial " << trial;
    return oss.str();
}

SuiteResult finish(std::string name, const Tracker& t, long trials, double tolerance) {
    SuiteResult r;
    r.name = std::move(name);
    r.trials = trials;
    r.outcomes_checked = t.outcomes;
    r.max_residual = t.max_residual;
    r.worst_case = t.worst_case;
    r.pass = t.max_residual < tolerance;
    return r;
}

SuiteResult suite_concurrence_product(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed);
    Tracker t;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const PureState s12 = sampler.pure_state(2, 2);
        const PureState s23 = sampler.pure_state(2, 2);
        const SwapParams p = sampler.swap_params();
        const ResidualReport rep = verify_concurrence_product(s12, s23, p.n, p.m);
        t.update(rep.max_residual, static_cast<long>(rep.outcomes.size()),
                 trial_tag("pair", trial));
        prob.update(std::abs(rep.probability_sum - 1.0), 1, trial_tag("pair", trial));
    }
    return finish("concurrence-product", t, cfg.trials, cfg.tolerance);
}

SuiteResult suite_qubit_bell_concurrence(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed + 1);
    Tracker t;
    double max_k = 0.0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const SchmidtForm sf12 = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(2));
        const SchmidtForm sf23 = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(2));
        for (int h = 0; h < 2; ++h) {
            const ResidualReport rep = verify_qudit_concurrence(sf12, sf23, 2, h);
            max_k = std::max(max_k, std::abs(rep.k_term));
            t.update(rep.max_residual, static_cast<long>(rep.outcomes.size()),
                     trial_tag("spectrum pair", trial));
            if (h == 0) {
                prob.update(std::abs(rep.probability_sum - 1.0), 1,
                            trial_tag("spectrum pair", trial));
            }
        }
    }
    SuiteResult r = finish("qubit-bell-concurrence", t, cfg.trials, cfg.tolerance);
    if (max_k != 0.0) {
        r.pass = false;
        r.note = "cross term K nonzero at d = 2";
    } else {
        r.note = "cross term K = 0 for every pair";
    }
    return r;
}

SuiteResult suite_qudit_concurrence(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed + 2);
    Tracker t;
    const int per_dim = std::max(1, cfg.trials / 5);
    long trials = 0;
    for (int d = 3; d <= 5; ++d) {
        for (int trial = 0; trial < per_dim; ++trial) {
            const SchmidtForm sf12 = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
            const SchmidtForm sf23 = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
            for (int h = 0; h < d; ++h) {
                const ResidualReport rep = verify_qudit_concurrence(sf12, sf23, d, h);
                std::ostringstream oss;
                oss << "d=" << d << " trial " << trial << " h=" << h;
                t.update(rep.max_residual, static_cast<long>(rep.outcomes.size()), oss.str());
                if (h == 0) prob.update(std::abs(rep.probability_sum - 1.0), 1, oss.str());
            }
            ++trials;
        }
    }
    return finish("qudit-concurrence", t, trials, cfg.tolerance);
}

SuiteResult suite_fidelity_product(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed);  // same inputs as the concurrence-product suite
    Tracker t;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const PureState s12 = sampler.pure_state(2, 2);
        const PureState s23 = sampler.pure_state(2, 2);
        const SwapParams p = sampler.swap_params();
        const ResidualReport rep = verify_fidelity_product(s12, s23, p.n, p.m);
        t.update(rep.max_residual, static_cast<long>(rep.outcomes.size()),
                 trial_tag("pair", trial));
        prob.update(std::abs(rep.probability_sum - 1.0), 1, trial_tag("pair", trial));
    }
    return finish("fidelity-product", t, cfg.trials, cfg.tolerance);
}

SuiteResult suite_chain_fidelity_product(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed + 3);
    Tracker t;
    const int per_g = std::max(1, cfg.trials / 5);
    long trials = 0;
    for (int g = 2; g <= 3; ++g) {
        for (int trial = 0; trial < per_g; ++trial) {
            std::vector<PureState> states;
            std::vector<SwapParams> params;
            for (int k = 0; k <= g; ++k) states.push_back(sampler.pure_state(2, 2));
            for (int k = 0; k < g; ++k) params.push_back(sampler.swap_params());
            const ResidualReport rep = verify_chain_fidelity_product(states, params);
            std::ostringstream oss;
            oss << "g=" << g << " trial " << trial;
            t.update(rep.max_residual, static_cast<long>(rep.outcomes.size()), oss.str());
            prob.update(std::abs(rep.probability_sum - 1.0), 1, oss.str());
            ++trials;
        }
    }
    return finish("chain-fidelity-product", t, trials, cfg.tolerance);
}

SuiteResult suite_sequential_equivalence(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed + 4);
    Tracker t;
    const int per_g = std::max(1, cfg.trials / 10);
    long trials = 0;
    for (int g = 2; g <= 3; ++g) {
        const int count = g == 2 ? per_g : std::max(1, per_g / 2);
        for (int trial = 0; trial < count; ++trial) {
            std::vector<PureState> states;
            std::vector<SwapParams> params;
            for (int k = 0; k <= g; ++k) states.push_back(sampler.pure_state(2, 2));
            for (int k = 0; k < g; ++k) params.push_back(sampler.swap_params());
            const auto sim = chain_swap_simultaneous(states, params);
            const auto seq = chain_swap_sequential(states, params);
            double prob_sum = 0.0;
            std::ostringstream oss;
            oss << "g=" << g << " trial " << trial;
            for (std::size_t k = 0; k < sim.size(); ++k) {
                prob_sum += sim[k].probability;
                const double dp = std::abs(sim[k].probability - seq[k].probability);
                double overlap_gap = 0.0;
                if (sim[k].state.has_value() && seq[k].state.has_value()) {
                    overlap_gap = 1.0 - sim[k].state->overlap(*seq[k].state);
                }
                t.update(std::max(dp, overlap_gap), 1, oss.str());
            }
            prob.update(std::abs(prob_sum - 1.0), 1, oss.str());
            ++trials;
        }
    }
    return finish("sequential-vs-simultaneous", t, trials, cfg.tolerance);
}

SuiteResult suite_swapped_entropy(const VerifyConfig& cfg, Tracker& prob) {
    Sampler sampler(cfg.seed + 5);
    Tracker t;
    const int count = std::max(1, cfg.trials / 2);
    for (int trial = 0; trial < count; ++trial) {
        const int d = 2 + trial % 4;
        const SchmidtForm sf12 = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
        const SchmidtForm sf23 = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
        const auto outcomes = swap_once(PureState::from_spectrum(sf12.coeffs),
                                        PureState::from_spectrum(sf23.coeffs), QuditBellBasis(d));
        double prob_sum = 0.0;
        std::ostringstream oss;
        oss << "d=" << d << " trial " << trial;
        for (const SwapOutcome& out : outcomes) {
            prob_sum += out.probability;
            if (!out.state.has_value()) continue;
            const auto [r, h] = out.outcome_indices[0];
            const double formula = swapped_entropy(sf12, sf23, r, h, d);
            const double measured = von_neumann_entropy(
                partial_trace(DensityMatrix::projector(*out.state), d, d, Side::right));
            t.update(std::abs(formula - measured), 1, oss.str());
        }
        prob.update(std::abs(prob_sum - 1.0), 1, oss.str());
    }
    return finish("swapped-entropy", t, count, cfg.tolerance);
}

SuiteResult suite_capacity_equalities(const VerifyConfig& cfg) {
    Sampler sampler(cfg.seed + 6);
    Tracker t;
    const int count = std::max(1, cfg.trials / 2);
    for (int trial = 0; trial < count; ++trial) {
        const int d = 2 + trial % 4;
        const Eigen::VectorXd uniform =
            Eigen::VectorXd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
        const SchmidtForm max_sf = SchmidtForm::from_spectrum(uniform);
        const SchmidtForm other = SchmidtForm::from_spectrum(sampler.nonmaximal_spectrum(d));

        std::ostringstream oss;
        oss << "d=" << d << " trial " << trial;
        const CapacityCaseReport both = classify_capacity_case(max_sf, max_sf, d);
        t.update(both.max_deviation, static_cast<long>(both.outcomes.size()), oss.str() + " (both maximal)");
        const CapacityCaseReport left = classify_capacity_case(max_sf, other, d);
        t.update(left.max_deviation, static_cast<long>(left.outcomes.size()), oss.str() + " (left maximal)");
        const CapacityCaseReport right = classify_capacity_case(other, max_sf, d);
        t.update(right.max_deviation, static_cast<long>(right.outcomes.size()), oss.str() + " (right maximal)");
    }
    SuiteResult r = finish("capacity-case-equalities", t, count, 1e-10);
    r.note = "maximal-resource capacity equalities, tolerance 1e-10";
    return r;
}

SuiteResult suite_capacity_bound(const VerifyConfig& cfg) {
    Sampler sampler(cfg.seed + 7);
    const int count = std::max(1, cfg.trials / 2);
    int violations = 0;
    double worst_excess = 0.0;
    std::string worst_case;
    long outcomes = 0;
    for (int trial = 0; trial < count; ++trial) {
        const int d = 2 + trial % 4;
        const SchmidtForm sf12 = SchmidtForm::from_spectrum(sampler.nonmaximal_spectrum(d));
        const SchmidtForm sf23 = SchmidtForm::from_spectrum(sampler.nonmaximal_spectrum(d));
        const CapacityCaseReport rep = classify_capacity_case(sf12, sf23, d);
        outcomes += static_cast<long>(rep.outcomes.size());
        const double excess = rep.max_outcome_capacity - rep.reference;
        if (!rep.relation_holds) {
            ++violations;
            if (excess > worst_excess) {
                worst_excess = excess;
                std::ostringstream oss;
                oss << "d=" << d << " trial " << trial;
                worst_case = oss.str();
            }
        }
    }
    SuiteResult r;
    r.name = "capacity-bound-nonmaximal";
    r.trials = count;
    r.outcomes_checked = outcomes;
    r.max_residual = worst_excess;
    r.worst_case = worst_case;
    r.informational = true;
    r.pass = violations == 0;
    std::ostringstream note;
    note << "informational: best-outcome capacity exceeded max(resource capacities) in "
         << violations << "/" << count
         << " trials (swapping can concentrate entanglement); not counted toward exit status";
    r.note = note.str();
    return r;
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg) {
    VerifyReport report;
    report.config = cfg;

    Tracker prob;  // |Σp − 1| across every swap and chain the suites perform
    report.suites.push_back(suite_concurrence_product(cfg, prob));
    report.suites.push_back(suite_qubit_bell_concurrence(cfg, prob));
    report.suites.push_back(suite_qudit_concurrence(cfg, prob));
    report.suites.push_back(suite_fidelity_product(cfg, prob));
    report.suites.push_back(suite_chain_fidelity_product(cfg, prob));
    report.suites.push_back(suite_sequential_equivalence(cfg, prob));
    report.suites.push_back(suite_swapped_entropy(cfg, prob));
    report.suites.push_back(suite_capacity_equalities(cfg));
    report.suites.push_back(suite_capacity_bound(cfg));

    SuiteResult completeness;
    completeness.name = "probability-completeness";
    completeness.trials = prob.outcomes;
    completeness.outcomes_checked = prob.outcomes;
    completeness.max_residual = prob.max_residual;
    completeness.worst_case = prob.worst_case;
    completeness.pass = prob.max_residual < 1e-12;
    completeness.note = "|Σp − 1| over every swap/chain invocation, tolerance 1e-12";
    report.suites.push_back(completeness);

    for (const SuiteResult& s : report.suites) {
        if (!s.informational && !s.pass) report.all_pass = false;
    }
    return report;
}

}  // namespace redsim
