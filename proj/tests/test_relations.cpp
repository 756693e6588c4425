#include "redsim/relations.hpp"
#include "redsim/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace redsim;

namespace {

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

TEST_CASE("concurrence product: Bell resources in the Bell family") {
    const PureState bell = PureState::maximally_entangled(2);
    const ResidualReport rep = verify_concurrence_product(bell, bell, 1.0, 1.0);
    REQUIRE(rep.outcomes.size() == 4);
    for (const auto& out : rep.outcomes) {
        CHECK(out.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(out.rhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(rep.max_residual < 1e-12);
    CHECK(rep.probability_sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("concurrence product: product resource zeroes both sides") {
    const PureState prod = PureState::computational(2, 2, 0, 0);
    const PureState bell = PureState::maximally_entangled(2);
    const ResidualReport rep = verify_concurrence_product(prod, bell, 0.9, 0.4);
    for (const auto& out : rep.outcomes) {
        CHECK(out.lhs == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(out.rhs == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("concurrence product holds for random resources and parameters") {
    Sampler sampler(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const ResidualReport rep =
            verify_concurrence_product(sampler.pure_state(2, 2), sampler.pure_state(2, 2),
                                       sampler.unit_param(), sampler.unit_param());
        REQUIRE(rep.max_residual < 1e-9);
        REQUIRE(std::abs(rep.probability_sum - 1.0) < 1e-12);
    }
}

TEST_CASE("qudit concurrence relation at d = 2 has no cross term") {
    Sampler sampler(23);
    for (int trial = 0; trial < 200; ++trial) {
        const SchmidtForm a = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(2));
        const SchmidtForm b = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(2));
        for (int h = 0; h < 2; ++h) {
            const ResidualReport rep = verify_qudit_concurrence(a, b, 2, h);
            REQUIRE(rep.k_term == 0.0);
            REQUIRE(rep.max_residual < 1e-9);
        }
    }
}

TEST_CASE("qudit concurrence relation on uniform qutrit spectra") {
    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(3, 1.0 / std::sqrt(3.0));
    const SchmidtForm sf = SchmidtForm::from_spectrum(uniform);
    for (int h = 0; h < 3; ++h) {
        const ResidualReport rep = verify_qudit_concurrence(sf, sf, 3, h);
        REQUIRE(!rep.outcomes.empty());
        for (const auto& out : rep.outcomes) {
            CHECK(out.lhs == doctest::Approx(1.0).epsilon(1e-10));
        }
        CHECK(rep.max_residual < 1e-9);
    }
}

TEST_CASE("qudit concurrence relation for random spectra, d up to 5") {
    Sampler sampler(34);
    for (int d = 3; d <= 5; ++d) {
        double max_k = -1.0;
        for (int trial = 0; trial < 100; ++trial) {
            const SchmidtForm a = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
            const SchmidtForm b = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
            for (int h = 0; h < d; ++h) {
                const ResidualReport rep = verify_qudit_concurrence(a, b, d, h);
                REQUIRE(rep.max_residual < 1e-9);
                REQUIRE(rep.k_term >= 0.0);
                max_k = std::max(max_k, rep.k_term);
            }
        }
        REQUIRE(max_k > 0.0);  // the cross term genuinely appears beyond d = 2
    }
}

TEST_CASE("product spectra annihilate every qudit outcome") {
    Eigen::VectorXd product(3);
    product << 1.0, 0.0, 0.0;
    Sampler sampler(45);
    const SchmidtForm a = SchmidtForm::from_spectrum(product);
    const SchmidtForm b = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(3));
    for (int h = 0; h < 3; ++h) {
        const ResidualReport rep = verify_qudit_concurrence(a, b, 3, h);
        for (const auto& out : rep.outcomes) {
            CHECK(out.lhs == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(out.rhs == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("fidelity product: the Bell case is exact") {
    const PureState bell = PureState::maximally_entangled(2);
    const ResidualReport rep = verify_fidelity_product(bell, bell, 1.0, 1.0);
    for (const auto& out : rep.outcomes) {
        CHECK(out.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(out.rhs == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(rep.max_residual < 1e-12);
}

TEST_CASE("fidelity product: product resources pin the classical limit") {
    const PureState prod = PureState::computational(2, 2, 1, 1);
    const PureState bell = PureState::maximally_entangled(2);
    const ResidualReport rep = verify_fidelity_product(prod, bell, 1.0, 1.0);
    for (const auto& out : rep.outcomes) {
        // both sides vanish: the swapped state teleports no better than 2/3
        CHECK(out.lhs == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(out.rhs == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("fidelity product holds for random resources") {
    Sampler sampler(56);
    for (int trial = 0; trial < 500; ++trial) {
        const ResidualReport rep =
            verify_fidelity_product(sampler.pure_state(2, 2), sampler.pure_state(2, 2),
                                    sampler.unit_param(), sampler.unit_param());
        REQUIRE(rep.max_residual < 1e-9);
    }
}

TEST_CASE("chain fidelity product: Bell chains and random chains") {
    const PureState bell = PureState::maximally_entangled(2);
    const ResidualReport bell_rep = verify_chain_fidelity_product(
        {bell, bell, bell}, {SwapParams{1.0, 1.0}, SwapParams{1.0, 1.0}});
    for (const auto& out : bell_rep.outcomes) {
        CHECK(out.lhs == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(out.rhs == doctest::Approx(1.0).epsilon(1e-12));
    }

    Sampler sampler(67);
    for (int g = 2; g <= 3; ++g) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<PureState> states;
            std::vector<SwapParams> params;
            for (int k = 0; k <= g; ++k) states.push_back(sampler.pure_state(2, 2));
            for (int k = 0; k < g; ++k) params.push_back(sampler.swap_params());
            const ResidualReport rep = verify_chain_fidelity_product(states, params);
            REQUIRE(rep.max_residual < 1e-9);
            REQUIRE(std::abs(rep.probability_sum - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("a product link zeroes both sides of the chain fidelity relation") {
    Sampler sampler(92);
    const std::vector<PureState> states{sampler.pure_state(2, 2),
                                        PureState::computational(2, 2, 0, 1),
                                        sampler.pure_state(2, 2)};
    const ResidualReport rep =
        verify_chain_fidelity_product(states, {sampler.swap_params(), sampler.swap_params()});
    for (const auto& out : rep.outcomes) {
        CHECK(out.lhs == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(out.rhs == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("single-measurement chains agree with the single-swap fidelity relation") {
    Sampler sampler(78);
    const PureState a = sampler.pure_state(2, 2);
    const PureState b = sampler.pure_state(2, 2);
    const SwapParams p = sampler.swap_params();
    const ResidualReport chain = verify_chain_fidelity_product({a, b}, {p});
    const ResidualReport single = verify_fidelity_product(a, b, p.n, p.m);
    REQUIRE(chain.outcomes.size() == single.outcomes.size());
    for (std::size_t k = 0; k < chain.outcomes.size(); ++k) {
        CHECK(chain.outcomes[k].lhs == doctest::Approx(single.outcomes[k].lhs).epsilon(1e-12));
        CHECK(chain.outcomes[k].rhs == doctest::Approx(single.outcomes[k].rhs).epsilon(1e-12));
    }
}

TEST_CASE("swapped entropy formula on reference spectra") {
    const Eigen::VectorXd uniform3 = Eigen::VectorXd::Constant(3, 1.0 / std::sqrt(3.0));
    const SchmidtForm max3 = SchmidtForm::from_spectrum(uniform3);
    CHECK(swapped_entropy(max3, max3, 0, 1, 3) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));

    Eigen::VectorXd lop(2);
    lop << std::sqrt(0.9), std::sqrt(0.1);
    const SchmidtForm sf = SchmidtForm::from_spectrum(lop);
    CHECK(swapped_entropy(sf, sf, 0, 0, 2) ==
          doctest::Approx(binary_entropy(0.81 / 0.82)).epsilon(1e-12));

    Eigen::VectorXd product(2);
    product << 1.0, 0.0;
    const SchmidtForm prod = SchmidtForm::from_spectrum(product);
    CHECK(swapped_entropy(prod, sf, 0, 0, 2) == doctest::Approx(0.0).epsilon(1e-12));
    // the h = 1 outcome pairs the dead coefficient with the live one twice over
    CHECK_THROWS_AS(swapped_entropy(prod, prod, 0, 1, 2), std::domain_error);
}

TEST_CASE("swapped entropy equals the reduced entropy of the simulated outcome") {
    Sampler sampler(89);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 4;
        const SchmidtForm a = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
        const SchmidtForm b = SchmidtForm::from_spectrum(sampler.schmidt_spectrum(d));
        const auto outcomes = swap_once(PureState::from_spectrum(a.coeffs),
                                        PureState::from_spectrum(b.coeffs), QuditBellBasis(d));
        for (const auto& out : outcomes) {
            if (!out.state.has_value()) continue;
            const auto [r, h] = out.outcome_indices[0];
            const double formula = swapped_entropy(a, b, r, h, d);
            const double measured = von_neumann_entropy(
                partial_trace(DensityMatrix::projector(*out.state), d, d, Side::right));
            REQUIRE(std::abs(formula - measured) < 1e-10);
        }
    }
}
