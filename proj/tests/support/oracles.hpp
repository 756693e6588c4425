// oracles.hpp
// Test-only reference implementations, independent of the closed-form swap
// paths they check: brute-force tensor contraction through the generic
// projection op, a full state-vector chain simulator, and exhaustive
// path enumeration for route search.

#pragma once

#include "redsim/basis.hpp"
#include "redsim/measures.hpp"
#include "redsim/network.hpp"
#include "redsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

using redsim::Complex;
using redsim::PureState;

// ----------------------------------------------------------- single swap ----

struct SwapOracleOutcome {
    double probability = 0.0;
    std::optional<PureState> state;
};

// One swap outcome via the generic four-party tensor + projection route.
template <typename Basis>
SwapOracleOutcome swap_oracle(const PureState& s12, const PureState& s23, const Basis& basis,
                              int r, int h) {
    const redsim::JointState joint = redsim::tensor(s12, s23);
    const redsim::ProjectionOutcome out =
        redsim::project_measurement(joint, basis.vector(r, h), {1, 2});
    SwapOracleOutcome result;
    result.probability = out.probability;
    if (out.possible()) result.state = out.post_state();
    return result;
}

// ------------------------------------------------------ qubit chain oracle ----

// Full 2(g+1)-qubit amplitude vector of a chain of two-qubit links; qubit
// 2k is the left half of link k, qubit 2k+1 the right half. Bit q of the
// flat index is qubit q's basis value.
struct QubitVec {
    int nq = 0;
    std::vector<Complex> amp;
    std::vector<int> labels;  // original qubit id per current position
};

inline QubitVec chain_joint(const std::vector<PureState>& states) {
    QubitVec v;
    v.nq = 2 * static_cast<int>(states.size());
    v.amp.assign(std::size_t(1) << v.nq, Complex{0.0, 0.0});
    for (int q = 0; q < v.nq; ++q) v.labels.push_back(q);
    for (std::uint64_t idx = 0; idx < v.amp.size(); ++idx) {
        Complex a{1.0, 0.0};
        for (std::size_t k = 0; k < states.size(); ++k) {
            const int i = (idx >> (2 * k)) & 1;
            const int j = (idx >> (2 * k + 1)) & 1;
            a *= states[k].amp(i, j);
        }
        v.amp[idx] = a;
    }
    return v;
}

// Projects the two original qubits (qa, qb) onto the bipartite vector
// (first slot ↔ qa). Returns the outcome probability; the residual replaces
// the input, renormalized, with the measured qubits removed.
inline double project_pair(QubitVec& v, int qa, int qb, const PureState& vec) {
    const auto pos = [&](int label) {
        return static_cast<int>(std::find(v.labels.begin(), v.labels.end(), label) -
                                v.labels.begin());
    };
    const int pa = pos(qa);
    const int pb = pos(qb);
    const int rq = v.nq - 2;
    std::vector<int> kept;
    for (int p = 0; p < v.nq; ++p) {
        if (p != pa && p != pb) kept.push_back(p);
    }
    std::vector<Complex> residual(std::size_t(1) << rq, Complex{0.0, 0.0});
    for (std::uint64_t rest = 0; rest < residual.size(); ++rest) {
        Complex acc{0.0, 0.0};
        for (int s = 0; s < 2; ++s) {
            for (int t = 0; t < 2; ++t) {
                std::uint64_t idx = 0;
                for (int b = 0; b < rq; ++b) idx |= ((rest >> b) & 1) << kept[b];
                idx |= std::uint64_t(s) << pa;
                idx |= std::uint64_t(t) << pb;
                acc += std::conj(vec.amp(s, t)) * v.amp[idx];
            }
        }
        residual[rest] = acc;
    }
    double prob = 0.0;
    for (const Complex& c : residual) prob += std::norm(c);
    if (prob > 0.0) {
        const double inv = 1.0 / std::sqrt(prob);
        for (Complex& c : residual) c *= inv;
    }
    std::vector<int> new_labels;
    for (int b = 0; b < rq; ++b) new_labels.push_back(v.labels[kept[b]]);
    v.nq = rq;
    v.amp = std::move(residual);
    v.labels = std::move(new_labels);
    return prob;
}

struct ChainOracleOutcome {
    double probability = 0.0;
    std::optional<PureState> state;  // qubit 0 is the row index
};

// Measures nodes 1..g of the chain (qubit pairs (2k−1, 2k)) in the given
// per-node bases and outcome indices; the final state lives on the first and
// last qubits.
inline ChainOracleOutcome chain_oracle(const std::vector<PureState>& states,
                                       const std::vector<redsim::GeneralQubitBasis>& bases,
                                       const std::vector<std::pair<int, int>>& outcome) {
    QubitVec v = chain_joint(states);
    const int last = 2 * static_cast<int>(states.size()) - 1;
    double probability = 1.0;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        const auto [r, h] = outcome[k];
        probability *= project_pair(v, 2 * static_cast<int>(k) + 1, 2 * static_cast<int>(k) + 2,
                                    bases[k].vector(r, h));
        if (probability < redsim::kImpossibleProb) return {probability, std::nullopt};
    }
    Eigen::MatrixXcd amp(2, 2);
    const int p0 = static_cast<int>(std::find(v.labels.begin(), v.labels.end(), 0) -
                                    v.labels.begin());
    const int p1 = static_cast<int>(std::find(v.labels.begin(), v.labels.end(), last) -
                                    v.labels.begin());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            amp(i, j) = v.amp[(std::uint64_t(i) << p0) | (std::uint64_t(j) << p1)];
    return {probability, PureState::normalized(amp)};
}

// ---------------------------------------------------- exhaustive routing ----

struct PathChoice {
    bool found = false;
    std::vector<std::string> path;
    double score = 0.0;  // Π concurrence or min capacity
    int hops = 0;
};

// Every simple path, scored directly (plain products / plain min), with the
// same tie rules as the search: better score, then fewer hops, then
// lexicographically smaller node sequence.
inline PathChoice enumerate_best(const redsim::NetworkGraph& g, const std::string& source,
                                 const std::string& target, redsim::RouteMetric metric) {
    std::vector<redsim::EdgeScore> scores;
    scores.reserve(g.edges().size());
    for (const auto& e : g.edges()) scores.push_back(redsim::score_edge(e));

    PathChoice best;
    std::vector<std::string> path{source};

    auto better = [&](double score, int hops, const std::vector<std::string>& p) {
        if (!best.found) return true;
        if (score != best.score) return score > best.score;
        if (hops != best.hops) return hops < best.hops;
        return p < best.path;
    };

    auto dfs = [&](auto&& self, const std::string& node, double score) -> void {
        if (node == target) {
            const int hops = static_cast<int>(path.size()) - 1;
            if (better(score, hops, path)) {
                best.found = true;
                best.path = path;
                best.score = score;
                best.hops = hops;
            }
            return;
        }
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            if (scores[i].concurrence <= 1e-12) continue;
            const auto& e = g.edges()[i];
            std::string next;
            if (e.a == node) next = e.b;
            else if (e.b == node) next = e.a;
            else continue;
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            path.push_back(next);
            const double next_score = metric == redsim::RouteMetric::fidelity
                                          ? score * scores[i].concurrence
                                          : std::min(score, scores[i].capacity);
            self(self, next, next_score);
            path.pop_back();
        }
    };
    const double start =
        metric == redsim::RouteMetric::fidelity ? 1.0 : std::numeric_limits<double>::infinity();
    dfs(dfs, source, start);
    return best;
}

}  // namespace oracles
