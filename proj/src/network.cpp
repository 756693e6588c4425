#include "redsim/network.hpp"

#include "redsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace redsim {

namespace {
constexpr double kZeroConcurrence = 1e-12;
constexpr std::size_t kMaxOutcomes = std::size_t(1) << 20;
}  // namespace

NetworkGraph NetworkGraph::create(std::vector<std::string> nodes,
                                  std::vector<NetworkEdge> edges) {
    NetworkGraph g;
    std::set<std::string> seen;
    for (const std::string& n : nodes) {
        if (n.empty()) throw std::invalid_argument("network: node names must be non-empty");
        if (!seen.insert(n).second) {
            throw std::invalid_argument("network: duplicate node \"" + n + "\"");
        }
    }
    int dim = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const NetworkEdge& e = edges[i];
        const std::string where =
            "edge " + std::to_string(i) + (e.label.empty() ? "" : " (\"" + e.label + "\")");
        if (!seen.count(e.a)) {
            throw std::invalid_argument("network: " + where + ": unknown node \"" + e.a + "\"");
        }
        if (!seen.count(e.b)) {
            throw std::invalid_argument("network: " + where + ": unknown node \"" + e.b + "\"");
        }
        if (e.a == e.b) {
            throw std::invalid_argument("network: " + where + ": self-loop not allowed");
        }
        if (e.resource.dim_left() != e.resource.dim_right()) {
            throw std::invalid_argument("network: " + where + ": link state must be d ⊗ d");
        }
        if (dim == 0) {
            dim = e.resource.dim_left();
        } else if (e.resource.dim_left() != dim) {
            throw std::invalid_argument("network: " + where +
                                        ": mixed link dimensions in one graph");
        }
    }
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);
    g.link_dim_ = dim == 0 ? 2 : dim;
    return g;
}

bool NetworkGraph::has_node(const std::string& name) const {
    return std::find(nodes_.begin(), nodes_.end(), name) != nodes_.end();
}

EdgeScore score_edge(const NetworkEdge& edge) {
    EdgeScore s;
    s.concurrence = concurrence(edge.resource);
    s.fidelity_term = s.concurrence;
    s.capacity = dense_coding_capacity_pure(edge.resource);
    return s;
}

namespace {

struct SearchEntry {
    double cost;  // Σ −log C (fidelity) or −bottleneck capacity
    int hops;
    std::vector<std::string> path;
    std::vector<std::size_t> edge_indices;
    std::string node;

    bool operator>(const SearchEntry& other) const {
        if (cost != other.cost) return cost > other.cost;
        if (hops != other.hops) return hops > other.hops;
        return path > other.path;
    }
};

// Oriented resource for travel u → v over the given edge.
PureState oriented_resource(const NetworkEdge& e, const std::string& u) {
    return e.a == u ? e.resource : e.resource.swapped_sides();
}

std::vector<SwapOutcome> qudit_chain_sequential(const std::vector<PureState>& states, int d) {
    const int g = static_cast<int>(states.size()) - 1;
    std::size_t total = 1;
    for (int k = 0; k < g; ++k) {
        total *= static_cast<std::size_t>(d) * d;
        if (total > kMaxOutcomes) {
            throw std::invalid_argument("simulate_path: outcome ensemble too large");
        }
    }
    const QuditBellBasis basis(d);
    std::vector<SwapOutcome> outcomes;
    outcomes.reserve(total);
    std::vector<std::pair<int, int>> indices(g);

    auto descend = [&](auto&& self, int k, const std::optional<PureState>& current,
                       double joint_probability) -> void {
        if (k == g) {
            SwapOutcome out;
            out.outcome_indices = indices;
            out.probability = joint_probability;
            out.normalization = joint_probability * std::pow(static_cast<double>(d), g);
            if (joint_probability >= kImpossibleProb) out.state = current;
            outcomes.push_back(std::move(out));
            return;
        }
        if (!current.has_value()) {
            for (int r = 0; r < d; ++r) {
                for (int h = 0; h < d; ++h) {
                    indices[k] = {r, h};
                    self(self, k + 1, std::nullopt, 0.0);
                }
            }
            return;
        }
        for (const SwapOutcome& so : swap_once(*current, states[k + 1], basis)) {
            indices[k] = so.outcome_indices.front();
            self(self, k + 1, so.state, joint_probability * so.probability);
        }
    };
    descend(descend, 0, states[0], 1.0);
    return outcomes;
}

// Exact end-to-end ensemble for an oriented list of link states.
std::vector<PathOutcome> simulate_states(const std::vector<PureState>& states,
                                         const std::vector<SwapParams>& params, int d) {
    const int g_swaps = static_cast<int>(states.size()) - 1;
    std::vector<SwapParams> filled = params;
    if (filled.empty()) filled.resize(static_cast<std::size_t>(std::max(g_swaps, 0)));
    if (static_cast<int>(filled.size()) != std::max(g_swaps, 0)) {
        throw std::invalid_argument("simulate_path: need one (n, m) pair per intermediate node");
    }

    std::vector<SwapOutcome> raw;
    std::vector<double> transfer_by_outcome;
    double resource_product = 1.0;

    if (g_swaps == 0) {
        SwapOutcome only;
        only.probability = 1.0;
        only.normalization = 1.0;
        only.state = states[0];
        raw.push_back(std::move(only));
        transfer_by_outcome.push_back(1.0);
    } else if (d == 2) {
        raw = chain_swap_simultaneous(states, filled);
        for (const SwapOutcome& out : raw) {
            double transfer = 1.0;
            for (int k = 0; k < g_swaps; ++k) {
                transfer *= out.outcome_indices[k].second == 0 ? filled[k].n : filled[k].m;
            }
            transfer_by_outcome.push_back(transfer);
        }
        for (const PureState& s : states) {
            resource_product *= concurrence_two_qubit(s);
        }
    } else {
        for (const SwapParams& p : filled) {
            if (p.n != 1.0 || p.m != 1.0) {
                throw std::invalid_argument(
                    "simulate_path: entangling parameters are only defined for qubit links");
            }
        }
        raw = qudit_chain_sequential(states, d);
    }

    std::vector<PathOutcome> result;
    result.reserve(raw.size());
    const double two_pow_g = std::pow(2.0, g_swaps);
    for (std::size_t k = 0; k < raw.size(); ++k) {
        const SwapOutcome& out = raw[k];
        PathOutcome po;
        po.indices = out.outcome_indices;
        po.probability = out.probability;
        po.possible = out.state.has_value();
        if (po.possible) {
            po.concurrence = concurrence(*out.state);
            po.capacity = dense_coding_capacity_pure(*out.state);
            if (d == 2) {
                po.fidelity = teleportation_fidelity_pure(std::min(po.concurrence, 1.0));
                if (g_swaps > 0) {
                    const double predicted = transfer_by_outcome[k] /
                                             (two_pow_g * out.normalization) * resource_product;
                    po.relation_residual = std::abs(po.concurrence - predicted);
                }
            }
        }
        result.push_back(std::move(po));
    }
    return result;
}

}  // namespace

std::vector<PathOutcome> simulate_path(const NetworkGraph& g,
                                       const std::vector<std::string>& path,
                                       const std::vector<SwapParams>& params) {
    if (path.size() < 2) {
        throw std::invalid_argument("simulate_path: path needs at least two nodes");
    }
    // Resolve each hop to its highest-concurrence edge, oriented along travel.
    std::vector<PureState> states;
    states.reserve(path.size() - 1);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const NetworkEdge* best = nullptr;
        double best_c = -1.0;
        for (const NetworkEdge& e : g.edges()) {
            if ((e.a == path[k] && e.b == path[k + 1]) ||
                (e.b == path[k] && e.a == path[k + 1])) {
                const double c = concurrence(e.resource);
                if (c > best_c) {
                    best_c = c;
                    best = &e;
                }
            }
        }
        if (best == nullptr) {
            throw std::invalid_argument("simulate_path: no edge between \"" + path[k] +
                                        "\" and \"" + path[k + 1] + "\"");
        }
        states.push_back(oriented_resource(*best, path[k]));
    }
    return simulate_states(states, params, g.link_dim());
}

RouteReport best_path(const NetworkGraph& g, const std::string& source,
                      const std::string& target, RouteMetric metric) {
    if (source == target) {
        throw std::invalid_argument("best_path: source and target must differ");
    }
    if (!g.has_node(source) || !g.has_node(target)) {
        throw std::invalid_argument("best_path: source and target must be graph nodes");
    }

    // Pre-score and prune edges that deliver nothing.
    std::vector<EdgeScore> scores(g.edges().size());
    std::vector<bool> usable(g.edges().size(), false);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        scores[i] = score_edge(g.edges()[i]);
        usable[i] = scores[i].concurrence > kZeroConcurrence;
    }

    auto accumulate = [&](double acc, std::size_t i) {
        return metric == RouteMetric::fidelity ? acc - std::log(scores[i].concurrence)
                                               : std::max(acc, -scores[i].capacity);
    };
    const double start_cost =
        metric == RouteMetric::fidelity ? 0.0 : -std::numeric_limits<double>::infinity();

    std::priority_queue<SearchEntry, std::vector<SearchEntry>, std::greater<>> queue;
    std::set<std::string> done;
    queue.push({start_cost, 0, {source}, {}, source});

    RouteReport report;
    report.metric = metric;

    while (!queue.empty()) {
        SearchEntry entry = queue.top();
        queue.pop();
        if (done.count(entry.node)) continue;
        done.insert(entry.node);
        if (entry.node == target) {
            report.reachable = true;
            report.path = std::move(entry.path);
            report.edge_indices = std::move(entry.edge_indices);
            break;
        }
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            if (!usable[i]) continue;
            const NetworkEdge& e = g.edges()[i];
            std::string next;
            if (e.a == entry.node) next = e.b;
            else if (e.b == entry.node) next = e.a;
            else continue;
            if (done.count(next)) continue;
            SearchEntry relaxed;
            relaxed.cost = accumulate(entry.cost, i);
            relaxed.hops = entry.hops + 1;
            relaxed.path = entry.path;
            relaxed.path.push_back(next);
            relaxed.edge_indices = entry.edge_indices;
            relaxed.edge_indices.push_back(i);
            relaxed.node = std::move(next);
            queue.push(std::move(relaxed));
        }
    }

    if (!report.reachable) return report;

    report.heuristic_score =
        metric == RouteMetric::fidelity ? 1.0 : std::numeric_limits<double>::infinity();
    std::vector<PureState> states;
    for (std::size_t k = 0; k < report.edge_indices.size(); ++k) {
        const std::size_t i = report.edge_indices[k];
        report.edge_scores.push_back(scores[i]);
        if (metric == RouteMetric::fidelity) {
            report.heuristic_score *= scores[i].concurrence;
        } else {
            report.heuristic_score = std::min(report.heuristic_score, scores[i].capacity);
        }
        states.push_back(oriented_resource(g.edges()[i], report.path[k]));
    }

    report.simulated = simulate_states(states, {}, g.link_dim());
    double possible_mass = 0.0;
    double fid_acc = 0.0;
    double cap_acc = 0.0;
    for (const PathOutcome& po : report.simulated) {
        report.probability_sum += po.probability;
        if (!po.possible) continue;
        possible_mass += po.probability;
        report.max_relation_residual = std::max(report.max_relation_residual, po.relation_residual);
        cap_acc += po.probability * po.capacity;
        report.best_outcome_capacity = std::max(report.best_outcome_capacity, po.capacity);
        if (po.fidelity.has_value()) {
            fid_acc += po.probability * *po.fidelity;
            if (!report.best_outcome_fidelity || *po.fidelity > *report.best_outcome_fidelity) {
                report.best_outcome_fidelity = *po.fidelity;
            }
        }
    }
    if (possible_mass > 0.0) {
        report.avg_capacity = cap_acc / possible_mass;
        if (report.best_outcome_fidelity) report.avg_fidelity = fid_acc / possible_mass;
    }
    return report;
}

}  // namespace redsim
