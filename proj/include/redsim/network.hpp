// network.hpp
// A network of nodes joined by pure entangled links, path search maximizing
// deliverable fidelity or capacity, and exact end-to-end simulation of the
// chosen path by chained swapping.

#pragma once

#include "redsim/state.hpp"
#include "redsim/swap.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace redsim {

struct NetworkEdge {
    std::string a;
    std::string b;
    PureState resource;  // oriented a → b (rows on the a side)
    std::string label;
};

/// Validated graph: declared endpoints, no self-loops, square same-d links.
class NetworkGraph {
public:
    static NetworkGraph create(std::vector<std::string> nodes, std::vector<NetworkEdge> edges);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<NetworkEdge>& edges() const { return edges_; }
    int link_dim() const { return link_dim_; }
    bool has_node(const std::string& name) const;

private:
    NetworkGraph() = default;
    std::vector<std::string> nodes_;
    std::vector<NetworkEdge> edges_;
    int link_dim_ = 2;
};

struct EdgeScore {
    double concurrence = 0.0;
    double fidelity_term = 0.0;  // 3F − 2, equal to the concurrence for pure links
    double capacity = 0.0;
};

EdgeScore score_edge(const NetworkEdge& edge);

enum class RouteMetric { fidelity, capacity };

struct PathOutcome {
    std::vector<std::pair<int, int>> indices;
    bool possible = true;
    double probability = 0.0;
    double concurrence = 0.0;
    double capacity = 0.0;
    std::optional<double> fidelity;        // qubit links only: (2 + C)/3
    double relation_residual = 0.0;        // chain fidelity-product check (qubit links)
};

struct RouteReport {
    bool reachable = false;
    RouteMetric metric = RouteMetric::fidelity;
    std::vector<std::string> path;         // node sequence, source first
    std::vector<std::size_t> edge_indices; // into NetworkGraph::edges()
    std::vector<EdgeScore> edge_scores;
    double heuristic_score = 0.0;          // Π concurrence (fidelity) or min capacity
    std::vector<PathOutcome> simulated;
    double probability_sum = 0.0;
    double max_relation_residual = 0.0;
    std::optional<double> best_outcome_fidelity;
    std::optional<double> avg_fidelity;    // probability-weighted
    double best_outcome_capacity = 0.0;
    double avg_capacity = 0.0;
};

/// Optimal simple path from source to target. Zero-concurrence edges are
/// pruned first. metric fidelity maximizes the product of edge concurrences
/// (shortest path on −log C); metric capacity maximizes the minimum edge
/// capacity (bottleneck path). Ties break by fewer hops, then lexicographic
/// node sequence. The winner is simulated exactly with default measurement
/// parameters; reachable = false when no all-nonzero path exists.
RouteReport best_path(const NetworkGraph& g, const std::string& source,
                      const std::string& target, RouteMetric metric);

/// Exact outcome ensemble of swapping along the given node sequence.
/// params supplies (n, m) per intermediate node (default all (1, 1)); for
/// links with d > 2 the measurements are the Bell family and params must be
/// defaults. Parallel edges resolve to the highest-concurrence one.
std::vector<PathOutcome> simulate_path(const NetworkGraph& g,
                                       const std::vector<std::string>& path,
                                       const std::vector<SwapParams>& params = {});

}  // namespace redsim
