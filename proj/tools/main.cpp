// redsim — swap, chain, route and verify commands over JSON state/network files.

#include "redsim/io.hpp"
#include "redsim/measures.hpp"
#include "redsim/network.hpp"
#include "redsim/relations.hpp"
#include "redsim/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using redsim::round12;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnreachable = 3;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string indices_to_string(const std::vector<std::pair<int, int>>& indices) {
    std::ostringstream oss;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) oss << ",";
        oss << "(" << indices[k].first << "," << indices[k].second << ")";
    }
    return oss.str();
}

ordered_json indices_to_json(const std::vector<std::pair<int, int>>& indices) {
    ordered_json arr = ordered_json::array();
    for (const auto& [r, h] : indices) arr.push_back({r, h});
    return arr;
}

struct CommonOpts {
    std::string format = "text";
    std::string input;
    std::optional<double> n;
    std::optional<double> m;
};

// ---------------------------------------------------------------- verify ----

int cmd_verify(const redsim::VerifyConfig& config, const std::string& format) {
    const redsim::VerifyReport report = redsim::run_verification(config);

    if (format == "json") {
        ordered_json doc;
        doc["command"] = "verify";
        doc["seed"] = config.seed;
        doc["trials"] = config.trials;
        doc["tolerance"] = round12(config.tolerance);
        ordered_json suites = ordered_json::array();
        for (const auto& s : report.suites) {
            ordered_json j;
            j["name"] = s.name;
            j["trials"] = s.trials;
            j["outcomes_checked"] = s.outcomes_checked;
            j["max_residual"] = round12(s.max_residual);
            j["worst_case"] = s.worst_case;
            j["informational"] = s.informational;
            j["pass"] = s.pass;
            if (!s.note.empty()) j["note"] = s.note;
            suites.push_back(std::move(j));
        }
        doc["suites"] = std::move(suites);
        doc["all_pass"] = report.all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "verification suites (seed " << config.seed << ", trials " << config.trials
                  << ", tolerance " << fmt(config.tolerance) << ")\n";
        for (const auto& s : report.suites) {
            const char* status = s.informational ? "info" : (s.pass ? "ok" : "FAIL");
            std::cout << "  " << status << "  " << s.name << ": max residual "
                      << fmt(s.max_residual) << " over " << s.outcomes_checked << " outcomes";
            if (!s.pass && !s.worst_case.empty()) std::cout << " (worst: " << s.worst_case << ")";
            std::cout << "\n";
            if (!s.note.empty()) std::cout << "        " << s.note << "\n";
        }
        std::cout << (report.all_pass ? "all relations hold\n" : "RELATION VIOLATION\n");
    }
    return report.all_pass ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------ swap/chain ----

struct OutcomeRow {
    std::vector<std::pair<int, int>> indices;
    double probability = 0.0;
    double concurrence = 0.0;
    std::optional<double> fidelity;
    double capacity = 0.0;
    std::optional<double> residual;
    bool possible = true;
    bool non_entangling = false;
};

void print_rows(const std::vector<OutcomeRow>& rows, const std::string& format,
                const ordered_json& header, double probability_sum) {
    if (format == "json") {
        ordered_json doc = header;
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["indices"] = indices_to_json(row.indices);
            j["probability"] = round12(row.probability);
            j["possible"] = row.possible;
            if (row.possible) {
                j["concurrence"] = round12(row.concurrence);
                if (row.fidelity) j["fidelity"] = round12(*row.fidelity);
                j["capacity"] = round12(row.capacity);
                if (row.residual) j["relation_residual"] = round12(*row.residual);
            }
            if (row.non_entangling) j["non_entangling"] = true;
            arr.push_back(std::move(j));
        }
        doc["outcomes"] = std::move(arr);
        doc["probability_sum"] = round12(probability_sum);
        std::cout << doc.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : header.items()) {
        if (key == "command") continue;
        std::cout << key << ": "
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    std::cout
        << "outcome         probability     concurrence     fidelity        capacity        residual\n";
    for (const auto& row : rows) {
        std::string tag = "  " + indices_to_string(row.indices);
        tag.resize(std::max<std::size_t>(tag.size() + 1, 16), ' ');
        std::cout << tag << fmt(row.probability);
        if (row.possible) {
            std::cout << "\t" << fmt(row.concurrence) << "\t"
                      << (row.fidelity ? fmt(*row.fidelity) : "-") << "\t" << fmt(row.capacity)
                      << "\t" << (row.residual ? fmt(*row.residual) : "-");
        } else {
            std::cout << "\t(impossible outcome)";
        }
        if (row.non_entangling) std::cout << "\t[non-entangling]";
        std::cout << "\n";
    }
    std::cout << "probability sum: " << fmt(probability_sum) << "\n";
}

int cmd_swap(const CommonOpts& opts) {
    redsim::SwapSpec spec = redsim::parse_swap_spec(redsim::load_json_file(opts.input), 2);
    if (spec.states.size() != 2) {
        throw redsim::InputError("swap: input must hold exactly two states (use chain for more)");
    }
    const int d = spec.states[0].dim_right();
    if (opts.n) spec.params[0].n = *opts.n;
    if (opts.m) spec.params[0].m = *opts.m;
    const bool defaulted = spec.params_defaulted && !opts.n && !opts.m;

    std::vector<OutcomeRow> rows;
    double probability_sum = 0.0;
    ordered_json header;
    header["command"] = "swap";

    if (d == 2) {
        const redsim::GeneralQubitBasis basis(spec.params[0].n, spec.params[0].m);
        const double c1 = redsim::concurrence_two_qubit(spec.states[0]);
        const double c2 = redsim::concurrence_two_qubit(spec.states[1]);
        header["basis"] = "general-qubit";
        header["n"] = round12(spec.params[0].n);
        header["m"] = round12(spec.params[0].m);
        if (defaulted) header["params_defaulted"] = true;
        for (const auto& out : redsim::swap_once(spec.states[0], spec.states[1], basis)) {
            probability_sum += out.probability;
            OutcomeRow row;
            row.indices = out.outcome_indices;
            row.probability = out.probability;
            row.possible = out.state.has_value();
            row.non_entangling =
                basis.degenerate(out.outcome_indices[0].first, out.outcome_indices[0].second);
            if (row.possible) {
                row.concurrence = redsim::concurrence_two_qubit(*out.state);
                row.fidelity = redsim::teleportation_fidelity_pure(std::min(row.concurrence, 1.0));
                row.capacity = redsim::dense_coding_capacity_pure(*out.state);
                const double predicted = basis.transfer_factor(out.outcome_indices[0].second) /
                                         (2.0 * out.normalization) * c1 * c2;
                row.residual = std::abs(row.concurrence - predicted);
            }
            rows.push_back(std::move(row));
        }
    } else {
        if (opts.n || opts.m) {
            throw redsim::InputError("swap: entangling parameters n/m apply to qubit states only");
        }
        header["basis"] = "qudit-bell";
        header["d"] = d;
        // The closed-form concurrence relation needs Schmidt-diagonal
        // resources; report its residual only when the inputs already are.
        auto is_diagonal = [](const redsim::PureState& s) {
            for (int i = 0; i < s.dim_left(); ++i)
                for (int j = 0; j < s.dim_right(); ++j)
                    if (i != j && std::abs(s.amp(i, j)) > 1e-12) return false;
            return true;
        };
        const bool diagonal = is_diagonal(spec.states[0]) && is_diagonal(spec.states[1]);
        Eigen::VectorXd l1, l2;
        double c1 = 0.0, c2 = 0.0;
        if (diagonal) {
            l1 = spec.states[0].amp().diagonal().cwiseAbs();
            l2 = spec.states[1].amp().diagonal().cwiseAbs();
            c1 = redsim::spectrum_concurrence(l1, d);
            c2 = redsim::spectrum_concurrence(l2, d);
        }
        const redsim::QuditBellBasis basis(d);
        for (const auto& out : redsim::swap_once(spec.states[0], spec.states[1], basis)) {
            probability_sum += out.probability;
            OutcomeRow row;
            row.indices = out.outcome_indices;
            row.probability = out.probability;
            row.possible = out.state.has_value();
            if (row.possible) {
                const auto sf = redsim::schmidt_decompose(*out.state);
                row.concurrence = redsim::concurrence_qudit(sf, d);
                row.capacity = redsim::dense_coding_capacity_pure(*out.state);
                if (diagonal) {
                    const double k_term = redsim::concurrence_cross_term(
                        l1, l2, d, out.outcome_indices[0].second);
                    const double rhs2 = (d - 1.0) /
                                        (2.0 * d * out.normalization * out.normalization) *
                                        (c1 * c1 * c2 * c2 - k_term);
                    row.residual = std::abs(row.concurrence * row.concurrence - rhs2);
                }
            }
            rows.push_back(std::move(row));
        }
    }

    print_rows(rows, opts.format, header, probability_sum);
    return kExitOk;
}

int cmd_chain(const CommonOpts& opts) {
    redsim::SwapSpec spec = redsim::parse_swap_spec(redsim::load_json_file(opts.input), 2);
    if (opts.n || opts.m) {
        for (auto& p : spec.params) {
            if (opts.n) p.n = *opts.n;
            if (opts.m) p.m = *opts.m;
        }
    }
    for (const auto& s : spec.states) {
        if (s.dim_left() != 2 || s.dim_right() != 2) {
            throw redsim::InputError("chain: every resource state must be two-qubit");
        }
    }

    const auto outcomes = redsim::chain_swap_simultaneous(spec.states, spec.params);
    double resource_product = 1.0;
    for (const auto& s : spec.states) resource_product *= redsim::concurrence_two_qubit(s);
    const double two_pow_g = std::pow(2.0, static_cast<double>(spec.params.size()));

    std::vector<OutcomeRow> rows;
    double probability_sum = 0.0;
    for (const auto& out : outcomes) {
        probability_sum += out.probability;
        OutcomeRow row;
        row.indices = out.outcome_indices;
        row.probability = out.probability;
        row.possible = out.state.has_value();
        if (row.possible) {
            row.concurrence = redsim::concurrence_two_qubit(*out.state);
            row.fidelity = redsim::teleportation_fidelity_pure(std::min(row.concurrence, 1.0));
            row.capacity = redsim::dense_coding_capacity_pure(*out.state);
            double transfer = 1.0;
            for (std::size_t k = 0; k < spec.params.size(); ++k) {
                transfer *=
                    out.outcome_indices[k].second == 0 ? spec.params[k].n : spec.params[k].m;
            }
            row.residual = std::abs(
                row.concurrence - transfer / (two_pow_g * out.normalization) * resource_product);
        }
        rows.push_back(std::move(row));
    }

    ordered_json header;
    header["command"] = "chain";
    header["links"] = spec.states.size();
    ordered_json params = ordered_json::array();
    for (const auto& p : spec.params) params.push_back({{"n", round12(p.n)}, {"m", round12(p.m)}});
    header["params"] = std::move(params);
    if (spec.params_defaulted && !opts.n && !opts.m) header["params_defaulted"] = true;
    print_rows(rows, opts.format, header, probability_sum);
    return kExitOk;
}

// ------------------------------------------------------------------ route ----

int cmd_route(const CommonOpts& opts, const std::string& source, const std::string& target,
              const std::string& metric_name) {
    if (source == target) {
        throw redsim::InputError("route: source and target must differ");
    }
    const redsim::NetworkGraph graph = redsim::parse_network(redsim::load_json_file(opts.input));
    if (!graph.has_node(source)) {
        throw redsim::InputError("route: unknown source \"" + source + "\"");
    }
    if (!graph.has_node(target)) {
        throw redsim::InputError("route: unknown target \"" + target + "\"");
    }
    const redsim::RouteMetric metric = metric_name == "capacity" ? redsim::RouteMetric::capacity
                                                                 : redsim::RouteMetric::fidelity;

    const redsim::RouteReport report = redsim::best_path(graph, source, target, metric);

    if (opts.format == "json") {
        ordered_json doc;
        doc["command"] = "route";
        doc["source"] = source;
        doc["target"] = target;
        doc["metric"] = metric_name;
        doc["reachable"] = report.reachable;
        if (report.reachable) {
            doc["path"] = report.path;
            ordered_json edges = ordered_json::array();
            for (std::size_t k = 0; k < report.edge_indices.size(); ++k) {
                const auto& e = graph.edges()[report.edge_indices[k]];
                ordered_json j;
                j["a"] = e.a;
                j["b"] = e.b;
                if (!e.label.empty()) j["label"] = e.label;
                j["concurrence"] = round12(report.edge_scores[k].concurrence);
                j["fidelity_term"] = round12(report.edge_scores[k].fidelity_term);
                j["capacity"] = round12(report.edge_scores[k].capacity);
                edges.push_back(std::move(j));
            }
            doc["edges"] = std::move(edges);
            doc["heuristic_score"] = round12(report.heuristic_score);
            ordered_json arr = ordered_json::array();
            for (const auto& po : report.simulated) {
                ordered_json j;
                j["indices"] = indices_to_json(po.indices);
                j["probability"] = round12(po.probability);
                j["possible"] = po.possible;
                if (po.possible) {
                    j["concurrence"] = round12(po.concurrence);
                    if (po.fidelity) j["fidelity"] = round12(*po.fidelity);
                    j["capacity"] = round12(po.capacity);
                    j["relation_residual"] = round12(po.relation_residual);
                }
                arr.push_back(std::move(j));
            }
            doc["outcomes"] = std::move(arr);
            doc["probability_sum"] = round12(report.probability_sum);
            if (report.best_outcome_fidelity) {
                doc["best_outcome_fidelity"] = round12(*report.best_outcome_fidelity);
            }
            if (report.avg_fidelity) doc["avg_fidelity"] = round12(*report.avg_fidelity);
            doc["best_outcome_capacity"] = round12(report.best_outcome_capacity);
            doc["avg_capacity"] = round12(report.avg_capacity);
            doc["max_relation_residual"] = round12(report.max_relation_residual);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        if (!report.reachable) {
            std::cout << "no usable path from " << source << " to " << target
                      << " (every route crosses a zero-concurrence link or none exists)\n";
        } else {
            std::cout << "path (" << metric_name << "):";
            for (const auto& n : report.path) std::cout << " " << n;
            std::cout << "\nheuristic score: " << fmt(report.heuristic_score) << "\n";
            std::cout << "edges:\n";
            for (std::size_t k = 0; k < report.edge_indices.size(); ++k) {
                const auto& e = graph.edges()[report.edge_indices[k]];
                std::cout << "  " << e.a << " -- " << e.b;
                if (!e.label.empty()) std::cout << " [" << e.label << "]";
                std::cout << ": concurrence " << fmt(report.edge_scores[k].concurrence)
                          << ", capacity " << fmt(report.edge_scores[k].capacity) << "\n";
            }
            std::cout << "outcomes:\n";
            for (const auto& po : report.simulated) {
                std::cout << "  " << indices_to_string(po.indices) << " p=" << fmt(po.probability);
                if (po.possible) {
                    std::cout << " C=" << fmt(po.concurrence);
                    if (po.fidelity) std::cout << " F=" << fmt(*po.fidelity);
                    std::cout << " cap=" << fmt(po.capacity)
                              << " residual=" << fmt(po.relation_residual);
                } else {
                    std::cout << " (impossible)";
                }
                std::cout << "\n";
            }
            std::cout << "probability sum: " << fmt(report.probability_sum) << "\n";
            if (report.best_outcome_fidelity) {
                std::cout << "best outcome fidelity: " << fmt(*report.best_outcome_fidelity)
                          << ", probability-weighted avg: " << fmt(*report.avg_fidelity) << "\n";
            }
            std::cout << "best outcome capacity: " << fmt(report.best_outcome_capacity)
                      << ", probability-weighted avg: " << fmt(report.avg_capacity) << "\n";
            std::cout << "max relation residual: " << fmt(report.max_relation_residual) << "\n";
        }
    }
    return report.reachable ? kExitOk : kExitUnreachable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact entanglement-swapping simulator, relation verifier and network router"};
    app.require_subcommand(1);

    redsim::VerifyConfig verify_config;
    CommonOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run the randomized relation suites");
    verify->add_option("--seed", verify_config.seed, "RNG seed");
    verify->add_option("--trials", verify_config.trials, "trial budget")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tolerance", verify_config.tolerance, "residual tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CommonOpts swap_opts;
    CLI::App* swap = app.add_subcommand("swap", "swap two states from a JSON file");
    swap->add_option("--input", swap_opts.input, "input file")->required();
    swap->add_option("--format", swap_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    double swap_n = 1.0, swap_m = 1.0;
    CLI::Option* swap_n_opt = swap->add_option("--n", swap_n, "entangling parameter n");
    CLI::Option* swap_m_opt = swap->add_option("--m", swap_m, "entangling parameter m");

    CommonOpts chain_opts;
    CLI::App* chain = app.add_subcommand("chain", "swap a chain of two-qubit states");
    chain->add_option("--input", chain_opts.input, "input file")->required();
    chain->add_option("--format", chain_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    double chain_n = 1.0, chain_m = 1.0;
    CLI::Option* chain_n_opt = chain->add_option("--n", chain_n, "n for every node");
    CLI::Option* chain_m_opt = chain->add_option("--m", chain_m, "m for every node");

    CommonOpts route_opts;
    std::string source, target, metric = "fidelity";
    CLI::App* route = app.add_subcommand("route", "best path through a network file");
    route->add_option("--input", route_opts.input, "network file")->required();
    route->add_option("--source", source, "source node")->required();
    route->add_option("--target", target, "target node")->required();
    route->add_option("--metric", metric, "fidelity or capacity")
        ->check(CLI::IsMember({"fidelity", "capacity"}));
    route->add_option("--format", route_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(verify_config, verify_opts.format);
        if (app.got_subcommand(swap)) {
            if (*swap_n_opt) swap_opts.n = swap_n;
            if (*swap_m_opt) swap_opts.m = swap_m;
            return cmd_swap(swap_opts);
        }
        if (app.got_subcommand(chain)) {
            if (*chain_n_opt) chain_opts.n = chain_n;
            if (*chain_m_opt) chain_opts.m = chain_m;
            return cmd_chain(chain_opts);
        }
        if (app.got_subcommand(route)) return cmd_route(route_opts, source, target, metric);
    } catch (const redsim::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
