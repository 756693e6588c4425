#include "redsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace redsim {

namespace {

constexpr double kNormWindow = 1e-4;  // acceptable |Σ|amp|² − 1| before rejection

const nlohmann::json& require_field(const nlohmann::json& doc, const char* key,
                                    const std::string& where) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw InputError(where + ": missing field \"" + key + "\"");
    }
    return *it;
}

double require_number(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number()) {
        throw InputError(where + ": expected a number");
    }
    return v.get<double>();
}

}  // namespace

PureState parse_state(const nlohmann::json& doc, const std::string& where) {
    if (!doc.is_object()) {
        throw InputError(where + ": state must be an object with \"dims\" and \"amp\"");
    }
    const auto& dims = require_field(doc, "dims", where);
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
        !dims[1].is_number_integer()) {
        throw InputError(where + ": \"dims\" must be two integers");
    }
    const int dl = dims[0].get<int>();
    const int dr = dims[1].get<int>();
    if (dl < 2 || dr < 2) {
        throw InputError(where + ": dimensions must be >= 2");
    }
    const auto& amp = require_field(doc, "amp", where);
    if (!amp.is_array() || static_cast<int>(amp.size()) != dl) {
        throw InputError(where + ": \"amp\" must have dims[0] rows");
    }
    Eigen::MatrixXcd m(dl, dr);
    for (int i = 0; i < dl; ++i) {
        const auto& row = amp[i];
        if (!row.is_array() || static_cast<int>(row.size()) != dr) {
            throw InputError(where + ": \"amp\" row " + std::to_string(i) +
                             " must have dims[1] entries");
        }
        for (int j = 0; j < dr; ++j) {
            const auto& entry = row[j];
            if (entry.is_number()) {
                m(i, j) = Complex(entry.get<double>(), 0.0);
            } else if (entry.is_array() && entry.size() == 2) {
                m(i, j) = Complex(require_number(entry[0], where), require_number(entry[1], where));
            } else {
                throw InputError(where + ": amplitude (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") must be a number or an [re, im] pair");
            }
        }
    }
    const double norm2 = m.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormWindow) {
        std::ostringstream oss;
        oss << where << ": state is not normalizable (squared norm " << norm2 << ")";
        throw InputError(oss.str());
    }
    return PureState::normalized(std::move(m));
}

nlohmann::json state_to_json(const PureState& s) {
    nlohmann::json doc;
    doc["dims"] = {s.dim_left(), s.dim_right()};
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < s.dim_left(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < s.dim_right(); ++j) {
            row.push_back({round12(s.amp(i, j).real()), round12(s.amp(i, j).imag())});
        }
        rows.push_back(std::move(row));
    }
    doc["amp"] = std::move(rows);
    return doc;
}

SwapSpec parse_swap_spec(const nlohmann::json& doc, std::size_t min_states) {
    if (!doc.is_object()) {
        throw InputError("input: document must be an object");
    }
    const auto& states = require_field(doc, "states", "input");
    if (!states.is_array() || states.size() < min_states) {
        throw InputError("input: \"states\" must list at least " + std::to_string(min_states) +
                         " states");
    }
    SwapSpec spec;
    for (std::size_t k = 0; k < states.size(); ++k) {
        spec.states.push_back(parse_state(states[k], "states[" + std::to_string(k) + "]"));
    }

    const std::size_t swaps = spec.states.size() - 1;
    if (doc.contains("params")) {
        const auto& params = doc["params"];
        if (!params.is_array() || params.size() != swaps) {
            throw InputError("input: \"params\" must list one {n, m} object per intermediate node");
        }
        for (std::size_t k = 0; k < swaps; ++k) {
            const std::string where = "params[" + std::to_string(k) + "]";
            SwapParams p;
            if (params[k].contains("n")) p.n = require_number(params[k]["n"], where);
            if (params[k].contains("m")) p.m = require_number(params[k]["m"], where);
            spec.params.push_back(p);
        }
    } else {
        SwapParams p;
        bool given = false;
        if (doc.contains("n")) {
            p.n = require_number(doc["n"], "input.n");
            given = true;
        }
        if (doc.contains("m")) {
            p.m = require_number(doc["m"], "input.m");
            given = true;
        }
        spec.params.assign(swaps, p);
        spec.params_defaulted = !given;
    }
    return spec;
}

NetworkGraph parse_network(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw InputError("network: document must be an object");
    }
    const auto& nodes_json = require_field(doc, "nodes", "network");
    if (!nodes_json.is_array() || nodes_json.empty()) {
        throw InputError("network: \"nodes\" must be a non-empty array of names");
    }
    std::vector<std::string> nodes;
    for (const auto& n : nodes_json) {
        if (!n.is_string()) throw InputError("network: node names must be strings");
        nodes.push_back(n.get<std::string>());
    }

    std::map<std::string, PureState> named;
    if (doc.contains("states")) {
        if (!doc["states"].is_object()) {
            throw InputError("network: \"states\" must map names to state objects");
        }
        for (const auto& [name, value] : doc["states"].items()) {
            named.emplace(name, parse_state(value, "states." + name));
        }
    }

    const auto& edges_json = require_field(doc, "edges", "network");
    if (!edges_json.is_array()) {
        throw InputError("network: \"edges\" must be an array");
    }
    std::vector<NetworkEdge> edges;
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const auto& e = edges_json[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) throw InputError(where + ": edge must be an object");
        const auto& a = require_field(e, "a", where);
        const auto& b = require_field(e, "b", where);
        if (!a.is_string() || !b.is_string()) {
            throw InputError(where + ": endpoints \"a\" and \"b\" must be node names");
        }
        const auto& resource = require_field(e, "resource", where);
        PureState state = [&]() -> PureState {
            if (resource.is_string()) {
                auto it = named.find(resource.get<std::string>());
                if (it == named.end()) {
                    throw InputError(where + ": unknown state reference \"" +
                                     resource.get<std::string>() + "\"");
                }
                return it->second;
            }
            return parse_state(resource, where + ".resource");
        }();
        std::string label;
        if (e.contains("label")) {
            if (!e["label"].is_string()) throw InputError(where + ": \"label\" must be a string");
            label = e["label"].get<std::string>();
        }
        edges.push_back({a.get<std::string>(), b.get<std::string>(), std::move(state),
                         std::move(label)});
    }

    try {
        return NetworkGraph::create(std::move(nodes), std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open \"" + path + "\"");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw InputError(path + ": " + err.what());
    }
}

double round12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

}  // namespace redsim
