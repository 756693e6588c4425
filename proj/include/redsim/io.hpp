// io.hpp
// JSON file formats: states ("dims" + "amp" with [re, im] pairs), swap/chain
// inputs, and network documents ("nodes"/"edges" with inline or referenced
// "resource" states).

#pragma once

#include "redsim/network.hpp"
#include "redsim/state.hpp"
#include "redsim/swap.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace redsim {

/// Malformed or semantically invalid input document; the message names the
/// offending location.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses {"dims": [dl, dr], "amp": [[[re, im], ...], ...]}. Accepts vectors
/// whose squared norm is within 1e-4 of 1 and renormalizes them.
PureState parse_state(const nlohmann::json& doc, const std::string& where);

nlohmann::json state_to_json(const PureState& s);

/// Input for swap/chain commands: two or more states plus per-node
/// measurement parameters ("n"/"m" at top level for a single swap, or a
/// "params" array of {"n", "m"} objects for chains). Missing parameters
/// default to 1 and are flagged.
struct SwapSpec {
    std::vector<PureState> states;
    std::vector<SwapParams> params;
    bool params_defaulted = false;
};

SwapSpec parse_swap_spec(const nlohmann::json& doc, std::size_t min_states);

/// Parses {"nodes": [...], "edges": [{"a", "b", "resource", "label"}], and an
/// optional top-level "states" map for referenced resources}. Rejections name
/// the edge.
NetworkGraph parse_network(const nlohmann::json& doc);

/// Reads and parses a JSON file; wraps syntax errors (with byte position) and
/// I/O failures in InputError.
nlohmann::json load_json_file(const std::string& path);

/// The value rounded to 12 significant digits, for stable report output.
double round12(double value);

}  // namespace redsim
