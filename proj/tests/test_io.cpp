#include "redsim/io.hpp"
#include "redsim/measures.hpp"
#include "redsim/sampling.hpp"

#include <doctest.h>

#ifndef REDSIM_FIXTURES_DIR
#define REDSIM_FIXTURES_DIR "tests/fixtures"
#endif

using namespace redsim;

namespace {
std::string fixture(const char* name) {
    return std::string(REDSIM_FIXTURES_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("state round trip preserves amplitudes") {
    Sampler sampler(31);
    const PureState s = sampler.pure_state(3, 2);
    const PureState back = parse_state(state_to_json(s), "roundtrip");
    CHECK((s.amp() - back.amp()).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("state parsing accepts bare reals and [re, im] pairs") {
    const nlohmann::json doc = {
        {"dims", {2, 2}},
        {"amp", {{0.6, {0.0, 0.8}}, {0.0, 0.0}}},
    };
    const PureState s = parse_state(doc, "mixed-forms");
    CHECK(s.amp(0, 0).real() == doctest::Approx(0.6));
    CHECK(s.amp(0, 1).imag() == doctest::Approx(0.8));
}

TEST_CASE("state parsing rejects malformed documents with a location") {
    CHECK_THROWS_WITH_AS(parse_state(nlohmann::json{{"amp", 1}}, "spot"),
                         doctest::Contains("spot"), InputError);
    const nlohmann::json bad_dims = {{"dims", {1, 2}}, {"amp", {{1.0, 0.0}}}};
    CHECK_THROWS_AS(parse_state(bad_dims, "spot"), InputError);
    const nlohmann::json short_row = {{"dims", {2, 2}}, {"amp", {{1.0}, {0.0, 0.0}}}};
    CHECK_THROWS_AS(parse_state(short_row, "spot"), InputError);
}

TEST_CASE("slightly denormalized states are renormalized, garbage rejected") {
    nlohmann::json doc = {{"dims", {2, 2}}, {"amp", {{0.70710643, 0.0}, {0.0, 0.7071067811865476}}}};
    const PureState s = parse_state(doc, "near");
    CHECK(s.amp().squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));

    doc["amp"][0][0] = 0.5;  // squared norm ≈ 0.75
    CHECK_THROWS_AS(parse_state(doc, "far"), InputError);
}

TEST_CASE("swap spec with explicit and defaulted parameters") {
    const nlohmann::json state = state_to_json(PureState::maximally_entangled(2));
    nlohmann::json doc = {{"states", {state, state}}};
    SwapSpec spec = parse_swap_spec(doc, 2);
    CHECK(spec.params_defaulted);
    CHECK(spec.params.size() == 1);
    CHECK(spec.params[0].n == 1.0);

    doc["n"] = 0.25;
    spec = parse_swap_spec(doc, 2);
    CHECK(!spec.params_defaulted);
    CHECK(spec.params[0].n == 0.25);
    CHECK(spec.params[0].m == 1.0);

    nlohmann::json chain = {{"states", {state, state, state}},
                            {"params", {{{"n", 0.5}}, {{"n", 0.7}, {"m", 0.2}}}}};
    spec = parse_swap_spec(chain, 2);
    CHECK(spec.params.size() == 2);
    CHECK(spec.params[1].m == 0.2);

    chain["params"] = {{{"n", 0.5}}};  // wrong count
    CHECK_THROWS_AS(parse_swap_spec(chain, 2), InputError);
}

TEST_CASE("network fixture files load and validate") {
    const NetworkGraph g = parse_network(load_json_file(fixture("triangle.json")));
    CHECK(g.nodes().size() == 3);
    CHECK(g.edges().size() == 3);
    CHECK(g.link_dim() == 2);
    CHECK(concurrence(g.edges()[0].resource) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(parse_network(load_json_file(fixture("bad_edge.json"))),
                         doctest::Contains("broken"), InputError);
}

TEST_CASE("network resources may reference named states") {
    const nlohmann::json doc = {
        {"nodes", {"A", "B"}},
        {"states", {{"link", state_to_json(PureState::maximally_entangled(2))}}},
        {"edges", {{{"a", "A"}, {"b", "B"}, {"resource", "link"}, {"label", "e"}}}},
    };
    const NetworkGraph g = parse_network(doc);
    CHECK(g.edges().size() == 1);

    nlohmann::json missing = doc;
    missing["edges"][0]["resource"] = "nope";
    CHECK_THROWS_WITH_AS(parse_network(missing), doctest::Contains("nope"), InputError);
}

TEST_CASE("file loader reports syntax errors with the path") {
    CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/path.json"),
                         doctest::Contains("/nonexistent/path.json"), InputError);
}

TEST_CASE("round12 keeps twelve significant digits") {
    CHECK(round12(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-13));
    CHECK(round12(0.25) == 0.25);
    CHECK(round12(1e-300) > 0.0);
}
