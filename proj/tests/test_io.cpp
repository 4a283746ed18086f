#include <sstream>

#include "doctest.h"

#include "fbcd/io.hpp"
#include "fbcd/runspec.hpp"
#include "fbcd/solver.hpp"

using namespace fbcd;

namespace {

const char* kMinimalConfig = R"({
  "params": {"d1": 1, "d2": 1, "r1": 1, "r2": 1, "k": 0.5, "h": 0.5, "mu1": 1, "mu2": 1},
  "init": {"s1_0": 2.0, "s2_0": 2.0}
})";

} // namespace

TEST_CASE("parse_config: defaults, missing keys, bad values") {
    const RunSpec spec = parse_config(kMinimalConfig);
    CHECK(spec.grid.n_xi == 256);
    CHECK(spec.grid.dt == doctest::Approx(5e-4));
    CHECK(spec.grid.t_end == doctest::Approx(10.0));
    CHECK(spec.init.family == "cosine");
    CHECK(spec.outputs.dir == "out");
    CHECK(spec.outputs.svg);

    CHECK_THROWS_WITH_AS(
        parse_config(R"({"params": {"d2":1,"r1":1,"r2":1,"k":0,"h":0,"mu1":1,"mu2":1},
                         "init": {"s1_0":1,"s2_0":1}})"),
        "params.d1", SchemaError);

    CHECK_THROWS_AS(
        parse_config(R"({"params": {"d1":1,"d2":1,"r1":1,"r2":1,"k":-0.1,"h":0,"mu1":1,"mu2":1},
                         "init": {"s1_0":1,"s2_0":1}})"),
        ValueError);

    CHECK_THROWS_AS(parse_config("{nope"), SchemaError);
}

TEST_CASE("config round trip: parse(echo(spec)) == spec") {
    RunSpec spec = parse_config(kMinimalConfig);
    spec.grid.t_end = 42;
    spec.init.v_amp = 0.25;
    spec.outputs.dir = "elsewhere";
    const RunSpec back = parse_config(echo_config(spec));
    CHECK(back.params.k == spec.params.k);
    CHECK(back.init.v_amp == spec.init.v_amp);
    CHECK(back.grid.t_end == spec.grid.t_end);
    CHECK(back.grid.n_xi == spec.grid.n_xi);
    CHECK(back.outputs.dir == spec.outputs.dir);
    CHECK(echo_config(back) == echo_config(spec));
}

TEST_CASE("presets: every name parses back through its own echo") {
    for (const std::string& name : preset_names()) {
        const RunSpec spec = preset(name);
        const RunSpec back = parse_config(echo_config(spec));
        CHECK(echo_config(back) == echo_config(spec));
    }
    CHECK_THROWS_AS(preset("thm9-nonsense"), ValueError);
}

TEST_CASE("trajectory CSV: stable header and bit-identical reruns") {
    Params p;
    p.k = p.h = 0.5;
    InitialData init;
    init.s1_0 = init.s2_0 = 1.0;
    init.u0 = cosine_profile(0.5, 128);
    init.v0 = cosine_profile(0.5, 128);
    GridSpec grid;
    grid.n_xi = 64;
    grid.dt = 1e-3;
    grid.t_end = 1.0;

    std::ostringstream a, b;
    write_trajectory_csv(run(p, init, grid), a);
    write_trajectory_csv(run(p, init, grid), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, a.str().find('\n')) == "t,s1,s2,s1dot,s2dot,u0,v0,umax,vmax");

    std::ostringstream profs;
    write_profiles_csv(run(p, init, grid), profs);
    CHECK(profs.str().substr(0, profs.str().find('\n')) == "t,xi,u,v");
}

TEST_CASE("JSON documents expose the stable field names") {
    Params p;
    p.mu1 = 0.05;
    InitialData init;
    init.s1_0 = 1.0;
    init.s2_0 = 7.0;
    init.u0 = cosine_profile(0.5, 1024);
    init.v0 = cosine_profile(0.8, 1024);
    const std::string cert = certificate_to_json(thm6_certificate(p, init));
    for (const char* key : {"\"k_bound\"", "\"sigma_bar\"", "\"holds\"", "\"mu1_bar\"",
                            "\"ell_sigma\"", "\"delta_sigma\""})
        CHECK_MESSAGE(cert.find(key) != std::string::npos, "missing ", key, " in ", cert);

    Outcome outcome;
    const std::string doc = outcome_to_json(outcome, {}, {});
    for (const char* key : {"\"label\"", "\"slope\""})
        CHECK_MESSAGE(doc.find(key) != std::string::npos, "missing ", key, " in ", doc);
}
