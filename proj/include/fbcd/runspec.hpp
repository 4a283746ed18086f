#pragma once

#include <string>
#include <vector>

#include "fbcd/params.hpp"
#include "fbcd/solver.hpp"

namespace fbcd {

struct InitSpec {
    std::string family = "cosine";  // cosine | bump | custom-table
    double u_amp = 0.5, v_amp = 0.5;
    double s1_0 = 1.0, s2_0 = 1.0;
    std::vector<double> u_table, v_table;  // custom-table samples
};

struct OutputSpec {
    std::string dir = "out";
    bool svg = true;
    bool profiles = true;
};

struct RunSpec {
    Params params;
    InitSpec init;
    GridSpec grid;
    OutputSpec outputs;
    std::string preset;  // optional name this spec came from
};

// JSON config -> validated RunSpec with defaults filled in.
// Schema: {"params":{"d1":..,"d2":..,"r1":..,"r2":..,"k":..,"h":..,"mu1":..,"mu2":..},
//          "init":{"family":"cosine","s1_0":..,"s2_0":..},
//          "grid":{"n_xi":256,"dt":..,"t_end":..},"outputs":{"dir":"...","svg":true}}
RunSpec parse_config(const std::string& text);

// RunSpec -> JSON with every default echoed back; parse_config(echo(s)) == s.
std::string echo_config(const RunSpec& spec);

InitialData make_initial(const InitSpec& init, int n_samples = 1025);

RunSpec preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace fbcd
