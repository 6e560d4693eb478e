// output.hpp — CSV table + JSON sidecar emission

#pragma once

#include <string>
#include <vector>

#include "dephasing/cli/config.hpp"

namespace dephasing::cli {

// A finished run: a rectangular table plus the config it came from.
struct RunOutput {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// CSV with a header row; values at 17 significant digits so a rerun can be
// compared byte for byte.
std::string to_csv(const RunOutput& output);

// Sidecar recording the config, library version and tolerances of the run.
std::string to_sidecar_json(const RunConfig& config);

// Writes `csv` to `path` and the sidecar next to it at `path + ".json"`.
void write_outputs(const std::string& path, const RunOutput& output, const RunConfig& config);

std::string format_value(double x);

}  // namespace dephasing::cli
