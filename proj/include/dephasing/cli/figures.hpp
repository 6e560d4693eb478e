// figures.hpp — Compiled-in figure-reproduction presets

#pragma once

#include <string>
#include <vector>

namespace dephasing::cli {

// One output file of a preset: the config text to run and the suffix appended
// to the output path (empty for single-file presets).
struct PresetRun {
    std::string suffix;
    std::string config_text;
};

std::vector<std::string> preset_names();

// Throws std::invalid_argument for unknown names.
std::vector<PresetRun> preset_runs(const std::string& name);

}  // namespace dephasing::cli
