// run.hpp — Executes a parsed RunConfig and assembles the output table

#pragma once

#include "dephasing/cli/config.hpp"
#include "dephasing/cli/output.hpp"

namespace dephasing::cli {

// Runs one computation. Figure configs must be expanded to concrete configs
// first (see figures.hpp). Throws quadrature_error on numerical failure and
// std::invalid_argument on configs the engines cannot serve.
RunOutput execute(const RunConfig& config);

}  // namespace dephasing::cli
