// config.hpp — Flat key=value run configuration for the CLI

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dephasing/reservoir.hpp"

namespace dephasing::cli {

enum class Command { Susceptibility, Decoherence, Sweep, Fidelity, Histogram, Figure };

enum class StateKind { GHZ, GHZPrime, ExplicitD, BasisPair };

enum class Engine { Discrete, Quadrature, ClosedForm };

// What a sweep tabulates per L: the decoherence function at the configured
// time, or its leading-order coefficient lim_{t->0} Gamma/t^2.
enum class Quantity { Gamma, Coefficient };

struct RunConfig {
    Command command = Command::Decoherence;

    StateKind state = StateKind::GHZ;
    std::vector<int> explicit_d;       // StateKind::ExplicitD
    std::vector<int> pair_i, pair_j;   // StateKind::BasisPair, doubled spins (+-1)

    std::size_t L = 2;
    double a = 1.0;

    SpectralDensity J = OhmicFamily{};
    OccupationDensity N = Vacuum{};
    std::vector<Mode> modes;  // Engine::Discrete

    Engine engine = Engine::ClosedForm;
    Quantity quantity = Quantity::Gamma;
    double solid_angle_factor = 1.0;

    // Time grid (single point when t_steps == 1).
    double t_min = 0.0, t_max = 0.0;
    std::size_t t_steps = 1;

    // Wavenumber grid for susceptibility runs.
    double k_min = 0.0, k_max = 0.0;
    std::size_t k_steps = 1;

    std::vector<std::size_t> L_values;  // sweep

    std::size_t n_samples = 10000;  // histogram
    std::size_t n_bins = 64;
    std::uint64_t seed = 0;

    double eps = 1.0;  // fidelity coupling scale

    double tolerance = 1e-9;
    int threads = 1;
    std::string figure;  // figure preset name
    std::string out_path;

    // Original key=value lines, preserved for the reproducibility sidecar.
    std::map<std::string, std::string> raw;
};

struct ParseResult {
    std::optional<RunConfig> config;
    std::vector<std::string> errors;  // all validation errors, not just the first
    bool ok() const { return config.has_value(); }
};

// Parses the documented flat key=value format: one key per line, `#` starts
// a comment, blank lines ignored.
ParseResult parse_config(const std::string& text);

// Serializes a config back to the flat format (keys in a stable order).
std::string to_config_text(const RunConfig& config);

}  // namespace dephasing::cli
