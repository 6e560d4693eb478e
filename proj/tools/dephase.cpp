// dephase — CLI front end: susceptibilities, decoherence functions, sweeps,
// fidelities, histograms and figure-reproduction presets.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dephasing/cli/config.hpp"
#include "dephasing/cli/figures.hpp"
#include "dephasing/cli/output.hpp"
#include "dephasing/cli/run.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/version.hpp"

namespace {

void print_error_json(const std::string& kind, const std::vector<std::string>& messages) {
    nlohmann::json j;
    j["error"] = kind;
    j["messages"] = messages;
    std::cerr << j.dump(2) << std::endl;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    if (suffix.empty()) return path;
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

struct Overrides {
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;

    void apply(dephasing::cli::RunConfig& config) const {
        if (tolerance) {
            config.tolerance = *tolerance;
            config.raw["tolerance"] = dephasing::cli::format_value(*tolerance);
        }
        if (seed) {
            config.seed = *seed;
            config.raw["seed"] = std::to_string(*seed);
        }
        if (threads) {
            config.threads = *threads;
            config.raw["threads"] = std::to_string(*threads);
        }
    }
};

int run_one(const std::string& config_text, const std::string& out_path,
            const Overrides& overrides, bool show_config) {
    auto parsed = dephasing::cli::parse_config(config_text);
    if (!parsed.ok()) {
        print_error_json("validation", parsed.errors);
        return 1;
    }
    auto config = std::move(*parsed.config);
    overrides.apply(config);
    if (show_config) {
        std::cout << dephasing::cli::to_config_text(config);
        return 0;
    }
    const auto output = dephasing::cli::execute(config);
    dephasing::cli::write_outputs(out_path, output, config);
    std::cout << out_path << ": " << output.rows.size() << " rows\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dephasing susceptibilities and decoherence functions for qubit registers"};
    app.set_version_flag("--version", std::string(dephasing::kVersion));

    std::string config_path;
    std::string preset;
    std::string out_path = "out.csv";
    Overrides overrides;
    bool show_config = false;

    auto* config_opt = app.add_option("--config", config_path, "Path to a key=value config file");
    auto* preset_opt = app.add_option("--preset", preset, "Figure preset name")
                           ->check(CLI::IsMember(dephasing::cli::preset_names()));
    app.add_option("--out", out_path, "Output CSV path (sidecar written next to it)");
    app.add_option("--tolerance", overrides.tolerance, "Override the numerical tolerance");
    app.add_option("--seed", overrides.seed, "Override the RNG seed");
    app.add_option("--threads", overrides.threads, "Worker thread count");
    app.add_flag("--show-config", show_config, "Print the resolved config instead of running");
    config_opt->excludes(preset_opt);

    CLI11_PARSE(app, argc, argv);

    if (config_path.empty() && preset.empty()) {
        print_error_json("usage", {"one of --config or --preset is required"});
        return 1;
    }

    try {
        if (!preset.empty()) {
            int rc = 0;
            for (const auto& run : dephasing::cli::preset_runs(preset)) {
                if (show_config && !run.suffix.empty()) {
                    std::cout << "# " << preset << run.suffix << "\n";
                }
                rc = run_one(run.config_text, with_suffix(out_path, run.suffix), overrides,
                             show_config);
                if (rc != 0) return rc;
            }
            return rc;
        }

        std::ifstream f(config_path);
        if (!f) {
            print_error_json("io", {"cannot read config file: " + config_path});
            return 1;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        return run_one(buf.str(), out_path, overrides, show_config);
    } catch (const dephasing::quadrature_error& e) {
        print_error_json("numerical", {e.what()});
        return 2;
    } catch (const std::invalid_argument& e) {
        print_error_json("validation", {e.what()});
        return 1;
    } catch (const std::exception& e) {
        print_error_json("runtime", {e.what()});
        return 2;
    }
}
