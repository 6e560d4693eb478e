#include "dephasing/cli/output.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "dephasing/version.hpp"
#include "json.hpp"

namespace dephasing::cli {

std::string format_value(double x) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string to_csv(const RunOutput& output) {
    std::string out;
    for (std::size_t i = 0; i < output.columns.size(); ++i) {
        if (i) out += ',';
        out += output.columns[i];
    }
    out += '\n';
    for (const auto& row : output.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_value(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_sidecar_json(const RunConfig& config) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["tolerance"] = config.tolerance;
    j["seed"] = config.seed;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [key, value] : config.raw) cfg[key] = value;
    j["config"] = cfg;
    return j.dump(2) + "\n";
}

void write_outputs(const std::string& path, const RunOutput& output, const RunConfig& config) {
    {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << to_csv(output);
    }
    {
        std::ofstream f(path + ".json");
        if (!f) throw std::runtime_error("cannot open sidecar file: " + path + ".json");
        f << to_sidecar_json(config);
    }
}

}  // namespace dephasing::cli
