#include "dephasing/cli/figures.hpp"

#include <stdexcept>

namespace dephasing::cli {

namespace {

std::string range(std::size_t lo, std::size_t hi) {
    std::string out;
    for (std::size_t L = lo; L <= hi; ++L) {
        if (!out.empty()) out += ',';
        out += std::to_string(L);
    }
    return out;
}

// Susceptibility of the two register families on an 8-qubit array over one
// Brillouin zone; the grid lands exactly on k = pi where the peak sits.
std::vector<PresetRun> fig3() {
    const char* common =
        "command=susceptibility\n"
        "L=8\n"
        "a=1\n"
        "k=0:2pi:401\n";
    return {
        {"-ghz", std::string(common) + "state=GHZ\n"},
        {"-ghzprime", std::string(common) + "state=GHZ'\n"},
    };
}

// Decoherence vs register size at t=20 in a vacuum ohmic-family reservoir,
// closed-form engine, one file per spectral exponent.
std::vector<PresetRun> fig4(const std::string& state) {
    std::vector<PresetRun> out;
    for (int dim : {1, 2, 3}) {
        out.push_back({"-d" + std::to_string(dim),
                       "command=sweep\n"
                       "state=" + state + "\n"
                       "engine=closed-form\n"
                       "a=1\n"
                       "J=ohmic\n"
                       "alpha=1\n"
                       "dim=" + std::to_string(dim) + "\n"
                       "omega_c=20\n"
                       "t=20\n"
                       "Ls=" + range(1, 30) + "\n"});
    }
    return out;
}

// Leading-order coefficient of Gamma(t) vs register size for a band-limited
// reservoir with a narrow excitation peak at pi/a; one file per peak width.
std::vector<PresetRun> fig5() {
    const std::string common =
        "command=sweep\n"
        "quantity=coefficient\n"
        "state=GHZ'\n"
        "engine=quadrature\n"
        "a=1\n"
        "J=band\n"
        "alpha1=1\n"
        "omega_max=2pi\n"
        "factor=2\n"
        "tolerance=1e-8\n"
        "Ls=" + range(1, 100) + "\n";
    return {
        {"-delta", common + "N=delta\nomega0=pi\nNtot=10\n"},
        {"-sigma50", common + "N=gaussian\nomega0=pi\nsigma=2pi/50\nNtot=10\n"},
        {"-sigma100", common + "N=gaussian\nomega0=pi\nsigma=2pi/100\nNtot=10\n"},
    };
}

// Closed-form decoherence of the 6-qubit alternating register over time in a
// dim=2 vacuum reservoir; shows the L-1 sharp extrema at t/a = 1..L-1.
std::vector<PresetRun> fig6() {
    return {{"",
             "command=decoherence\n"
             "state=GHZ'\n"
             "engine=closed-form\n"
             "L=6\n"
             "a=1\n"
             "J=ohmic\n"
             "alpha=1\n"
             "dim=2\n"
             "omega_c=10\n"
             "t=0:15:1501\n"}};
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig3", "fig4-left", "fig4-right", "fig5", "fig6"};
}

std::vector<PresetRun> preset_runs(const std::string& name) {
    if (name == "fig3") return fig3();
    if (name == "fig4-left") return fig4("GHZ");
    if (name == "fig4-right") return fig4("GHZ'");
    if (name == "fig5") return fig5();
    if (name == "fig6") return fig6();
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace dephasing::cli
