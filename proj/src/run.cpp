#include "dephasing/cli/run.hpp"

#include <stdexcept>

#include "dephasing/decoherence.hpp"
#include "dephasing/fidelity.hpp"
#include "dephasing/scaling.hpp"
#include "dephasing/susceptibility.hpp"

namespace dephasing::cli {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

DifferenceVector difference_of(const RunConfig& c, std::size_t L) {
    switch (c.state) {
        case StateKind::GHZ: return uniform_difference(L);
        case StateKind::GHZPrime: return alternating_difference(L);
        case StateKind::ExplicitD: return DifferenceVector(c.explicit_d);
        case StateKind::BasisPair: return BasisPair(c.pair_i, c.pair_j).difference();
    }
    throw std::logic_error("unreachable");
}

std::size_t register_size(const RunConfig& c) {
    if (c.state == StateKind::ExplicitD) return c.explicit_d.size();
    if (c.state == StateKind::BasisPair) return c.pair_i.size();
    return c.L;
}

std::function<double(double)> susceptibility_fn(const RunConfig& c, std::size_t L) {
    if (c.state == StateKind::GHZ) return family_susceptibility(StateFamily::GHZ, L, c.a);
    if (c.state == StateKind::GHZPrime) {
        return family_susceptibility(StateFamily::GHZPrime, L, c.a);
    }
    return susceptibility_of_frequency(difference_of(c, L), QubitLayout::linear_array(L, c.a));
}

ContinuumOptions continuum_options(const RunConfig& c) {
    ContinuumOptions opts;
    opts.rel_tol = c.tolerance;
    opts.solid_angle_factor = c.solid_angle_factor;
    return opts;
}

GammaSplit gamma_at(const RunConfig& c, std::size_t L, double t) {
    switch (c.engine) {
        case Engine::Discrete: {
            if (c.modes.empty()) {
                throw std::invalid_argument("engine=discrete requires a modes list");
            }
            return gamma_discrete(difference_of(c, L), QubitLayout::linear_array(L, c.a),
                                  DiscreteModeSet{c.modes}, t);
        }
        case Engine::Quadrature:
            return gamma_continuum_fn(susceptibility_fn(c, L), c.a * static_cast<double>(L),
                                      c.J, c.N, t, continuum_options(c));
        case Engine::ClosedForm: {
            const auto* ohmic = std::get_if<OhmicFamily>(&c.J);
            if (ohmic == nullptr) {
                throw std::invalid_argument(
                    "engine=closed-form requires an ohmic-family spectral density");
            }
            const auto ctx = ClosedFormContext::for_vector(difference_of(c, L), c.a, ohmic->dim,
                                                           ohmic->alpha, ohmic->omega_c);
            GammaSplit out;
            out.vac = c.solid_angle_factor * vacuum_closed_form(ctx, t);
            if (!std::holds_alternative<Vacuum>(c.N)) {
                // The closed form covers the vacuum part only; excitations go
                // through quadrature.
                out.ex = gamma_continuum_fn(susceptibility_fn(c, L),
                                            c.a * static_cast<double>(L), c.J, c.N, t,
                                            continuum_options(c))
                             .ex;
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

RunOutput run_susceptibility(const RunConfig& c) {
    const std::size_t L = register_size(c);
    const auto gamma = susceptibility_fn(c, L);
    RunOutput out;
    out.columns = {"k", "gamma"};
    for (double k : linspace(c.k_min, c.k_max, c.k_steps)) {
        out.rows.push_back({k, gamma(k)});
    }
    return out;
}

RunOutput run_decoherence(const RunConfig& c) {
    const std::size_t L = register_size(c);
    RunOutput out;
    out.columns = {"t", "gamma_vac", "gamma_ex", "gamma_total"};
    for (double t : linspace(c.t_min, c.t_max, c.t_steps)) {
        const auto g = gamma_at(c, L, t);
        out.rows.push_back({t, g.vac, g.ex, g.total()});
    }
    return out;
}

RunOutput run_sweep(const RunConfig& c) {
    if (c.L_values.empty()) throw std::invalid_argument("command=sweep requires an Ls list");
    RunOutput out;
    if (c.quantity == Quantity::Coefficient) {
        out.columns = {"L", "coefficient"};
        for (std::size_t L : c.L_values) {
            const double coeff =
                leading_time_coefficient(susceptibility_fn(c, L), c.a * static_cast<double>(L),
                                         c.J, c.N, continuum_options(c));
            out.rows.push_back({static_cast<double>(L), coeff});
        }
        return out;
    }
    out.columns = {"L", "gamma_vac", "gamma_ex", "gamma_total"};
    for (std::size_t L : c.L_values) {
        const auto g = gamma_at(c, L, c.t_min);
        out.rows.push_back({static_cast<double>(L), g.vac, g.ex, g.total()});
    }
    return out;
}

RunOutput run_fidelity(const RunConfig& c) {
    if (c.modes.empty()) throw std::invalid_argument("command=fidelity requires a modes list");
    const std::size_t L = register_size(c);
    BasisPair pair = [&] {
        switch (c.state) {
            case StateKind::GHZ: return BasisPair::ghz(L);
            case StateKind::GHZPrime: return BasisPair::ghz_prime(L);
            case StateKind::BasisPair: return BasisPair(c.pair_i, c.pair_j);
            default:
                throw std::invalid_argument(
                    "command=fidelity requires state GHZ, GHZ' or pair");
        }
    }();
    const auto layout = QubitLayout::linear_array(L, c.a);
    const DiscreteModeSet modes{c.modes};
    RunOutput out;
    out.columns = {"t", "fidelity"};
    for (double t : linspace(c.t_min, c.t_max, c.t_steps)) {
        out.rows.push_back({t, dynamical_fidelity(pair, layout, modes, t, c.eps)});
    }
    return out;
}

RunOutput run_histogram(const RunConfig& c) {
    const std::size_t L = c.L;
    const auto h = susceptibility_histogram(L, QubitLayout::linear_array(L, c.a), {c.k_min},
                                            c.n_samples, c.seed, c.n_bins);
    RunOutput out;
    out.columns = {"bin_lo", "bin_hi", "count"};
    for (std::size_t b = 0; b < h.bin_counts.size(); ++b) {
        out.rows.push_back({h.bin_edges[b], h.bin_edges[b + 1],
                            static_cast<double>(h.bin_counts[b])});
    }
    return out;
}

}  // namespace

RunOutput execute(const RunConfig& config) {
    switch (config.command) {
        case Command::Susceptibility: return run_susceptibility(config);
        case Command::Decoherence: return run_decoherence(config);
        case Command::Sweep: return run_sweep(config);
        case Command::Fidelity: return run_fidelity(config);
        case Command::Histogram: return run_histogram(config);
        case Command::Figure:
            throw std::invalid_argument("figure configs must be expanded to presets first");
    }
    throw std::logic_error("unreachable");
}

}  // namespace dephasing::cli
