#include "dephasing/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dephasing::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

// pi in config values may be written symbolically: "pi", "2pi/50", "pi/4".
std::optional<double> parse_pi_expr(const std::string& v) {
    const auto pos = v.find("pi");
    if (pos == std::string::npos) return std::nullopt;
    double mult = 1.0;
    const std::string pre = trim(v.substr(0, pos));
    if (!pre.empty()) {
        try {
            mult = std::stod(pre);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    double div = 1.0;
    std::string post = trim(v.substr(pos + 2));
    if (!post.empty()) {
        if (post.front() != '/') return std::nullopt;
        try {
            div = std::stod(post.substr(1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return mult * std::numbers::pi / div;
}

struct Parser {
    std::vector<std::string> errors;

    void fail(const std::string& key, const std::string& why) {
        errors.push_back("key '" + key + "': " + why);
    }

    std::optional<double> number(const std::string& key, const std::string& v) {
        if (const auto pi = parse_pi_expr(v)) return *pi;
        try {
            std::size_t pos = 0;
            const double x = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("trailing characters");
            return x;
        } catch (const std::exception&) {
            fail(key, "not a number: '" + v + "'");
            return std::nullopt;
        }
    }

    std::optional<std::size_t> positive_int(const std::string& key, const std::string& v) {
        const auto x = number(key, v);
        if (!x) return std::nullopt;
        if (*x < 1.0 || *x != std::floor(*x)) {
            fail(key, "must be a positive integer");
            return std::nullopt;
        }
        return static_cast<std::size_t>(*x);
    }

    // Grids are written either as a single value or as min:max:steps.
    void grid(const std::string& key, const std::string& v, double& lo, double& hi,
              std::size_t& steps) {
        const auto parts = split(v, ':');
        if (parts.size() == 1) {
            if (const auto x = number(key, parts[0])) {
                lo = hi = *x;
                steps = 1;
            }
        } else if (parts.size() == 3) {
            const auto a = number(key, parts[0]);
            const auto b = number(key, parts[1]);
            const auto n = positive_int(key, parts[2]);
            if (a && b && n) {
                lo = *a;
                hi = *b;
                steps = *n;
                if (hi < lo) fail(key, "grid max below min");
            }
        } else {
            fail(key, "expected a single value or min:max:steps");
        }
    }
};

}  // namespace

ParseResult parse_config(const std::string& text) {
    Parser p;
    std::map<std::string, std::string> kv;

    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            p.errors.push_back("line " + std::to_string(line_no) + ": expected key=value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            p.errors.push_back("line " + std::to_string(line_no) + ": empty key");
            continue;
        }
        if (kv.count(key)) p.errors.push_back("line " + std::to_string(line_no) +
                                             ": duplicate key '" + key + "'");
        kv[key] = value;
    }

    RunConfig c;
    c.raw = kv;

    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    auto take_number = [&](const std::string& key, double& dst) {
        if (const auto v = take(key)) {
            if (const auto x = p.number(key, *v)) dst = *x;
        }
    };

    if (const auto v = take("command")) {
        if (*v == "susceptibility") c.command = Command::Susceptibility;
        else if (*v == "decoherence") c.command = Command::Decoherence;
        else if (*v == "sweep") c.command = Command::Sweep;
        else if (*v == "fidelity") c.command = Command::Fidelity;
        else if (*v == "histogram") c.command = Command::Histogram;
        else if (*v == "figure") c.command = Command::Figure;
        else p.fail("command", "unknown command '" + *v + "'");
    } else {
        p.fail("command", "missing (one of susceptibility, decoherence, sweep, fidelity, "
                          "histogram, figure)");
    }

    if (const auto v = take("state")) {
        if (*v == "GHZ") c.state = StateKind::GHZ;
        else if (*v == "GHZ'" || *v == "GHZprime") c.state = StateKind::GHZPrime;
        else if (*v == "explicit") c.state = StateKind::ExplicitD;
        else if (*v == "pair") c.state = StateKind::BasisPair;
        else p.fail("state", "unknown state '" + *v + "'");
    }

    if (const auto v = take("d")) {
        for (const auto& item : split(*v, ',')) {
            if (item == "1") c.explicit_d.push_back(1);
            else if (item == "-1") c.explicit_d.push_back(-1);
            else if (item == "0") c.explicit_d.push_back(0);
            else p.fail("d", "entries must be -1, 0 or 1");
        }
    }

    auto parse_spins = [&](const std::string& key, std::vector<int>& dst) {
        if (const auto v = take(key)) {
            for (const auto& item : split(*v, ',')) {
                const auto x = p.number(key, item);
                if (!x) continue;
                if (*x == 0.5 || *x == 1.0) dst.push_back(1);
                else if (*x == -0.5 || *x == -1.0) dst.push_back(-1);
                else p.fail(key, "spin components must be +-1/2");
            }
        }
    };
    parse_spins("i", c.pair_i);
    parse_spins("j", c.pair_j);

    if (const auto v = take("L")) {
        if (const auto x = p.positive_int("L", *v)) c.L = *x;
    }
    take_number("a", c.a);
    if (!(c.a > 0.0)) p.fail("a", "must be > 0");

    // Spectral density.
    {
        std::string jkind = "ohmic";
        if (const auto v = take("J")) jkind = *v;
        if (jkind == "ohmic") {
            OhmicFamily j;
            take_number("alpha", j.alpha);
            take_number("dim", j.dim);
            take_number("omega_c", j.omega_c);
            if (!(j.dim > 0.0)) p.fail("dim", "must be > 0");
            if (!(j.omega_c > 0.0)) p.fail("omega_c", "must be > 0");
            c.J = j;
        } else if (jkind == "band") {
            BandLimited j;
            take_number("alpha1", j.alpha1);
            take_number("omega_max", j.omega_max);
            if (!(j.omega_max > 0.0)) p.fail("omega_max", "must be > 0");
            c.J = j;
        } else {
            p.fail("J", "unknown spectral density '" + jkind + "' (ohmic, band)");
        }
    }

    // Occupation density.
    {
        std::string nkind = "vacuum";
        if (const auto v = take("N")) nkind = *v;
        if (nkind == "vacuum") {
            c.N = Vacuum{};
        } else if (nkind == "bose") {
            BoseEinstein n;
            take_number("T", n.T);
            if (n.T < 0.0) p.fail("T", "must be >= 0");
            c.N = n;
        } else if (nkind == "gaussian") {
            GaussianPeak n;
            take_number("omega0", n.omega0);
            take_number("sigma", n.sigma);
            take_number("Ntot", n.n_tot);
            if (!(n.sigma > 0.0)) p.fail("sigma", "must be > 0");
            if (n.n_tot < 0.0) p.fail("Ntot", "must be >= 0");
            c.N = n;
        } else if (nkind == "delta") {
            DeltaPeak n;
            take_number("omega0", n.omega0);
            take_number("Ntot", n.n_tot);
            if (n.n_tot < 0.0) p.fail("Ntot", "must be >= 0");
            c.N = n;
        } else {
            p.fail("N", "unknown occupation '" + nkind + "' (vacuum, bose, gaussian, delta)");
        }
    }

    if (const auto v = take("modes")) {
        for (const auto& entry : split(*v, ';')) {
            const auto fields = split(entry, ',');
            if (fields.size() != 5) {
                p.fail("modes", "each mode needs k,omega,gRe,gIm,Nbar");
                continue;
            }
            Mode m;
            bool good = true;
            const auto get = [&](int idx, double& dst) {
                if (const auto x = p.number("modes", fields[idx])) dst = *x;
                else good = false;
            };
            double gre = 1.0, gim = 0.0;
            get(0, m.k);
            get(1, m.omega);
            get(2, gre);
            get(3, gim);
            get(4, m.n_bar);
            m.g = {gre, gim};
            if (good && m.omega < 0.0) p.fail("modes", "omega must be >= 0");
            if (good && m.n_bar < 0.0) p.fail("modes", "Nbar must be >= 0");
            if (good) c.modes.push_back(m);
        }
    }

    if (const auto v = take("engine")) {
        if (*v == "discrete") c.engine = Engine::Discrete;
        else if (*v == "quadrature") c.engine = Engine::Quadrature;
        else if (*v == "closed-form") c.engine = Engine::ClosedForm;
        else p.fail("engine", "unknown engine '" + *v + "'");
    }

    if (const auto v = take("quantity")) {
        if (*v == "gamma") c.quantity = Quantity::Gamma;
        else if (*v == "coefficient") c.quantity = Quantity::Coefficient;
        else p.fail("quantity", "unknown quantity '" + *v + "' (gamma, coefficient)");
    }

    take_number("factor", c.solid_angle_factor);
    if (!(c.solid_angle_factor > 0.0)) p.fail("factor", "must be > 0");

    if (const auto v = take("t")) p.grid("t", *v, c.t_min, c.t_max, c.t_steps);
    if (c.t_min < 0.0) p.fail("t", "must be >= 0");
    if (const auto v = take("k")) p.grid("k", *v, c.k_min, c.k_max, c.k_steps);

    if (const auto v = take("Ls")) {
        for (const auto& item : split(*v, ',')) {
            if (const auto x = p.positive_int("Ls", item)) c.L_values.push_back(*x);
        }
        for (std::size_t i = 1; i < c.L_values.size(); ++i) {
            if (c.L_values[i] <= c.L_values[i - 1]) {
                p.fail("Ls", "must be strictly increasing");
                break;
            }
        }
    }

    if (const auto v = take("samples")) {
        if (const auto x = p.positive_int("samples", *v)) c.n_samples = *x;
    }
    if (const auto v = take("bins")) {
        if (const auto x = p.positive_int("bins", *v)) c.n_bins = *x;
    }
    if (const auto v = take("seed")) {
        if (const auto x = p.number("seed", *v)) {
            if (*x < 0.0 || *x != std::floor(*x)) p.fail("seed", "must be a nonnegative integer");
            else c.seed = static_cast<std::uint64_t>(*x);
        }
    }
    take_number("eps", c.eps);
    take_number("tolerance", c.tolerance);
    if (!(c.tolerance > 0.0)) p.fail("tolerance", "must be > 0");
    if (const auto v = take("threads")) {
        if (const auto x = p.positive_int("threads", *v)) c.threads = static_cast<int>(*x);
    }
    if (const auto v = take("figure")) c.figure = *v;
    if (const auto v = take("out")) c.out_path = *v;

    for (const auto& [key, value] : kv) {
        p.fail(key, "unknown key");
    }

    // Cross-field checks mirroring the module preconditions.
    if (c.state == StateKind::ExplicitD && c.explicit_d.empty() && p.errors.empty()) {
        p.fail("d", "state=explicit requires a d list");
    }
    if (c.state == StateKind::BasisPair) {
        if (c.pair_i.empty() || c.pair_i.size() != c.pair_j.size()) {
            p.fail("i", "state=pair requires i and j lists of equal length");
        }
    }
    if ((c.state == StateKind::GHZ || c.state == StateKind::GHZPrime) &&
        c.command != Command::Figure && c.command != Command::Sweep && c.L % 2 != 0) {
        p.fail("L", "GHZ-family states require even L");
    }
    if (c.command == Command::Figure && c.figure.empty()) {
        p.fail("figure", "command=figure requires a preset name");
    }

    ParseResult result;
    result.errors = std::move(p.errors);
    if (result.errors.empty()) result.config = std::move(c);
    return result;
}

std::string to_config_text(const RunConfig& config) {
    std::string out;
    for (const auto& [key, value] : config.raw) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

}  // namespace dephasing::cli
