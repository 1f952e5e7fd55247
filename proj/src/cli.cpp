#include "qudit/cli.hpp"

#include "qudit/format.hpp"
#include "qudit/parallel.hpp"
#include "qudit/phase_space.hpp"
#include "qudit/special_fn.hpp"
#include "qudit/tomography.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

namespace qudit::cli {

namespace {

double parse_real(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError("invalid number '" + std::string(s) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::alpha: return "alpha";
        case Family::beta: return "beta";
        case Family::cat_even: return "cat-even";
        case Family::cat_odd: return "cat-odd";
        case Family::gamma: return "gamma";
    }
    return "?";
}

void require_dim_range(const RunConfig& cfg, int max_dim, const char* command) {
    if (cfg.dim < 1 || cfg.dim > max_dim) {
        throw std::invalid_argument(std::string(command) + ": --dim must lie in [1, " +
                                    std::to_string(max_dim) + "]");
    }
}

void write_output(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.out.empty()) {
        out << content;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::ios_base::failure("cannot open '" + cfg.out + "' for writing");
    file << content;
    if (!file) throw std::ios_base::failure("write to '" + cfg.out + "' failed");
}

}  // namespace

Complex parse_amplitude(std::string_view token, int dim) {
    token = trim(token);
    if (token == "Td" || token == "Td/2") {
        if (dim < 2) throw ParseError("symbolic amplitude '" + std::string(token) + "' needs --dim >= 2");
        const double t = quasiperiod(dim).value;
        return token == "Td" ? t : 0.5 * t;
    }
    const auto comma = token.find(',');
    if (comma == std::string_view::npos) return parse_real(token);
    return {parse_real(trim(token.substr(0, comma))), parse_real(trim(token.substr(comma + 1)))};
}

Family parse_family(std::string_view token) {
    static const std::map<std::string_view, Family> names = {
        {"alpha", Family::alpha},     {"beta", Family::beta},   {"cat-even", Family::cat_even},
        {"cat-odd", Family::cat_odd}, {"gamma", Family::gamma},
    };
    if (auto it = names.find(token); it != names.end()) return it->second;
    throw ParseError("unknown family '" + std::string(token) + "'");
}

QuditState build_state(const RunConfig& cfg) {
    const QcsParams p(cfg.dim, parse_amplitude(cfg.amplitude, cfg.dim));
    switch (cfg.family) {
        case Family::alpha: return nonlinear_qcs(p);
        case Family::beta: return linear_qcs(p);
        case Family::cat_even: return cat_state(cfg.cat_kind, CatParity::even, p);
        case Family::cat_odd: return cat_state(cfg.cat_kind, CatParity::odd, p);
        case Family::gamma: return complementary_state(p);
    }
    throw std::invalid_argument("build_state: unknown family");
}

std::string describe(const RunConfig& cfg) {
    const Complex a = parse_amplitude(cfg.amplitude, cfg.dim);
    std::string s = std::string("family=") + family_name(cfg.family);
    if (cfg.family == Family::cat_even || cfg.family == Family::cat_odd) {
        s += cfg.cat_kind == StateKind::alpha ? " kind=alpha" : " kind=beta";
    }
    return s + " dim=" + std::to_string(cfg.dim) + " amp=" + format_g17(a.real()) + "," +
           format_g17(a.imag());
}

std::string state_table(const QuditState& s) {
    std::string out = "   n      modulus        phase\n";
    char line[96];
    for (int n = 0; n < s.dim(); ++n) {
        const double mod = std::abs(s[n]);
        const double phase = mod > 0.0 ? std::arg(s[n]) : 0.0;
        std::snprintf(line, sizeof line, "%4d  %11s  %11s\n", n, format_fixed(mod, 8).c_str(),
                      format_fixed(phase, 8).c_str());
        out += line;
    }
    return out;
}

std::string cmd_state(const RunConfig& cfg) {
    require_dim_range(cfg, 150, "state");
    const QuditState s = build_state(cfg);
    if (cfg.format == Format::json) return to_json(s) + "\n";
    std::string out = "n,re,im,modulus,phase\n";
    for (int n = 0; n < s.dim(); ++n) {
        const double mod = std::abs(s[n]);
        out += std::to_string(n) + "," + format_g17(s[n].real()) + "," + format_g17(s[n].imag()) +
               "," + format_g17(mod) + "," + format_g17(mod > 0.0 ? std::arg(s[n]) : 0.0) + "\n";
    }
    return out;
}

std::string cmd_wigner(const RunConfig& cfg) {
    require_dim_range(cfg, 32, "wigner");
    const QuditState s = build_state(cfg);
    if (!(cfg.window >= 0.0)) throw std::invalid_argument("wigner: --window must be positive");
    Window window = default_window(cfg.dim);
    if (cfg.window > 0.0) window = {-cfg.window, cfg.window, -cfg.window, cfg.window};
    const WignerGrid grid = wigner_grid(s, window, cfg.nq, cfg.np, describe(cfg));
    return cfg.format == Format::json ? to_json(grid) : to_csv(grid);
}

std::string cmd_tomogram(const RunConfig& cfg) {
    require_dim_range(cfg, 32, "tomogram");
    const QuditState s = build_state(cfg);
    const Tomogram t = tomogram_grid(s, cfg.nq, cfg.ntheta, describe(cfg));
    return cfg.format == Format::json ? to_json(t) : to_csv(t);
}

std::string cmd_photon_dist(const RunConfig& cfg) {
    require_dim_range(cfg, 150, "photon-dist");
    const QcsParams p(cfg.dim, parse_amplitude(cfg.amplitude, cfg.dim));
    const auto pa = photon_distribution(nonlinear_qcs(p));
    const auto pb = photon_distribution(linear_qcs(p));
    if (cfg.format == Format::json) {
        nlohmann::ordered_json j;
        j["kind"] = "photon-distribution";
        j["dim"] = cfg.dim;
        j["amp"] = {p.amplitude.real(), p.amplitude.imag()};
        j["P_alpha"] = pa;
        j["P_beta"] = pb;
        return j.dump() + "\n";
    }
    std::string out = "n,P_alpha,P_beta\n";
    for (int n = 0; n < cfg.dim; ++n) {
        out += std::to_string(n) + "," + format_g17(pa[n]) + "," + format_g17(pb[n]) + "\n";
    }
    return out;
}

std::string cmd_fidelity_table(const std::vector<int>& dims, Format format) {
    for (int d : dims) {
        if (d < 2 || d > 150) throw std::invalid_argument("fidelity-table: each d must lie in [2, 150]");
    }
    std::vector<FidelityRow> rows;
    rows.reserve(dims.size());
    for (int d : dims) rows.push_back(fidelity_row(d));

    if (format == Format::json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            j.push_back({{"d", r.dim},
                         {"F_alpha_beta", r.alpha_beta},
                         {"F_alpha_alphacat", r.alpha_alpha_cat},
                         {"F_alpha_betacat", r.alpha_beta_cat},
                         {"F_alphacat_betacat", r.cat_cat},
                         {"F_mix", r.mixed}});
        }
        return j.dump() + "\n";
    }
    std::string out = "d,F_alpha_beta,F_alpha_alphacat,F_alpha_betacat,F_alphacat_betacat,F_mix\n";
    for (const auto& r : rows) {
        out += std::to_string(r.dim) + "," + format_fixed(r.alpha_beta, 4) + "," +
               format_fixed(r.alpha_alpha_cat, 4) + "," + format_fixed(r.alpha_beta_cat, 4) + "," +
               format_fixed(r.cat_cat, 4) + "," + format_fixed(r.mixed, 4) + "\n";
    }
    return out;
}

std::string cmd_volume_sweep(const RunConfig& cfg, int n_points) {
    if (cfg.dim < 2 || cfg.dim > 8) {
        throw std::invalid_argument("volume-sweep: --dim must lie in [2, 8]");
    }
    if (n_points < 2) throw std::invalid_argument("volume-sweep: --points must be >= 2");
    const double period = quasiperiod(cfg.dim).value;
    std::vector<double> xs(static_cast<std::size_t>(n_points));
    std::vector<double> da(xs.size());
    std::vector<double> db(xs.size());
    for (int i = 0; i < n_points; ++i) {
        xs[i] = 2.0 * i / (n_points - 1);
        const QcsParams p(cfg.dim, xs[i] * period);
        da[i] = nonclassical_volume(nonlinear_qcs(p));
        db[i] = nonclassical_volume(linear_qcs(p));
    }
    if (cfg.format == Format::json) {
        nlohmann::ordered_json j;
        j["kind"] = "volume-sweep";
        j["dim"] = cfg.dim;
        j["Td"] = period;
        j["alpha_over_Td"] = xs;
        j["delta_alpha"] = da;
        j["delta_beta"] = db;
        return j.dump() + "\n";
    }
    std::string out = "alpha_over_Td,delta_alpha,delta_beta\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_g17(xs[i]) + "," + format_g17(da[i]) + "," + format_g17(db[i]) + "\n";
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qudit coherent states: construction, phase-space grids and fidelity tables"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family = "alpha";
    std::string cat_kind = "alpha";
    std::string format = "csv";

    const auto add_state_flags = [&](CLI::App* sub) {
        sub->add_option("--dim", cfg.dim, "Hilbert-space dimension d")->capture_default_str();
        sub->add_option("--family", family, "alpha | beta | cat-even | cat-odd | gamma")
            ->capture_default_str();
        sub->add_option("--amp", cfg.amplitude, "amplitude: re[,im] | Td | Td/2")
            ->capture_default_str();
        sub->add_option("--cat-kind", cat_kind, "cat states built from alpha or beta")
            ->check(CLI::IsMember({"alpha", "beta"}))
            ->capture_default_str();
    };
    const auto add_io_flags = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output file (default: stdout)");
        sub->add_option("--format", format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };

    auto* state = app.add_subcommand("state", "write a state's amplitudes");
    add_state_flags(state);
    add_io_flags(state);

    auto* wigner = app.add_subcommand("wigner", "sample the Wigner function on a grid");
    add_state_flags(wigner);
    add_io_flags(wigner);
    wigner->add_option("--nq", cfg.nq)->capture_default_str();
    wigner->add_option("--np", cfg.np)->capture_default_str();
    wigner->add_option("--window", cfg.window, "half-width of the square window");

    auto* tomogram = app.add_subcommand("tomogram", "sample the optical tomogram");
    add_state_flags(tomogram);
    add_io_flags(tomogram);
    tomogram->add_option("--nq", cfg.nq)->capture_default_str();
    tomogram->add_option("--ntheta", cfg.ntheta)->capture_default_str();

    auto* photon = app.add_subcommand("photon-dist", "photon-number distributions");
    add_state_flags(photon);
    add_io_flags(photon);

    auto* table = app.add_subcommand("fidelity-table", "fidelities at alpha = beta = Td/2");
    table->add_option("--dims", cfg.dims, "dimensions")->delimiter(',')->capture_default_str();
    add_io_flags(table);

    auto* sweep = app.add_subcommand("volume-sweep", "nonclassical volume over alpha in [0, 2 Td]");
    sweep->add_option("--dim", cfg.dim)->capture_default_str();
    sweep->add_option("--points", cfg.points)->capture_default_str();
    add_io_flags(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    if (const char* env = std::getenv("QCS_THREADS")) {
        int n = 0;
        const std::string_view v(env);
        if (std::from_chars(v.data(), v.data() + v.size(), n).ec == std::errc{} && n > 0) {
            set_max_threads(static_cast<unsigned>(n));
        }
    }

    try {
        cfg.family = parse_family(family);
        cfg.cat_kind = cat_kind == "beta" ? StateKind::beta : StateKind::alpha;
        cfg.format = format == "json" ? Format::json : Format::csv;

        std::string content;
        if (state->parsed()) {
            cfg.command = "state";
            content = cmd_state(cfg);
            write_output(cfg, content, out);
            if (!cfg.out.empty()) out << state_table(build_state(cfg));
            return kOk;
        }
        if (wigner->parsed()) {
            content = cmd_wigner(cfg);
        } else if (tomogram->parsed()) {
            content = cmd_tomogram(cfg);
        } else if (photon->parsed()) {
            content = cmd_photon_dist(cfg);
        } else if (table->parsed()) {
            content = cmd_fidelity_table(cfg.dims, cfg.format);
        } else if (sweep->parsed()) {
            content = cmd_volume_sweep(cfg, cfg.points);
        }
        write_output(cfg, content, out);
        return kOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace qudit::cli
