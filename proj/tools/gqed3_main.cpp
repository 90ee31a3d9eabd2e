// Command-line front end: single-point evaluation, parameter scans, the
// invariant suite and report generation. Exit codes: 0 ok, 1 usage,
// 2 domain error, 3 verification failure.

#include "gqed3/cross_section.hpp"
#include "gqed3/io.hpp"
#include "gqed3/report.hpp"
#include "gqed3/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

namespace {

using namespace gqed3;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct ScanSpec {
    double lo = 0.0, hi = 0.0;
    int steps = 0; // 0 = inactive
    bool log = false;
};

ScanSpec parse_scan(const std::string& text, const char* flag) {
    ScanSpec spec;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw CLI::ValidationError(flag, "expected min:max:steps[:log]");
    try {
        spec.lo = std::stod(parts[0]);
        spec.hi = std::stod(parts[1]);
        spec.steps = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "could not parse min:max:steps");
    }
    if (parts.size() == 4) {
        if (parts[3] == "log") spec.log = true;
        else if (parts[3] != "lin")
            throw CLI::ValidationError(flag, "spacing must be lin or log");
    }
    if (spec.steps < 1) throw CLI::ValidationError(flag, "steps must be >= 1");
    if (!(spec.lo < spec.hi)) throw CLI::ValidationError(flag, "need min < max");
    if (spec.log && !(spec.lo > 0.0))
        throw CLI::ValidationError(flag, "log spacing needs min > 0");
    return spec;
}

std::vector<double> scan_grid(const ScanSpec& s) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(s.steps));
    if (s.steps == 1) {
        g.push_back(s.lo);
        return g;
    }
    if (s.log) {
        const double llo = std::log(s.lo), lhi = std::log(s.hi);
        for (int i = 0; i < s.steps; ++i)
            g.push_back(std::exp(llo + (lhi - llo) * i / (s.steps - 1)));
    } else {
        for (int i = 0; i < s.steps; ++i)
            g.push_back(s.lo + (s.hi - s.lo) * i / (s.steps - 1));
    }
    return g;
}

std::string scan_echo(const ScanSpec& s) {
    return format_double(s.lo) + ":" + format_double(s.hi) + ":" +
           std::to_string(s.steps) + (s.log ? ":log" : ":lin");
}

/// Plain `key = value` configuration lines with # comments, expanded into
/// --key=value tokens. Spliced in ahead of the explicit flags, so the
/// command line overrides the file.
std::vector<std::string> load_config_args(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::vector<std::string> out;
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key = value, got: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw CLI::ValidationError("--config", "empty key in: " + line);
        out.push_back(value.empty() ? "--" + key : "--" + key + "=" + value);
    }
    return out;
}

/// Splices the expanded config right after the subcommand token.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        std::size_t width = 0;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            width = 2;
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            width = 1;
        }
        if (width == 0) continue;
        const auto expanded = load_config_args(path);
        args.erase(args.begin() + static_cast<long>(i),
                   args.begin() + static_cast<long>(i + width));
        std::size_t sub = args.size();
        for (std::size_t k = 0; k < args.size(); ++k)
            if (!args[k].empty() && args[k][0] != '-') {
                sub = k;
                break;
            }
        if (sub == args.size())
            throw CLI::ValidationError("--config", "configuration needs a subcommand");
        args.insert(args.begin() + static_cast<long>(sub) + 1, expanded.begin(),
                    expanded.end());
        break;
    }
    return args;
}

/// Contiguous-block worker partition; results land at their input index.
template <typename Fn>
void fill_indexed(std::size_t n, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::clamp<unsigned>(hw == 0 ? 1 : hw, 1, 8);
    if (n < 64 || workers < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t block = (n + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(n, lo + block);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

void write_output(const std::string& out_path,
                  const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw DomainError("cannot open output file " + out_path);
    writer(os);
}

void require_finite(const std::vector<SampleRow>& rows) {
    for (const auto& r : rows)
        if (!std::isfinite(r.value))
            throw DomainError("evaluation produced a non-finite value at E=" +
                              format_double(r.energy) +
                              " theta=" + format_double(r.theta));
}

struct PointOpts {
    double energy = std::numeric_limits<double>::quiet_NaN();
    double theta = std::numeric_limits<double>::quiet_NaN();
    double theta_deg = std::numeric_limits<double>::quiet_NaN();
    double p_mag = std::numeric_limits<double>::quiet_NaN();
    double alpha = 1.0 / 137.0;
    double m_P = std::numeric_limits<double>::infinity();
    double m_e = 0.510;
    std::string scan_theta, scan_theta_deg, scan_energy, scan_mp;
    std::string out, format = "csv";
};

void add_common(CLI::App* cmd, PointOpts& o, bool with_energy = true) {
    if (with_energy) cmd->add_option("--energy", o.energy, "per-beam CM energy (MeV)");
    auto* t = cmd->add_option("--theta", o.theta, "scattering angle (rad)");
    auto* td = cmd->add_option("--theta-deg", o.theta_deg, "scattering angle (deg)");
    t->excludes(td);
    td->excludes(t);
    cmd->add_option("--alpha", o.alpha, "fine-structure constant");
    cmd->add_option("--mp", o.m_P, "Podolsky cutoff mass (MeV); inf = massless photon");
    cmd->add_option("--me", o.m_e, "electron mass (MeV)");
    auto* st = cmd->add_option("--scan-theta", o.scan_theta, "theta scan min:max:steps[:log] (rad)");
    auto* std_ = cmd->add_option("--scan-theta-deg", o.scan_theta_deg,
                                 "theta scan min:max:steps[:log] (deg)");
    st->excludes(std_);
    std_->excludes(st);
    if (with_energy)
        cmd->add_option("--scan-energy", o.scan_energy, "energy scan min:max:steps[:log] (MeV)");
    cmd->add_option("--scan-mp", o.scan_mp, "cutoff scan min:max:steps[:log] (MeV)");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

struct Grids {
    std::vector<double> energies, thetas, mps;
    std::string echo_energy, echo_theta, echo_mp;
};

Grids build_grids(const PointOpts& o, bool energy_required) {
    Grids g;
    if (!o.scan_theta.empty()) {
        const ScanSpec s = parse_scan(o.scan_theta, "--scan-theta");
        if (!(s.lo > 0.0 && s.hi < M_PI))
            throw CLI::ValidationError("--scan-theta", "scan must stay inside (0, pi)");
        g.thetas = scan_grid(s);
        g.echo_theta = scan_echo(s);
    } else if (!o.scan_theta_deg.empty()) {
        ScanSpec s = parse_scan(o.scan_theta_deg, "--scan-theta-deg");
        s.lo *= M_PI / 180.0;
        s.hi *= M_PI / 180.0;
        if (!(s.lo > 0.0 && s.hi < M_PI))
            throw CLI::ValidationError("--scan-theta-deg", "scan must stay inside (0, 180)");
        g.thetas = scan_grid(s);
        g.echo_theta = scan_echo(s);
    } else if (!std::isnan(o.theta)) {
        g.thetas = {o.theta};
        g.echo_theta = format_double(o.theta);
    } else if (!std::isnan(o.theta_deg)) {
        g.thetas = {o.theta_deg * M_PI / 180.0};
        g.echo_theta = format_double(g.thetas[0]);
    } else {
        throw CLI::RequiredError("--theta, --theta-deg or a theta scan");
    }

    if (!o.scan_energy.empty()) {
        const ScanSpec s = parse_scan(o.scan_energy, "--scan-energy");
        g.energies = scan_grid(s);
        g.echo_energy = scan_echo(s);
    } else if (!std::isnan(o.energy)) {
        g.energies = {o.energy};
        g.echo_energy = format_double(o.energy);
    } else if (energy_required) {
        throw CLI::RequiredError("--energy or --scan-energy");
    }

    if (!o.scan_mp.empty()) {
        const ScanSpec s = parse_scan(o.scan_mp, "--scan-mp");
        g.mps = scan_grid(s);
        g.echo_mp = scan_echo(s);
    } else {
        g.mps = {o.m_P};
        g.echo_mp = format_double(o.m_P);
    }
    return g;
}

int run_xsec(const PointOpts& o, const std::string& formula_str,
             const std::string& source_str) {
    const FormulaId id = parse_formula(formula_str);
    const TraceSource source = source_str == "closed" ? TraceSource::closed_form
                                                      : TraceSource::brute_force;

    bool have_p = !std::isnan(o.p_mag);
    double p_mag = o.p_mag;
    Grids g = build_grids(o, /*energy_required=*/id != FormulaId::nonrel);
    if (g.energies.empty()) {
        // momentum-driven nonrel evaluation; 1 MeV when nothing is given
        if (!have_p) {
            p_mag = 1.0;
            have_p = true;
        }
        g.energies = {std::sqrt(p_mag * p_mag + o.m_e * o.m_e)};
        g.echo_energy = format_double(g.energies[0]);
    }

    const std::string echo =
        "gqed3 xsec formula=" + std::string(formula_name(id)) +
        " source=" + (source == TraceSource::closed_form ? "closed" : "brute") +
        " me=" + format_double(o.m_e) + " alpha=" + format_double(o.alpha) +
        " mp=" + g.echo_mp + " energy=" + g.echo_energy +
        " theta=" + g.echo_theta + (have_p ? " p=" + format_double(p_mag) : "") +
        " format=" + o.format;

    const std::size_t n = g.energies.size() * g.mps.size() * g.thetas.size();
    std::vector<SampleRow> rows(n);
    const std::size_t n_mp_th = g.mps.size() * g.thetas.size();
    fill_indexed(n, [&](std::size_t i) {
        const double E = g.energies[i / n_mp_th];
        const double mp = g.mps[(i % n_mp_th) / g.thetas.size()];
        const double th = g.thetas[i % g.thetas.size()];
        PhysicalParams params{o.m_e, o.alpha, mp};
        XsecSample s{id, E, th, mp, o.alpha, 0.0};
        switch (id) {
            case FormulaId::canonical:
                s.value = dsigma_dt(mandelstam_cm({E, th, o.m_e}), params, source);
                break;
            case FormulaId::high_energy:
                s.value = dsigma_dt_high_energy(mandelstam_cm({E, th, o.m_e}), params);
                break;
            case FormulaId::leading_mP:
                s.value = dsigma_dt_leading_mp(mandelstam_cm({E, th, o.m_e}), params);
                break;
            case FormulaId::cm:
                s.value = dsigma_dtheta_cm(E, th, params);
                break;
            case FormulaId::cm_small_angle:
                s.value = dsigma_dtheta_small_angle(E, th, params);
                break;
            case FormulaId::nonrel: {
                const double p = have_p ? p_mag
                                        : std::sqrt(E * E - o.m_e * o.m_e);
                if (!(p > 0.0))
                    throw DomainError("xsec nonrel: no spatial momentum at E <= m_e");
                s.value = dsigma_dtheta_nonrel(p, th, params);
                break;
            }
        }
        rows[i] = to_row(s);
    });

    require_finite(rows);
    write_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") write_rows_json(os, echo, rows);
        else write_rows_csv(os, echo, rows);
    });
    return kExitOk;
}

struct DeviationRow {
    double energy, theta, m_P, delta;
};

int run_deviation(const PointOpts& o) {
    Grids g = build_grids(o, /*energy_required=*/true);
    const std::string echo =
        "gqed3 deviation me=" + format_double(o.m_e) +
        " alpha=" + format_double(o.alpha) + " mp=" + g.echo_mp +
        " energy=" + g.echo_energy + " theta=" + g.echo_theta +
        " format=" + o.format;

    const std::size_t points = g.energies.size() * g.mps.size() * g.thetas.size();
    std::vector<DeviationRow> rows(points);
    const std::size_t n_mp_th = g.mps.size() * g.thetas.size();
    fill_indexed(points, [&](std::size_t i) {
        const double E = g.energies[i / n_mp_th];
        const double mp = g.mps[(i % n_mp_th) / g.thetas.size()];
        const double th = g.thetas[i % g.thetas.size()];
        const PhysicalParams params{o.m_e, o.alpha, mp};
        rows[i] = {E, th, mp, delta_deviation(E, th, params)};
    });

    for (const auto& r : rows)
        if (!std::isfinite(r.delta))
            throw DomainError("evaluation produced a non-finite deviation at E=" +
                              format_double(r.energy));
    write_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") {
            nlohmann::ordered_json root;
            root["config"] = echo;
            auto& arr = root["samples"] = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json row;
                row["E_MeV"] = r.energy;
                row["theta_rad"] = r.theta;
                row["mP_MeV"] = std::isinf(r.m_P) ? nlohmann::ordered_json("inf")
                                                  : nlohmann::ordered_json(r.m_P);
                row["delta"] = r.delta;
                row["delta_percent"] = 100.0 * r.delta;
                arr.push_back(std::move(row));
            }
            os << root.dump(2) << "\n";
        } else {
            os << "# " << echo << "\n";
            os << "E_MeV,theta_rad,mP_MeV,delta,delta_percent\n";
            for (const auto& r : rows)
                os << format_double(r.energy) << ',' << format_double(r.theta) << ','
                   << format_double(r.m_P) << ',' << format_double(r.delta) << ','
                   << format_double(100.0 * r.delta) << "\n";
        }
    });
    return kExitOk;
}

int run_verify() {
    const auto results = run_invariant_suite();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                  << "  measured=" << format_double(r.measured)
                  << " threshold=" << format_double(r.threshold);
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << "measured epsilon_sign = " << format_double(gamma_rep().epsilon_sign)
              << "  (gamma^0 gamma^1 = epsilon_sign * gamma^2)\n";
    std::cout << (all ? "verify: all invariants passed\n"
                      : "verify: HARD INVARIANT FAILURE\n");
    return all ? kExitOk : kExitVerify;
}

struct ReportOpts {
    bool consistency = false;
    bool scenarios = false;
    bool figure1 = false;
    std::string grid = "default";
    double p_mag = 1.0;
    double m_P = 65.77;
    double m_e = 0.510;
    double alpha = 1.0 / 137.0;
    std::vector<double> alphas{2.3, 2.5};
    double theta_min = 0.05;
    double theta_max = M_PI - 0.05;
    int theta_steps = 200;
    std::string out, format = "csv";
};

int run_report(const ReportOpts& o) {
    const int modes = int(o.consistency) + int(o.scenarios) + int(o.figure1);
    if (modes != 1)
        throw CLI::ValidationError("report",
                                   "choose exactly one of --consistency, --scenarios, --figure1");

    if (o.consistency) {
        if (o.grid != "default")
            throw CLI::ValidationError("--grid", "only the default grid is defined");
        const ReportGrid grid = default_report_grid();
        const auto records = consistency_report(grid);
        const std::string echo = "gqed3 report consistency grid=default me=" +
                                 format_double(grid.params.m_e) +
                                 " alpha=" + format_double(grid.params.alpha) +
                                 " mp=" + format_double(grid.params.m_P) +
                                 " format=" + o.format;
        write_output(o.out, [&](std::ostream& os) {
            if (o.format == "json") write_consistency_json(os, echo, records);
            else write_consistency_csv(os, echo, records);
        });
        return kExitOk;
    }

    if (o.scenarios) {
        PhysicalParams base;
        base.m_e = o.m_e;
        base.alpha = o.alpha;
        const auto rows = scenario_table(base);
        const std::string echo = "gqed3 report scenarios me=" + format_double(o.m_e) +
                                 " alpha=" + format_double(o.alpha) +
                                 " format=" + o.format;
        write_output(o.out, [&](std::ostream& os) {
            if (o.format == "json") write_scenarios_json(os, echo, rows);
            else write_scenarios_csv(os, echo, rows);
        });
        return kExitOk;
    }

    // figure1
    PhysicalParams params;
    params.m_e = o.m_e;
    params.m_P = o.m_P;
    if (!(o.theta_steps >= 2))
        throw CLI::ValidationError("--theta-steps", "need at least 2 grid points");
    const auto grid = linspace(o.theta_min, o.theta_max, o.theta_steps);
    const auto samples = figure1_dataset(o.alphas, o.p_mag, params, grid);
    std::vector<SampleRow> rows;
    rows.reserve(samples.size());
    for (const auto& s : samples) rows.push_back(to_row(s));
    std::string alphas_echo;
    for (std::size_t i = 0; i < o.alphas.size(); ++i)
        alphas_echo += (i ? "," : "") + format_double(o.alphas[i]);
    const std::string echo =
        "gqed3 report figure1 p=" + format_double(o.p_mag) +
        " mp=" + format_double(o.m_P) + " me=" + format_double(o.m_e) +
        " alphas=" + alphas_echo + " theta=" + format_double(o.theta_min) + ":" +
        format_double(o.theta_max) + ":" + std::to_string(o.theta_steps) +
        " format=" + o.format;
    require_finite(rows);
    write_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") write_rows_json(os, echo, rows);
        else write_rows_csv(os, echo, rows);
    });
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-level Moller scattering observables in 2+1-D generalized "
                 "(Podolsky) electrodynamics"};
    app.require_subcommand(1);
    // a later occurrence of any option wins, so flags override config values
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_help;
    app.add_option("--config", config_help,
                   "plain key = value configuration file, overridden by flags")
        ->configurable(false);

    PointOpts xsec_opts;
    std::string formula_str;
    std::string source_str = "brute";
    auto* xsec = app.add_subcommand("xsec", "evaluate a differential cross section");
    xsec->add_option("--formula", formula_str,
                     "canonical, high_energy, leading_mP, cm, cm_small_angle or nonrel")
        ->required();
    xsec->add_option("--source", source_str, "trace source for canonical: brute or closed")
        ->check(CLI::IsMember({"brute", "closed"}));
    xsec->add_option("--p", xsec_opts.p_mag, "momentum magnitude (MeV) for nonrel");
    add_common(xsec, xsec_opts);

    PointOpts dev_opts;
    auto* dev = app.add_subcommand("deviation",
                                   "cutoff-induced relative deviation of the CM cross section");
    add_common(dev, dev_opts);

    auto* ver = app.add_subcommand("verify", "run the hard-invariant suite");

    ReportOpts rep_opts;
    auto* rep = app.add_subcommand("report", "consistency, scenario and curve reports");
    rep->add_flag("--consistency", rep_opts.consistency, "formula-vs-formula audit records");
    rep->add_flag("--scenarios", rep_opts.scenarios, "quoted deviation scenarios");
    rep->add_flag("--figure1", rep_opts.figure1, "nonrelativistic cross-section curves");
    rep->add_option("--grid", rep_opts.grid, "audit grid name (default)");
    rep->add_option("--p", rep_opts.p_mag, "momentum magnitude (MeV) for the curves");
    rep->add_option("--mp", rep_opts.m_P, "Podolsky cutoff mass (MeV)");
    rep->add_option("--me", rep_opts.m_e, "electron mass (MeV)");
    rep->add_option("--alpha", rep_opts.alpha, "fine-structure constant");
    rep->add_option("--alphas", rep_opts.alphas, "coupling values for the curves")
        ->delimiter(',');
    rep->add_option("--theta-min", rep_opts.theta_min, "curve grid lower bound (rad)");
    rep->add_option("--theta-max", rep_opts.theta_max, "curve grid upper bound (rad)");
    rep->add_option("--theta-steps", rep_opts.theta_steps, "curve grid points");
    rep->add_option("--out", rep_opts.out, "output path (default: stdout)");
    rep->add_option("--format", rep_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> raw;
        raw.reserve(static_cast<std::size_t>(argc > 1 ? argc - 1 : 0));
        for (int i = 1; i < argc; ++i) raw.emplace_back(argv[i]);
        const std::vector<std::string> args = expand_config(std::move(raw));
        std::vector<const char*> argvv;
        argvv.push_back(argv[0]);
        for (const auto& a : args) argvv.push_back(a.c_str());
        app.parse(static_cast<int>(argvv.size()), argvv.data());
        if (app.got_subcommand(xsec)) return run_xsec(xsec_opts, formula_str, source_str);
        if (app.got_subcommand(dev)) return run_deviation(dev_opts);
        if (app.got_subcommand(ver)) return run_verify();
        if (app.got_subcommand(rep)) return run_report(rep_opts);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what()
                  << " (partial estimate " << format_double(e.partial) << ")\n";
        return kExitDomain;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitDomain;
    }
}
