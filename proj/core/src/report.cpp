#include "gqed3/report.hpp"

#include "gqed3/io.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

namespace gqed3 {

namespace {

constexpr double kAgreeTol      = 1e-8;
constexpr double kConstancyTol  = 1e-6;

/// lhs vs rhs at one point: relative deviation with a scale floor.
double rel_dev(double lhs, double rhs, double floor_scale) {
    const double denom = std::max({std::abs(lhs), std::abs(rhs), floor_scale});
    return std::abs(lhs - rhs) / denom;
}

struct Accumulator {
    double max_dev = 0.0;
    double loc_energy = 0.0;
    double loc_theta = 0.0;
    double ratio_sum = 0.0;
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = -std::numeric_limits<double>::infinity();
    long   ratio_count = 0;

    void add(double dev, double lhs, double rhs, double energy, double theta,
             double ratio_floor) {
        if (dev > max_dev) {
            max_dev = dev;
            loc_energy = energy;
            loc_theta = theta;
        }
        if (std::abs(rhs) > ratio_floor) {
            const double r = lhs / rhs;
            ratio_sum += r;
            ratio_min = std::min(ratio_min, r);
            ratio_max = std::max(ratio_max, r);
            ++ratio_count;
        }
    }

    ConsistencyRecord finish(std::string id, std::string grid_desc,
                             std::string note) const {
        ConsistencyRecord rec;
        rec.comparison_id = std::move(id);
        rec.grid_desc = std::move(grid_desc);
        rec.max_relative_deviation = max_dev;
        rec.location_energy = loc_energy;
        rec.location_theta = loc_theta;
        rec.fitted_factor = ratio_count > 0 ? ratio_sum / ratio_count : 0.0;
        rec.note = std::move(note);
        if (max_dev <= kAgreeTol)
            rec.verdict = Verdict::agrees;
        else if (ratio_count > 0 &&
                 ratio_max - ratio_min <= kConstancyTol * std::abs(rec.fitted_factor))
            rec.verdict = Verdict::systematic_factor;
        else
            rec.verdict = Verdict::theta_dependent;
        return rec;
    }
};

struct TraceDeviation {
    TraceTriple closed;
    TraceTriple oracle;
    double dev_t, dev_u, dev_c;
    double ratio_floor; ///< oracle magnitudes below this skip the ratio fit
};

TraceDeviation trace_point(double energy, double theta, const PhysicalParams& p) {
    const CmMomenta mom = cm_kinematics({energy, theta, p.m_e});
    const MandelstamSet ms = mandelstam_cm({energy, theta, p.m_e});
    const TraceTriple oracle =
        trace_triple_bruteforce(mom.p, mom.q, mom.p_out, mom.q_out, p.m_e);
    const TraceTriple closed = trace_triple_closed(ms);
    const double m2 = p.m_e * p.m_e;
    const double s4 = ms.s * ms.s + ms.t * ms.t + ms.u * ms.u + m2 * m2;
    return {closed,
            oracle,
            rel_dev(closed.t_channel, oracle.t_channel, 1e-12 * s4),
            rel_dev(closed.u_channel, oracle.u_channel, 1e-12 * s4),
            rel_dev(closed.interference, oracle.interference, 1e-12 * s4),
            1e-6 * s4};
}

/// CM dsigma/dtheta vs Jacobian-folded dsigma/dt (either pipeline).
double jacobian_point(double energy, double theta, const PhysicalParams& p,
                      bool high_energy_form, double* lhs_out, double* rhs_out) {
    const MandelstamSet ms = mandelstam_cm({energy, theta, p.m_e});
    const double p2 = energy * energy - p.m_e * p.m_e;
    const double lhs = dsigma_dtheta_cm(energy, theta, p);
    const double dsdt = high_energy_form
                            ? dsigma_dt_high_energy(ms, p)
                            : dsigma_dt(ms, p, TraceSource::brute_force);
    const double rhs = dsdt * jacobian_dt_dtheta(p2, theta);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return rel_dev(lhs, rhs, 0.0);
}

double highenergy_vs_canonical_point(double energy, double theta,
                                     const PhysicalParams& p, double* lhs_out,
                                     double* rhs_out) {
    const MandelstamSet ms = mandelstam_cm({energy, theta, p.m_e});
    const double lhs = dsigma_dt_high_energy(ms, p);
    const double rhs = dsigma_dt(ms, p, TraceSource::closed_form);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return rel_dev(lhs, rhs, 0.0);
}

double small_angle_delta_point(double energy, double theta, const PhysicalParams& p,
                               double m_P, double* lhs_out, double* rhs_out) {
    PhysicalParams q = p;
    q.m_P = m_P;
    const double s = -4.0 * energy * energy;
    const double lhs = delta_small_angle(s, theta, m_P);
    const double rhs = delta_deviation(energy, theta, q);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return rel_dev(lhs, rhs, 0.0);
}

double dual_oracle_sweep(int strings, unsigned long long seed) {
    const GammaRep& rep = gamma_rep();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    std::uniform_int_distribution<int> len(1, 8);
    double worst = 0.0;
    for (int i = 0; i < strings; ++i) {
        const int n = len(rng);
        std::vector<GammaFactor> fs;
        std::vector<Mat2> ms;
        double scale = 1.0;
        for (int k = 0; k < n; ++k) {
            const LorentzVec3 v{comp(rng), comp(rng), comp(rng)};
            fs.push_back(GammaFactor::slashed(v));
            ms.push_back(slash(rep, v));
            scale *= std::max({std::abs(v.e), std::abs(v.px), std::abs(v.py), 1.0});
        }
        const Complex a = trace_product(ms);
        const Complex b = trace_reduce(rep, fs);
        worst = std::max(worst,
                         std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale}));
    }
    return worst;
}

/// Measured commutator-closure coefficient against the printed one. The
/// algebra closes with the real coefficient 2*epsilon_sign; the printed
/// coefficient is -2i. Magnitudes are compared, the measured orientation
/// is reported as the fitted factor.
double epsilon_sign_deviation() {
    const GammaRep& rep = gamma_rep();
    const double measured_mag = std::abs(2.0 * rep.epsilon_sign);
    const double printed_mag = 2.0;
    return std::abs(measured_mag - printed_mag) / printed_mag;
}

std::string desc_sweep(const std::vector<double>& energies, double lo, double hi,
                       int steps) {
    std::string d = "E in {";
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (i) d += ", ";
        d += format_double(energies[i]);
    }
    d += "} MeV x theta in (" + format_double(lo) + ", " + format_double(hi) +
         ") rad, " + std::to_string(steps) + " steps";
    return d;
}

} // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::agrees: return "agrees";
        case Verdict::systematic_factor: return "systematic_factor";
        case Verdict::theta_dependent: return "theta_dependent";
    }
    return "?";
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * i / (n - 1));
    return out;
}

ReportGrid default_report_grid() {
    ReportGrid g;
    g.params.m_e = 0.510;
    g.params.alpha = 1.0 / 137.0;
    g.params.m_P = 37590.0;
    g.trace_energies = {0.9, 1.53, 2.55, 5.1, 25.5, 51.0};
    g.ur_energies = {51.0, 510.0, 5100.0};
    g.theta_steps = 300;
    g.theta_min = 0.15;
    g.theta_max = M_PI - 0.15;
    g.delta_energies = {1.53, 51.0};
    g.small_theta_steps = 500;
    g.small_theta_min = 0.01;
    g.small_theta_max = 0.3;
    g.delta_m_P = 65.77;
    g.dual_oracle_strings = 2000;
    g.dual_oracle_seed = 20240901ULL;
    return g;
}

std::vector<ConsistencyRecord> consistency_report(const ReportGrid& grid) {
    grid.params.validate();
    if (grid.trace_energies.empty() || grid.ur_energies.empty() ||
        grid.delta_energies.empty() || grid.theta_steps < 2 ||
        grid.small_theta_steps < 2 || grid.dual_oracle_strings < 1)
        throw ValidationError("consistency_report: empty grid");

    std::vector<ConsistencyRecord> out;

    // dual numeric-vs-symbolic trace oracles
    {
        const double dev =
            dual_oracle_sweep(grid.dual_oracle_strings, grid.dual_oracle_seed);
        ConsistencyRecord rec;
        rec.comparison_id = "dual_oracle_traces";
        rec.grid_desc = std::to_string(grid.dual_oracle_strings) +
                        " seeded random gamma strings, length <= 8";
        rec.max_relative_deviation = dev;
        rec.location_energy = 0.0;
        rec.location_theta = 0.0;
        rec.verdict = dev <= kAgreeTol ? Verdict::agrees : Verdict::theta_dependent;
        rec.fitted_factor = 1.0;
        rec.note = "matrix-product trace vs recursive symbolic reduction";
        out.push_back(std::move(rec));
    }

    // closed forms vs the matrix-element oracle
    {
        Accumulator at, au, ac;
        const auto thetas = linspace(grid.theta_min, grid.theta_max, grid.theta_steps);
        for (double E : grid.trace_energies)
            for (double th : thetas) {
                const TraceDeviation d = trace_point(E, th, grid.params);
                at.add(d.dev_t, d.closed.t_channel, d.oracle.t_channel, E, th,
                       d.ratio_floor);
                au.add(d.dev_u, d.closed.u_channel, d.oracle.u_channel, E, th,
                       d.ratio_floor);
                ac.add(d.dev_c, d.closed.interference, d.oracle.interference, E, th,
                       d.ratio_floor);
            }
        const std::string desc = desc_sweep(grid.trace_energies, grid.theta_min,
                                            grid.theta_max, grid.theta_steps);
        out.push_back(at.finish("trace_t_channel_closed_vs_oracle", desc,
                                "closed direct-channel polynomial vs spin-sum matrix traces"));
        out.push_back(au.finish("trace_u_channel_closed_vs_oracle", desc,
                                "closed exchange-channel polynomial vs spin-sum matrix traces"));
        out.push_back(ac.finish("trace_interference_closed_vs_oracle", desc,
                                "closed interference polynomial vs spin-sum matrix traces"));
    }

    // CM angular formula vs Jacobian-folded invariant pipelines
    {
        Accumulator canon, he;
        const auto thetas = linspace(grid.theta_min, grid.theta_max, grid.theta_steps);
        for (double E : grid.ur_energies)
            for (double th : thetas) {
                double lhs, rhs;
                const double d1 = jacobian_point(E, th, grid.params, false, &lhs, &rhs);
                canon.add(d1, lhs, rhs, E, th, 0.0);
                const double d2 = jacobian_point(E, th, grid.params, true, &lhs, &rhs);
                he.add(d2, lhs, rhs, E, th, 0.0);
            }
        const std::string desc = desc_sweep(grid.ur_energies, grid.theta_min,
                                            grid.theta_max, grid.theta_steps);
        out.push_back(canon.finish("cm_vs_jacobian_canonical", desc,
                                   "CM dsigma/dtheta vs |dt/dtheta| x canonical dsigma/dt"));
        out.push_back(he.finish("cm_vs_jacobian_high_energy", desc,
                                "CM dsigma/dtheta vs |dt/dtheta| x high-energy dsigma/dt"));
    }

    // high-energy form vs the canonical pipeline with closed numerators
    {
        Accumulator acc;
        const auto thetas = linspace(grid.theta_min, grid.theta_max, grid.theta_steps);
        for (double E : grid.ur_energies)
            for (double th : thetas) {
                double lhs, rhs;
                const double d =
                    highenergy_vs_canonical_point(E, th, grid.params, &lhs, &rhs);
                acc.add(d, lhs, rhs, E, th, 0.0);
            }
        out.push_back(acc.finish(
            "high_energy_vs_canonical_massless",
            desc_sweep(grid.ur_energies, grid.theta_min, grid.theta_max,
                       grid.theta_steps),
            "ultrarelativistic dsigma/dt vs canonical dsigma/dt with closed numerators"));
    }

    // printed small-angle deviation vs the full ratio
    {
        Accumulator acc;
        const auto thetas = linspace(grid.small_theta_min, grid.small_theta_max,
                                     grid.small_theta_steps);
        for (double E : grid.delta_energies)
            for (double th : thetas) {
                double lhs, rhs;
                const double d = small_angle_delta_point(E, th, grid.params,
                                                         grid.delta_m_P, &lhs, &rhs);
                acc.add(d, lhs, rhs, E, th, 0.0);
            }
        out.push_back(acc.finish(
            "small_angle_delta_vs_full",
            desc_sweep(grid.delta_energies, grid.small_theta_min,
                       grid.small_theta_max, grid.small_theta_steps) +
                ", m_P = " + format_double(grid.delta_m_P) + " MeV",
            "printed small-angle deviation monomial vs the full deviation ratio"));
    }

    // measured epsilon orientation vs the printed commutator coefficient
    {
        ConsistencyRecord rec;
        rec.comparison_id = "epsilon_sign_vs_printed";
        rec.grid_desc = "single algebraic measurement";
        rec.max_relative_deviation = epsilon_sign_deviation();
        rec.location_energy = 0.0;
        rec.location_theta = 0.0;
        rec.fitted_factor = gamma_rep().epsilon_sign;
        rec.verdict = rec.max_relative_deviation <= kAgreeTol
                          ? Verdict::systematic_factor
                          : Verdict::theta_dependent;
        rec.note = "commutator closes with the real coefficient 2*epsilon_sign over "
                   "the (-,+,+) metric; the printed -2i coefficient matches in "
                   "magnitude, measured orientation is the fitted factor";
        out.push_back(std::move(rec));
    }

    return out;
}

double reevaluate_comparison(std::string_view comparison_id, double energy,
                             double theta, const ReportGrid& grid) {
    if (comparison_id == "dual_oracle_traces")
        return dual_oracle_sweep(grid.dual_oracle_strings, grid.dual_oracle_seed);
    if (comparison_id == "epsilon_sign_vs_printed") return epsilon_sign_deviation();
    if (comparison_id == "trace_t_channel_closed_vs_oracle")
        return trace_point(energy, theta, grid.params).dev_t;
    if (comparison_id == "trace_u_channel_closed_vs_oracle")
        return trace_point(energy, theta, grid.params).dev_u;
    if (comparison_id == "trace_interference_closed_vs_oracle")
        return trace_point(energy, theta, grid.params).dev_c;
    if (comparison_id == "cm_vs_jacobian_canonical")
        return jacobian_point(energy, theta, grid.params, false, nullptr, nullptr);
    if (comparison_id == "cm_vs_jacobian_high_energy")
        return jacobian_point(energy, theta, grid.params, true, nullptr, nullptr);
    if (comparison_id == "high_energy_vs_canonical_massless")
        return highenergy_vs_canonical_point(energy, theta, grid.params, nullptr,
                                             nullptr);
    if (comparison_id == "small_angle_delta_vs_full")
        return small_angle_delta_point(energy, theta, grid.params, grid.delta_m_P,
                                       nullptr, nullptr);
    throw ValidationError("reevaluate_comparison: unknown comparison id " +
                          std::string(comparison_id));
}

std::vector<ScenarioRow> scenario_table(const PhysicalParams& base) {
    base.validate();
    const double theta = 10.0 * M_PI / 180.0;
    const double energies[] = {1.530, 100.0};
    const double cutoffs[] = {35.51, 65.77, 37590.0};

    std::vector<ScenarioRow> rows;
    for (double E : energies)
        for (double mp : cutoffs) {
            PhysicalParams p = base;
            p.m_P = mp;
            ScenarioRow row;
            row.scenario = "theta10_E" + format_double(E) + "MeV_mP" +
                           format_double(mp) + "MeV";
            row.energy = E;
            row.theta = theta;
            row.m_P = mp;
            row.delta_ratio = delta_deviation(E, theta, p);
            row.delta_small = delta_small_angle(-4.0 * E * E, theta, mp);
            if (E == 100.0) {
                row.bound_percent = 2e-6;
                row.citation = "bound_2e-6pct_E100MeV_theta10";
            } else if (mp == 65.77) {
                row.bound_percent = 1e-4;
                row.citation = "bound_1e-4pct_cold_atom_lattice_cutoff";
            } else {
                row.bound_percent = 1e-9;
                row.citation = "bound_1e-9pct_cold_atom";
            }
            row.miss_factor_ratio = std::abs(row.delta_ratio) * 100.0 / row.bound_percent;
            row.miss_factor_small = std::abs(row.delta_small) * 100.0 / row.bound_percent;
            row.within_ratio = row.miss_factor_ratio <= 1.0;
            row.within_small = row.miss_factor_small <= 1.0;
            rows.push_back(std::move(row));
        }
    return rows;
}

std::vector<XsecSample> figure1_dataset(std::span<const double> alphas, double p_mag,
                                        const PhysicalParams& params,
                                        std::span<const double> theta_grid) {
    params.validate();
    if (alphas.empty() || theta_grid.empty())
        throw ValidationError("figure1_dataset: empty alpha set or theta grid");
    for (double th : theta_grid)
        if (!(th > 0.0 && th < M_PI))
            throw ValidationError("figure1_dataset: theta grid touches an endpoint pole");
    const double energy = std::sqrt(params.m_e * params.m_e + p_mag * p_mag);
    std::vector<XsecSample> out;
    out.reserve(alphas.size() * theta_grid.size());
    for (double a : alphas) {
        PhysicalParams p = params;
        p.alpha = a;
        for (double th : theta_grid)
            out.push_back({FormulaId::nonrel, energy, th, p.m_P, a,
                           dsigma_dtheta_nonrel(p_mag, th, p)});
    }
    return out;
}

void write_consistency_csv(std::ostream& os, std::string_view config_echo,
                           std::span<const ConsistencyRecord> records) {
    os << "# " << config_echo << "\n";
    os << "comparison_id,grid,max_relative_deviation,location_E_MeV,"
          "location_theta_rad,verdict,fitted_factor,note\n";
    for (const auto& r : records) {
        os << csv_field(r.comparison_id) << ',' << csv_field(r.grid_desc) << ','
           << format_double(r.max_relative_deviation) << ','
           << format_double(r.location_energy) << ','
           << format_double(r.location_theta) << ',' << verdict_name(r.verdict)
           << ',' << format_double(r.fitted_factor) << ',' << csv_field(r.note)
           << "\n";
    }
}

void write_consistency_json(std::ostream& os, std::string_view config_echo,
                            std::span<const ConsistencyRecord> records) {
    nlohmann::ordered_json root;
    root["config"] = std::string(config_echo);
    auto& arr = root["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json row;
        row["comparison_id"] = r.comparison_id;
        row["grid"] = r.grid_desc;
        row["max_relative_deviation"] = r.max_relative_deviation;
        row["location_E_MeV"] = r.location_energy;
        row["location_theta_rad"] = r.location_theta;
        row["verdict"] = std::string(verdict_name(r.verdict));
        row["fitted_factor"] = r.fitted_factor;
        row["note"] = r.note;
        arr.push_back(std::move(row));
    }
    os << root.dump(2) << "\n";
}

void write_scenarios_csv(std::ostream& os, std::string_view config_echo,
                         std::span<const ScenarioRow> rows) {
    os << "# " << config_echo << "\n";
    os << "scenario,E_MeV,theta_rad,mP_MeV,delta_ratio,delta_ratio_percent,"
          "delta_small,delta_small_percent,bound_percent,citation,"
          "within_bound_ratio,within_bound_small,miss_factor_ratio,"
          "miss_factor_small\n";
    for (const auto& r : rows) {
        os << csv_field(r.scenario) << ',' << format_double(r.energy) << ','
           << format_double(r.theta) << ',' << format_double(r.m_P) << ','
           << format_double(r.delta_ratio) << ','
           << format_double(r.delta_ratio * 100.0) << ','
           << format_double(r.delta_small) << ','
           << format_double(r.delta_small * 100.0) << ','
           << format_double(r.bound_percent) << ',' << csv_field(r.citation) << ','
           << (r.within_ratio ? "true" : "false") << ','
           << (r.within_small ? "true" : "false") << ','
           << format_double(r.miss_factor_ratio) << ','
           << format_double(r.miss_factor_small) << "\n";
    }
}

void write_scenarios_json(std::ostream& os, std::string_view config_echo,
                          std::span<const ScenarioRow> rows) {
    nlohmann::ordered_json root;
    root["config"] = std::string(config_echo);
    auto& arr = root["records"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["scenario"] = r.scenario;
        row["E_MeV"] = r.energy;
        row["theta_rad"] = r.theta;
        row["mP_MeV"] = r.m_P;
        row["delta_ratio"] = r.delta_ratio;
        row["delta_ratio_percent"] = r.delta_ratio * 100.0;
        row["delta_small"] = r.delta_small;
        row["delta_small_percent"] = r.delta_small * 100.0;
        row["bound_percent"] = r.bound_percent;
        row["citation"] = r.citation;
        row["within_bound_ratio"] = r.within_ratio;
        row["within_bound_small"] = r.within_small;
        row["miss_factor_ratio"] = r.miss_factor_ratio;
        row["miss_factor_small"] = r.miss_factor_small;
        arr.push_back(std::move(row));
    }
    os << root.dump(2) << "\n";
}

} // namespace gqed3
