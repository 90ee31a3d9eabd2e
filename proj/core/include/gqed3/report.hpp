#pragma once

#include "gqed3/cross_section.hpp"
#include "gqed3/params.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gqed3 {

/// Outcome of one formula-vs-formula comparison over a grid.
enum class Verdict {
    agrees,            ///< max relative deviation <= 1e-8
    systematic_factor, ///< ratio constant across the grid to 1e-6
    theta_dependent,   ///< the disagreement varies with the kinematic point
};

std::string_view verdict_name(Verdict v);

/// A measured comparison between two routes to the same quantity.
/// location_* pins the grid point of the worst deviation so the number
/// can be reproduced by re-evaluating the comparison there.
struct ConsistencyRecord {
    std::string comparison_id;
    std::string grid_desc;
    double max_relative_deviation = 0.0;
    double location_energy = 0.0; ///< MeV
    double location_theta  = 0.0; ///< rad
    Verdict verdict = Verdict::agrees;
    double fitted_factor = 0.0;   ///< mean lhs/rhs ratio over the grid
    std::string note;
};

/// Grids for the consistency audit. Poles are excluded by construction;
/// every range is an open angular interval.
struct ReportGrid {
    PhysicalParams params{};          ///< m_e, alpha and the cutoff used in audits
    std::vector<double> trace_energies;   ///< closed-forms-vs-oracle sweep (MeV)
    std::vector<double> ur_energies;      ///< ultrarelativistic sweeps (MeV)
    int theta_steps = 0;
    double theta_min = 0.0, theta_max = 0.0;
    std::vector<double> delta_energies;   ///< small-angle deviation sweep (MeV)
    int small_theta_steps = 0;
    double small_theta_min = 0.0, small_theta_max = 0.0;
    double delta_m_P = 0.0;               ///< cutoff for the deviation sweep
    int dual_oracle_strings = 0;
    unsigned long long dual_oracle_seed = 0;
};

/// Roughly 1e4 comparison points; runs in seconds.
ReportGrid default_report_grid();

/// Runs every enumerated comparison and returns one record per audited
/// quantity, in a fixed deterministic order:
///   dual_oracle_traces,
///   trace_{t_channel,u_channel,interference}_closed_vs_oracle,
///   cm_vs_jacobian_canonical, cm_vs_jacobian_high_energy,
///   high_energy_vs_canonical_massless,
///   small_angle_delta_vs_full,
///   epsilon_sign_vs_printed.
/// Throws ValidationError on an empty grid.
std::vector<ConsistencyRecord> consistency_report(const ReportGrid& grid);

/// Recomputes the pointwise deviation of one comparison at a recorded
/// location; feeding a record's location back reproduces its
/// max_relative_deviation.
double reevaluate_comparison(std::string_view comparison_id, double energy,
                             double theta, const ReportGrid& grid);

/// One numeric deviation scenario: theta = 10 deg, a beam energy, a
/// quoted cutoff, the deviation computed by both formulas, and how each
/// compares with the quoted bound.
struct ScenarioRow {
    std::string scenario;
    double energy = 0.0;        ///< MeV
    double theta  = 0.0;        ///< rad
    double m_P    = 0.0;        ///< MeV
    double delta_ratio = 0.0;   ///< full ratio formula
    double delta_small = 0.0;   ///< small-angle formula
    double bound_percent = 0.0; ///< quoted bound on |delta| in percent
    std::string citation;       ///< key of the quoted bound
    bool within_ratio = false;
    bool within_small = false;
    double miss_factor_ratio = 0.0; ///< |delta| in percent over the bound
    double miss_factor_small = 0.0;
};

/// All quoted scenarios: E in {1.530, 100} MeV crossed with
/// m_P in {35.51, 65.77, 37590} MeV at theta = 10 deg. base supplies the
/// electron mass and coupling.
std::vector<ScenarioRow> scenario_table(const PhysicalParams& base);

/// Nonrelativistic cross-section curves over a theta grid, one per
/// coupling value, for external plotting. Throws ValidationError if the
/// grid touches an endpoint pole.
std::vector<XsecSample> figure1_dataset(std::span<const double> alphas, double p_mag,
                                        const PhysicalParams& params,
                                        std::span<const double> theta_grid);

/// Inclusive linear grid with n points.
std::vector<double> linspace(double lo, double hi, int n);

void write_consistency_csv(std::ostream& os, std::string_view config_echo,
                           std::span<const ConsistencyRecord> records);
void write_consistency_json(std::ostream& os, std::string_view config_echo,
                            std::span<const ConsistencyRecord> records);
void write_scenarios_csv(std::ostream& os, std::string_view config_echo,
                         std::span<const ScenarioRow> rows);
void write_scenarios_json(std::ostream& os, std::string_view config_echo,
                          std::span<const ScenarioRow> rows);

} // namespace gqed3
