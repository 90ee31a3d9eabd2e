#include "gqed3/report.hpp"

#include "gqed3/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

using namespace gqed3;

namespace {

ReportGrid small_grid() {
    ReportGrid g = default_report_grid();
    g.theta_steps = 40;
    g.small_theta_steps = 50;
    g.dual_oracle_strings = 500;
    return g;
}

} // namespace

TEST_CASE("consistency report runs every enumerated comparison") {
    const ReportGrid grid = small_grid();
    const auto records = consistency_report(grid);
    REQUIRE(records.size() >= 5);

    const char* required[] = {
        "trace_t_channel_closed_vs_oracle", "trace_u_channel_closed_vs_oracle",
        "trace_interference_closed_vs_oracle", "cm_vs_jacobian_canonical",
        "high_energy_vs_canonical_massless", "small_angle_delta_vs_full",
        "epsilon_sign_vs_printed", "dual_oracle_traces",
    };
    for (const char* id : required) {
        const auto it = std::find_if(records.begin(), records.end(),
                                     [&](const auto& r) { return r.comparison_id == id; });
        REQUIRE_MESSAGE(it != records.end(), id);
        CHECK(std::isfinite(it->max_relative_deviation));
        CHECK(it->max_relative_deviation >= 0.0);
        CHECK(std::isfinite(it->fitted_factor));
    }

    // dual oracles agree by construction of the build
    const auto& dual = records.front();
    CHECK(dual.comparison_id == "dual_oracle_traces");
    CHECK(dual.verdict == Verdict::agrees);
    CHECK(dual.max_relative_deviation <= 1e-10);

    // the epsilon record carries the measured orientation
    const auto& eps = records.back();
    CHECK(eps.comparison_id == "epsilon_sign_vs_printed");
    CHECK(std::abs(eps.fitted_factor) == 1.0);
}

TEST_CASE("records are re-evaluable at their deviation location") {
    const ReportGrid grid = small_grid();
    const auto records = consistency_report(grid);
    for (const auto& r : records) {
        const double again = reevaluate_comparison(r.comparison_id, r.location_energy,
                                                   r.location_theta, grid);
        CHECK(std::abs(again - r.max_relative_deviation) <=
              1e-12 * std::max(1.0, std::abs(again)));
    }
    CHECK_THROWS_AS(reevaluate_comparison("nope", 1.0, 1.0, grid), ValidationError);
}

TEST_CASE("report output is deterministic") {
    const ReportGrid grid = small_grid();
    const auto r1 = consistency_report(grid);
    const auto r2 = consistency_report(grid);
    REQUIRE(r1.size() == r2.size());
    std::ostringstream a, b;
    write_consistency_csv(a, "echo", r1);
    write_consistency_csv(b, "echo", r2);
    CHECK(a.str() == b.str());
    std::ostringstream ja, jb;
    write_consistency_json(ja, "echo", r1);
    write_consistency_json(jb, "echo", r2);
    CHECK(ja.str() == jb.str());

    // grid descriptions contain commas and must come out quoted
    CHECK(a.str().find("\"E in {") != std::string::npos);
}

TEST_CASE("empty grids are rejected") {
    ReportGrid g = small_grid();
    g.trace_energies.clear();
    CHECK_THROWS_AS(consistency_report(g), ValidationError);
}

TEST_CASE("scenario table covers every quoted configuration") {
    PhysicalParams base;
    const auto rows = scenario_table(base);
    REQUIRE(rows.size() == 6);

    for (double E : {1.530, 100.0})
        for (double mp : {35.51, 65.77, 37590.0}) {
            const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
                return r.energy == E && r.m_P == mp;
            });
            REQUIRE(it != rows.end());
            CHECK(std::isfinite(it->delta_ratio));
            CHECK(std::isfinite(it->delta_small));
            CHECK(it->bound_percent > 0.0);
            CHECK(!it->citation.empty());
            CHECK(it->theta == doctest::Approx(10.0 * M_PI / 180.0));
            CHECK(it->miss_factor_ratio ==
                  doctest::Approx(std::abs(it->delta_ratio) * 100.0 / it->bound_percent));
            CHECK(it->within_ratio == (it->miss_factor_ratio <= 1.0));
            // the small-angle form reduces to 3 E^2 theta^2 / m_P^2
            CHECK(it->delta_small ==
                  doctest::Approx(3.0 * E * E * it->theta * it->theta / (mp * mp))
                      .epsilon(1e-12));
        }

    // the interatomic-cutoff bound applies to the cold-atom row at 65.77
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) {
        return r.energy == 1.530 && r.m_P == 65.77;
    });
    CHECK(it->bound_percent == 1e-4);

    // the deviation columns are exactly coupling-independent
    PhysicalParams other;
    other.alpha = 2.3;
    const auto rows2 = scenario_table(other);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].delta_ratio == rows2[i].delta_ratio);
        CHECK(rows[i].delta_small == rows2[i].delta_small);
    }
}

TEST_CASE("curve dataset") {
    PhysicalParams params;
    params.m_P = 65.77;
    const std::vector<double> alphas{2.3, 2.5};
    const auto grid = linspace(0.05, M_PI - 0.05, 101);
    const auto samples = figure1_dataset(alphas, 1.0, params, grid);
    REQUIRE(samples.size() == 202);

    const double want_ratio = (2.5 / 2.3) * (2.5 / 2.3);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& lo = samples[i];
        const auto& hi = samples[i + grid.size()];
        CHECK(lo.alpha == 2.3);
        CHECK(hi.alpha == 2.5);
        CHECK(hi.value / lo.value == doctest::Approx(want_ratio).epsilon(1e-12));
        // symmetric grid, symmetric curve
        const auto& mirror = samples[grid.size() - 1 - i];
        CHECK(std::abs(lo.value - mirror.value) <= 1e-12 * std::abs(lo.value));
    }

    // Coulomb growth toward the endpoints
    const auto at = [&](double th) {
        const auto s = figure1_dataset(alphas, 1.0, params, std::vector<double>{th});
        return s.front().value;
    };
    CHECK(std::abs(at(0.05)) > std::abs(at(0.5)));

    CHECK_THROWS_AS(figure1_dataset(alphas, 1.0, params, std::vector<double>{0.0, 1.0}),
                    ValidationError);
    CHECK_THROWS_AS(figure1_dataset(std::vector<double>{}, 1.0, params, grid),
                    ValidationError);
}

TEST_CASE("round-trip double formatting") {
    for (double v : {0.1, 1.125, -3.5296828741942097, 1e-300, 6.583e17, 0.0}) {
        const std::string s = format_double(v);
        double back = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc());
        CHECK(back == v);
    }
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");

    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
