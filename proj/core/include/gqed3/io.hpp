#pragma once

#include "gqed3/cross_section.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gqed3 {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// RFC-4180 field: quoted iff it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// One output row of the fixed sample schema
///   formula,E_MeV,theta_rad,mP_MeV,alpha,value,unit
/// shared by the scan, deviation and curve outputs.
struct SampleRow {
    std::string formula;
    double energy = 0.0;
    double theta  = 0.0;
    double m_P    = 0.0;
    double alpha  = 0.0;
    double value  = 0.0;
    std::string unit;
};

SampleRow to_row(const XsecSample& s);

/// The echo line carries the effective configuration and nothing else.
void write_rows_csv(std::ostream& os, std::string_view config_echo,
                    std::span<const SampleRow> rows);
void write_rows_json(std::ostream& os, std::string_view config_echo,
                     std::span<const SampleRow> rows);

} // namespace gqed3
