#include "gqed3/io.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace gqed3 {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

SampleRow to_row(const XsecSample& s) {
    return {std::string(formula_name(s.formula)), s.energy, s.theta, s.m_P,
            s.alpha, s.value, std::string(formula_unit(s.formula))};
}

void write_rows_csv(std::ostream& os, std::string_view config_echo,
                    std::span<const SampleRow> rows) {
    os << "# " << config_echo << "\n";
    os << "formula,E_MeV,theta_rad,mP_MeV,alpha,value,unit\n";
    for (const auto& r : rows) {
        os << csv_field(r.formula) << ',' << format_double(r.energy) << ','
           << format_double(r.theta) << ',' << format_double(r.m_P) << ','
           << format_double(r.alpha) << ',' << format_double(r.value) << ','
           << csv_field(r.unit) << "\n";
    }
}

void write_rows_json(std::ostream& os, std::string_view config_echo,
                     std::span<const SampleRow> rows) {
    nlohmann::ordered_json root;
    root["config"] = std::string(config_echo);
    auto& arr = root["samples"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["formula"]   = r.formula;
        row["E_MeV"]     = r.energy;
        row["theta_rad"] = r.theta;
        row["mP_MeV"]    = std::isinf(r.m_P) ? nlohmann::ordered_json("inf")
                                             : nlohmann::ordered_json(r.m_P);
        row["alpha"]     = r.alpha;
        row["value"]     = r.value;
        row["unit"]      = r.unit;
        arr.push_back(std::move(row));
    }
    os << root.dump(2) << "\n";
}

} // namespace gqed3
