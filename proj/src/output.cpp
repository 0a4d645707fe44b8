#include "xycirc/output.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "xycirc/tolerances.hpp"

namespace xyc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << header[i] << (i + 1 < header.size() ? "," : "");
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows) {
    nlohmann::ordered_json j;
    j["columns"] = header;
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string manifest_json(const std::map<std::string, double>& params,
                          const std::string& subcommand) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["parameters"] = params;
    j["tolerances"] = {
        {"state_norm", tol.state_norm},
        {"unitary_circuit", tol.unitary_circuit},
        {"diag_offdiag", tol.diag_offdiag},
        {"spectrum_match", tol.spectrum_match},
        {"overlap_deficit", tol.overlap_deficit},
        {"trace_distance", tol.trace_distance},
        {"entropy_exact", tol.entropy_exact},
        {"isometry", tol.isometry},
        {"c_fit_window", {tol.c_fit_low, tol.c_fit_high}},
    };
    return j.dump(2) + "\n";
}

}  // namespace xyc
