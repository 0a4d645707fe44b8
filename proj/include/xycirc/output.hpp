#pragma once

#include <map>
#include <string>
#include <vector>

namespace xyc {

inline constexpr const char* kVersion = "0.2.0";

/// CSV with one header line and 17-significant-digit floats; byte-stable for
/// identical inputs.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

/// The same table as a JSON object with "columns" and "rows".
std::string to_json_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows);

std::string format_double(double v);

/// Run manifest: parameters, version string, and the tolerance table.
std::string manifest_json(const std::map<std::string, double>& params,
                          const std::string& subcommand);

}  // namespace xyc
