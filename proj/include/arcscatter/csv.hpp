#pragma once

#include <string>
#include <vector>

namespace arcscatter {

/// Formats a double with 17 significant digits, C locale ('.' decimal).
std::string format_number(double value);

/// Writes a deterministic CSV file: header line "# arcscatter-csv v1",
/// a column-name line, then one row per entry with '\n' line endings.
void write_csv(const std::string& path,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

}  // namespace arcscatter
