#ifndef BIBNET_TABLE_HPP
#define BIBNET_TABLE_HPP

#include <string>
#include <vector>

namespace bibnet {

enum class TableFormat { Tsv, Markdown };

/// Renders header + rows; all rows must have the header's width ("-" cells
/// pass through untouched). Deterministic byte output.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         TableFormat format);

} // namespace bibnet

#endif
