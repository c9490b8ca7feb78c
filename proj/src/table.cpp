#include "bibnet/table.hpp"

#include <sstream>

#include "bibnet/error.hpp"

namespace bibnet {

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         TableFormat format) {
    for (const auto& row : rows)
        if (row.size() != header.size())
            throw DataError("ragged table row: expected " + std::to_string(header.size()) +
                            " cells, got " + std::to_string(row.size()));

    std::ostringstream out;
    if (format == TableFormat::Tsv) {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "\t" : "") << header[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "\t" : "") << row[i];
            out << '\n';
        }
    } else {
        out << '|';
        for (const auto& h : header)
            out << ' ' << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < header.size(); ++i)
            out << " --- |";
        out << '\n';
        for (const auto& row : rows) {
            out << '|';
            for (const auto& cell : row)
                out << ' ' << cell << " |";
            out << '\n';
        }
    }
    return out.str();
}

} // namespace bibnet
