#ifndef BIBNET_CSV_HPP
#define BIBNET_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bibnet {

struct CsvRow {
    std::size_t line = 0; // 1-based line where the row starts
    std::vector<std::string> fields;
};

/// RFC-4180-style reader: quoted fields may contain commas, doubled quotes
/// and newlines. Blank lines are skipped. Throws DataError on a dangling
/// quote.
std::vector<CsvRow> read_csv(std::istream& in);
std::vector<CsvRow> read_csv_file(const std::string& path);

/// Quotes a field only when it needs quoting, so simple files stay simple.
std::string csv_escape(const std::string& field);
std::string csv_join(const std::vector<std::string>& fields);

} // namespace bibnet

#endif
