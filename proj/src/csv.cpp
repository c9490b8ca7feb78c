#include "bibnet/csv.hpp"

#include <fstream>
#include <sstream>

#include "bibnet/error.hpp"

namespace bibnet {

std::vector<CsvRow> read_csv(std::istream& in) {
    std::vector<CsvRow> rows;
    std::string field;
    CsvRow row;
    std::size_t line = 1;
    row.line = 1;
    bool in_quotes = false;
    bool row_has_data = false;

    auto end_field = [&] {
        row.fields.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        if (row_has_data || row.fields.size() > 0) {
            end_field();
            // skip rows that are entirely empty (blank line)
            if (!(row.fields.size() == 1 && row.fields[0].empty()))
                rows.push_back(row);
        }
        row = CsvRow{};
        row.line = line;
        row_has_data = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n')
                    ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            row_has_data = true;
            break;
        case ',':
            end_field();
            row_has_data = true;
            break;
        case '\r':
            break;
        case '\n':
            ++line;
            end_row();
            break;
        default:
            field += c;
            row_has_data = true;
            break;
        }
    }
    if (in_quotes)
        throw DataError("csv: unterminated quoted field starting near line " +
                        std::to_string(row.line));
    end_row();
    return rows;
}

std::vector<CsvRow> read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open file: " + path);
    return read_csv(in);
}

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            out += ',';
        out += csv_escape(fields[i]);
    }
    return out;
}

} // namespace bibnet
