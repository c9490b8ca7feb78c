#include "bibnet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bibnet/csv.hpp"
#include "bibnet/error.hpp"

namespace bibnet {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Gender g) {
    switch (g) {
    case Gender::Female: return "female";
    case Gender::Male: return "male";
    default: return "unknown";
    }
}

std::optional<Gender> gender_from_string(const std::string& label) {
    std::string s;
    for (char c : label)
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "female" || s == "f") return Gender::Female;
    if (s == "male" || s == "m") return Gender::Male;
    if (s == "unknown" || s == "u" || s.empty()) return Gender::Unknown;
    return std::nullopt;
}

std::string normalize_name(const std::string& raw) {
    std::string out;
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
        } else {
            if (pending_space) {
                out += ' ';
                pending_space = false;
            }
            out += c;
        }
    }
    if (out.empty())
        throw DataError("name is empty after normalization");
    return out;
}

std::string fold_key(const std::string& normalized) {
    std::string key = normalized;
    for (char& c : key)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return key;
}

const AuthorRecord* Corpus::find_author(const std::string& name) const {
    auto it = directory.find(fold_key(name));
    return it == directory.end() ? nullptr : &it->second;
}

AuthorRecord& Corpus::upsert_author(const std::string& canonical) {
    auto [it, inserted] = directory.try_emplace(fold_key(canonical));
    if (inserted)
        it->second.name = canonical;
    return it->second;
}

void Corpus::validate() const {
    std::set<std::string> ids;
    for (const auto& e : entries) {
        if (!ids.insert(e.id).second)
            throw DataError("duplicate paper_id: " + e.id);
        if (e.authors.empty())
            throw DataError("paper " + e.id + ": empty author list");
        if (e.jel.empty() || e.jel.size() > 2)
            throw DataError("paper " + e.id + ": JEL code count must be 1 or 2");
        std::set<std::string> seen;
        for (const auto& a : e.authors) {
            if (!seen.insert(fold_key(a)).second)
                throw DataError("paper " + e.id + ": duplicate author " + a);
            if (directory.find(fold_key(a)) == directory.end())
                throw DataError("paper " + e.id + ": author not in directory: " + a);
        }
    }
}

namespace {

std::vector<std::string> split_multi(const std::string& cell) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(cell);
    while (std::getline(ss, item, ';')) {
        // trim
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

bool valid_jel(const std::string& code) {
    if (code.empty() || code.size() > 3)
        return false;
    if (!std::isalpha(static_cast<unsigned char>(code[0])))
        return false;
    for (std::size_t i = 1; i < code.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(code[i])))
            return false;
    return true;
}

std::string canon_jel(const std::string& code) {
    std::string c = code;
    c[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(c[0])));
    return c;
}

[[noreturn]] void row_error(std::size_t line, const std::string& msg) {
    throw DataError("line " + std::to_string(line) + ": " + msg);
}

void load_directory_file(Corpus& corpus, const std::string& path) {
    auto rows = read_csv_file(path);
    if (rows.empty())
        throw DataError(path + ": empty directory file");
    const std::vector<std::string> header = {"canonical_name", "gender", "affiliation"};
    if (rows[0].fields != header)
        throw DataError(path + ": directory header must be canonical_name,gender,affiliation");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.fields.size() != 3)
            row_error(row.line, "directory row needs 3 fields");
        std::string name = normalize_name(row.fields[0]);
        auto gender = gender_from_string(row.fields[1]);
        if (!gender)
            row_error(row.line, "invalid gender label: " + row.fields[1]);
        AuthorRecord& rec = corpus.upsert_author(name);
        rec.gender = *gender;
        if (!row.fields[2].empty())
            rec.affiliation = row.fields[2];
    }
}

} // namespace

Corpus parse_corpus(const std::string& records_path,
                    const std::optional<std::string>& directory_path,
                    const ParseOptions& opts) {
    Corpus corpus;
    if (directory_path)
        load_directory_file(corpus, *directory_path);

    auto rows = read_csv_file(records_path);
    if (rows.empty())
        throw DataError(records_path + ": empty records file");
    const std::vector<std::string> header = {"paper_id", "year",  "title", "authors",
                                             "affiliations", "jel1", "jel2"};
    if (rows[0].fields != header)
        throw DataError(records_path +
                        ": header must be paper_id,year,title,authors,affiliations,jel1,jel2");

    std::set<std::string> ids;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.fields.size() != 7 && row.fields.size() != 6)
            row_error(row.line, "expected 7 columns, got " + std::to_string(row.fields.size()));

        PaperEntry entry;
        entry.id = row.fields[0];
        if (entry.id.empty())
            row_error(row.line, "empty paper_id");
        if (!ids.insert(entry.id).second)
            row_error(row.line, "duplicate paper_id: " + entry.id);

        try {
            entry.year = std::stoi(row.fields[1]);
        } catch (const std::exception&) {
            row_error(row.line, "invalid year: " + row.fields[1]);
        }
        if (entry.year < opts.year_min || entry.year > opts.year_max)
            row_error(row.line, "year " + std::to_string(entry.year) + " outside meeting range " +
                                    std::to_string(opts.year_min) + ".." +
                                    std::to_string(opts.year_max));

        entry.title = row.fields[2];

        auto raw_authors = split_multi(row.fields[3]);
        if (raw_authors.empty())
            row_error(row.line, "empty author list");
        std::set<std::string> seen;
        for (const auto& raw : raw_authors) {
            std::string name;
            try {
                name = normalize_name(raw);
            } catch (const DataError&) {
                row_error(row.line, "empty author name");
            }
            if (!seen.insert(fold_key(name)).second)
                row_error(row.line, "duplicate author in paper: " + name);
            entry.authors.push_back(name);
        }

        auto affils = split_multi(row.fields[4]);
        if (!affils.empty() && affils.size() != 1 && affils.size() != entry.authors.size())
            row_error(row.line, "affiliation count does not match author count");

        std::vector<std::string> jel = split_multi(row.fields[5]);
        if (row.fields.size() == 7)
            for (const auto& j : split_multi(row.fields[6]))
                jel.push_back(j);
        if (jel.empty())
            row_error(row.line, "missing JEL code");
        if (jel.size() > 2)
            row_error(row.line, "too many JEL codes (" + std::to_string(jel.size()) + ")");
        for (const auto& code : jel) {
            if (!valid_jel(code))
                row_error(row.line, "invalid JEL code: " + code);
            entry.jel.push_back(canon_jel(code));
        }

        for (std::size_t a = 0; a < entry.authors.size(); ++a) {
            AuthorRecord& rec = corpus.upsert_author(entry.authors[a]);
            // the directory file wins; otherwise first record affiliation sticks
            if (rec.affiliation == unclassified_label() && !affils.empty()) {
                const std::string& aff = affils.size() == 1 ? affils[0] : affils[a];
                if (!aff.empty())
                    rec.affiliation = aff;
            }
        }
        corpus.entries.push_back(std::move(entry));
    }
    corpus.validate();
    return corpus;
}

AnnotationReport annotate(Corpus& corpus, const std::string& annotations_path,
                          AnnotationKind kind) {
    auto rows = read_csv_file(annotations_path);
    if (rows.empty())
        throw DataError(annotations_path + ": empty annotation file");
    const std::vector<std::string> header = {"canonical_name", "gender", "affiliation"};
    if (rows[0].fields != header)
        throw DataError(annotations_path +
                        ": annotation header must be canonical_name,gender,affiliation");

    AnnotationReport report;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.fields.size() != 3)
            row_error(row.line, "annotation row needs 3 fields");
        std::string name = normalize_name(row.fields[0]);
        auto it = corpus.directory.find(fold_key(name));
        if (it == corpus.directory.end()) {
            report.unknown_names.push_back(name);
            continue;
        }
        if (kind == AnnotationKind::GenderKind) {
            auto gender = gender_from_string(row.fields[1]);
            if (!gender)
                row_error(row.line, "invalid gender label: " + row.fields[1]);
            it->second.gender = *gender;
            ++report.class_counts[to_string(*gender)];
        } else {
            const std::string& aff = row.fields[2];
            if (aff.empty())
                row_error(row.line, "empty affiliation label");
            it->second.affiliation = aff;
            ++report.class_counts[aff];
        }
    }
    return report;
}

std::vector<YearlyRow> yearly_counts(const Corpus& corpus) {
    std::map<int, YearlyRow> by_year;
    for (const auto& e : corpus.entries) {
        YearlyRow& row = by_year[e.year];
        row.year = e.year;
        if (e.coauthored())
            ++row.coauthored_count;
        else
            ++row.single_count;
    }
    std::vector<YearlyRow> out;
    for (auto& [year, row] : by_year) {
        if (row.coauthored_count > 0)
            row.sc_ratio = static_cast<double>(row.single_count) /
                           static_cast<double>(row.coauthored_count);
        out.push_back(row);
    }
    return out;
}

std::string serialize_corpus(const Corpus& corpus) {
    ordered_json doc;
    doc["format"] = "bibnet-corpus";
    doc["version"] = 1;
    ordered_json dir = ordered_json::array();
    for (const auto& [key, rec] : corpus.directory) {
        ordered_json r;
        r["name"] = rec.name;
        r["gender"] = to_string(rec.gender);
        r["affiliation"] = rec.affiliation;
        dir.push_back(std::move(r));
    }
    doc["directory"] = std::move(dir);
    ordered_json entries = ordered_json::array();
    for (const auto& e : corpus.entries) {
        ordered_json r;
        r["id"] = e.id;
        r["year"] = e.year;
        r["title"] = e.title;
        r["authors"] = e.authors;
        r["jel"] = e.jel;
        entries.push_back(std::move(r));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

Corpus parse_corpus_document(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("corpus document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "bibnet-corpus")
        throw DataError("not a bibnet corpus document");
    Corpus corpus;
    for (const auto& r : doc.at("directory")) {
        AuthorRecord rec;
        rec.name = r.at("name").get<std::string>();
        auto gender = gender_from_string(r.at("gender").get<std::string>());
        if (!gender)
            throw DataError("invalid gender in corpus document");
        rec.gender = *gender;
        rec.affiliation = r.at("affiliation").get<std::string>();
        corpus.directory[fold_key(rec.name)] = std::move(rec);
    }
    for (const auto& r : doc.at("entries")) {
        PaperEntry e;
        e.id = r.at("id").get<std::string>();
        e.year = r.at("year").get<int>();
        e.title = r.at("title").get<std::string>();
        e.authors = r.at("authors").get<std::vector<std::string>>();
        e.jel = r.at("jel").get<std::vector<std::string>>();
        corpus.entries.push_back(std::move(e));
    }
    corpus.validate();
    return corpus;
}

Corpus load_corpus_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_corpus_document(ss.str());
}

void save_corpus_document(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write file: " + path);
    out << serialize_corpus(corpus);
}

} // namespace bibnet
