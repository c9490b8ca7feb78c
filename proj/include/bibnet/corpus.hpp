#ifndef BIBNET_CORPUS_HPP
#define BIBNET_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bibnet {

enum class Gender { Female, Male, Unknown };

std::string to_string(Gender g);
std::optional<Gender> gender_from_string(const std::string& label);

inline const char* unclassified_label() { return "unclassified"; }

struct AuthorRecord {
    std::string name; // canonical display form
    Gender gender = Gender::Unknown;
    std::string affiliation = unclassified_label();
};

struct PaperEntry {
    std::string id;
    int year = 0;
    std::string title;
    std::vector<std::string> authors; // canonical names, no duplicates
    std::vector<std::string> jel;     // 1 or 2 codes, letter + 0-2 digits

    bool coauthored() const { return authors.size() >= 2; }
};

/// Trim + collapse internal whitespace, preserving the display form.
/// Throws DataError when the result is empty.
std::string normalize_name(const std::string& raw);

/// Case-folded lookup key for a (normalized) name. ASCII-only fold: byte
/// values outside A-Z pass through untouched, which keeps UTF-8 intact.
std::string fold_key(const std::string& normalized);

class Corpus {
public:
    std::vector<PaperEntry> entries;
    // keyed by fold_key(name); the record keeps the display form
    std::map<std::string, AuthorRecord> directory;

    const AuthorRecord* find_author(const std::string& name) const;
    AuthorRecord& upsert_author(const std::string& canonical);

    /// Checks the structural invariants (unique ids, resolvable names).
    void validate() const;
};

struct ParseOptions {
    int year_min = 1900;
    int year_max = 2100;
};

/// Reads the canonical record CSV (paper_id,year,title,authors,affiliations,
/// jel1,jel2; ';'-separated multi-values) plus an optional directory file
/// (canonical_name,gender,affiliation). Authors missing from the directory
/// get gender=unknown, affiliation=unclassified.
Corpus parse_corpus(const std::string& records_path,
                    const std::optional<std::string>& directory_path = std::nullopt,
                    const ParseOptions& opts = {});

enum class AnnotationKind { GenderKind, AffiliationKind };

struct AnnotationReport {
    std::map<std::string, std::size_t> class_counts; // applied rows per class
    std::vector<std::string> unknown_names;          // referenced but absent
};

/// Applies one column of an annotation file (canonical_name,gender,affiliation)
/// to the directory. Unknown names are reported, not fatal.
AnnotationReport annotate(Corpus& corpus, const std::string& annotations_path,
                          AnnotationKind kind);

struct YearlyRow {
    int year = 0;
    std::size_t single_count = 0;
    std::size_t coauthored_count = 0;
    std::optional<double> sc_ratio; // nullopt when coauthored == 0
};

/// One row per year present in the corpus, sorted ascending.
std::vector<YearlyRow> yearly_counts(const Corpus& corpus);

/// Canonical self-describing document (JSON, stable field order). Serializing
/// the same corpus twice yields identical bytes.
std::string serialize_corpus(const Corpus& corpus);
Corpus parse_corpus_document(const std::string& text);
Corpus load_corpus_document(const std::string& path);
void save_corpus_document(const Corpus& corpus, const std::string& path);

} // namespace bibnet

#endif
