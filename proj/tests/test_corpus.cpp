#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "bibnet/build.hpp"
#include "bibnet/corpus.hpp"
#include "bibnet/error.hpp"
#include "bibnet/generator.hpp"
#include "bibnet/multigraph.hpp"

using namespace bibnet;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

const char* kRecordsHeader = "paper_id,year,title,authors,affiliations,jel1,jel2\n";

} // namespace

TEST_CASE("normalize_name trims and collapses whitespace") {
    CHECK(normalize_name("  Sosa  Escudero, Walter ") == "Sosa Escudero, Walter");
    CHECK(normalize_name("a\t b") == "a b");
    CHECK_THROWS_AS(normalize_name("   "), DataError);
    CHECK_THROWS_AS(normalize_name(""), DataError);
}

TEST_CASE("fold_key case-folds for comparison only") {
    CHECK(fold_key(normalize_name("GASPARINI, Leonardo")) ==
          fold_key(normalize_name("Gasparini, Leonardo")));
    Corpus corpus;
    corpus.upsert_author("GASPARINI, Leonardo");
    corpus.upsert_author("Gasparini, Leonardo");
    CHECK(corpus.directory.size() == 1);
    // first-seen display form wins
    CHECK(corpus.find_author("gasparini, leonardo")->name == "GASPARINI, Leonardo");
}

TEST_CASE("parse_corpus reads the record schema") {
    auto path = write_temp("corpus_basic.csv",
                           std::string(kRecordsHeader) +
                               "p1,1999,T,\"A;B\",UNS;UNS,C2,I3\n"
                               "p2,2000,U,C,UNLP,E3,\n");
    Corpus corpus = parse_corpus(path);
    REQUIRE(corpus.entries.size() == 2);
    CHECK(corpus.entries[0].authors == std::vector<std::string>{"A", "B"});
    CHECK(corpus.entries[0].jel == std::vector<std::string>{"C2", "I3"});
    CHECK(corpus.entries[1].jel == std::vector<std::string>{"E3"});
    CHECK(corpus.find_author("A")->affiliation == "UNS");
    CHECK(corpus.find_author("A")->gender == Gender::Unknown);
}

TEST_CASE("parse_corpus rejects malformed rows with line numbers") {
    SUBCASE("too many JEL codes") {
        auto path = write_temp("corpus_jel3.csv", std::string(kRecordsHeader) +
                                                      "p1,1999,T,A,UNS,C2,I3;Q1\n");
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_corpus(path)),
                             doctest::Contains("too many JEL codes"), DataError);
    }
    SUBCASE("empty author list") {
        auto path = write_temp("corpus_noauthors.csv",
                               std::string(kRecordsHeader) + "p1,1999,T,,UNS,C2,\n");
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_corpus(path)),
                             doctest::Contains("line 2"), DataError);
    }
    SUBCASE("duplicate paper id") {
        auto path = write_temp("corpus_dupid.csv", std::string(kRecordsHeader) +
                                                       "p1,1999,T,A,,C2,\n"
                                                       "p1,2000,U,B,,E3,\n");
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_corpus(path)),
                             doctest::Contains("duplicate paper_id"), DataError);
    }
    SUBCASE("bad year") {
        auto path = write_temp("corpus_badyear.csv",
                               std::string(kRecordsHeader) + "p1,latest,T,A,,C2,\n");
        CHECK_THROWS_AS(static_cast<void>(parse_corpus(path)), DataError);
    }
    SUBCASE("year outside configured range") {
        auto path = write_temp("corpus_range.csv",
                               std::string(kRecordsHeader) + "p1,1950,T,A,,C2,\n");
        ParseOptions opts;
        opts.year_min = 1964;
        opts.year_max = 2014;
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_corpus(path, std::nullopt, opts)),
                             doctest::Contains("outside meeting range"), DataError);
    }
    SUBCASE("duplicate author in a paper") {
        auto path = write_temp("corpus_dupauthor.csv",
                               std::string(kRecordsHeader) + "p1,1999,T,A;a,,C2,\n");
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_corpus(path)),
                             doctest::Contains("duplicate author"), DataError);
    }
}

TEST_CASE("four-row fixture with a repeated pair feeds the coauthor graph") {
    // hand-counted: pair A;B coauthors twice -> UE 4, one duplicate
    auto path = write_temp("corpus_pair.csv", std::string(kRecordsHeader) +
                                                  "p1,1999,T1,A;B,,C2,\n"
                                                  "p2,2000,T2,A;B,,C2,\n"
                                                  "p3,2001,T3,A;C,,E3,\n"
                                                  "p4,2001,T4,B;D;E,,E3,Q1\n");
    Corpus corpus = parse_corpus(path);
    Multigraph graph = build_coauthor(corpus);
    EdgeCounts counts = edge_counts(graph);
    CHECK(graph.node_count() == 5);
    CHECK(counts.ue == 5); // AB, AC, BD, BE, DE
    CHECK(counts.ewd == 1);
    CHECK(counts.te() == 6);
}

TEST_CASE("directory file assigns gender and affiliation") {
    auto records = write_temp("corpus_dir_records.csv",
                              std::string(kRecordsHeader) + "p1,1999,T,A;B,,C2,\n");
    auto dir = write_temp("corpus_dir.csv", "canonical_name,gender,affiliation\n"
                                            "A,female,UNLP\n");
    Corpus corpus = parse_corpus(records, dir);
    CHECK(corpus.find_author("A")->gender == Gender::Female);
    CHECK(corpus.find_author("A")->affiliation == "UNLP");
    CHECK(corpus.find_author("B")->gender == Gender::Unknown);
    CHECK(corpus.find_author("B")->affiliation == unclassified_label());
}

TEST_CASE("annotate updates known names and reports unknown ones") {
    auto records = write_temp("annot_records.csv", std::string(kRecordsHeader) +
                                                       "p1,1999,T,A;B;C;D;E,,C2,\n");
    Corpus corpus = parse_corpus(records);

    auto annotations = write_temp("annot_gender.csv", "canonical_name,gender,affiliation\n"
                                                      "A,female,\n"
                                                      "B,female,\n"
                                                      "C,female,\n");
    AnnotationReport report = annotate(corpus, annotations, AnnotationKind::GenderKind);
    CHECK(report.class_counts.at("female") == 3);
    CHECK(report.unknown_names.empty());
    int female = 0, unknown = 0;
    for (const auto& [key, rec] : corpus.directory) {
        female += rec.gender == Gender::Female;
        unknown += rec.gender == Gender::Unknown;
    }
    CHECK(female == 3);
    CHECK(unknown == 2);

    auto stray = write_temp("annot_stray.csv", "canonical_name,gender,affiliation\n"
                                               "X,male,\n");
    AnnotationReport stray_report = annotate(corpus, stray, AnnotationKind::GenderKind);
    CHECK(stray_report.unknown_names == std::vector<std::string>{"X"});
    CHECK(corpus.directory.size() == 5); // corpus unchanged for X

    auto bad = write_temp("annot_bad.csv", "canonical_name,gender,affiliation\n"
                                           "A,banana,\n");
    CHECK_THROWS_AS(static_cast<void>(annotate(corpus, bad, AnnotationKind::GenderKind)),
                    DataError);
}

TEST_CASE("unknown-gender authors stay out of gender subnetworks") {
    // F+M annotated < total, like the published 279+566 < 890 sample note
    auto records = write_temp("gender_records.csv", std::string(kRecordsHeader) +
                                                        "p1,1999,T,A;B,,C2,\n"
                                                        "p2,2000,U,C;D,,C2,\n"
                                                        "p3,2001,V,E;F,,C2,\n");
    Corpus corpus = parse_corpus(records);
    auto annotations = write_temp("gender_annot.csv", "canonical_name,gender,affiliation\n"
                                                      "A,female,\nB,female,\nC,male,\nD,male,\n");
    annotate(corpus, annotations, AnnotationKind::GenderKind);

    Multigraph full = build_coauthor(corpus);
    Multigraph female = build_coauthor(corpus, std::nullopt, Gender::Female);
    Multigraph male = build_coauthor(corpus, std::nullopt, Gender::Male);
    CHECK(full.node_count() == 6);
    CHECK(female.node_count() == 2);
    CHECK(male.node_count() == 2);
    CHECK(female.node_count() + male.node_count() <= full.node_count());
    CHECK(!female.index_of("E").has_value());
}

TEST_CASE("yearly_counts splits singles from coauthored papers") {
    auto path = write_temp("yearly.csv", std::string(kRecordsHeader) +
                                             "p1,1999,T,A,,C2,\n"
                                             "p2,1999,U,B,,C2,\n"
                                             "p3,1999,V,C,,C2,\n"
                                             "p4,1999,W,A;B,,C2,\n"
                                             "p5,2001,X,D,,C2,\n");
    Corpus corpus = parse_corpus(path);
    auto rows = yearly_counts(corpus);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].year == 1999);
    CHECK(rows[0].single_count == 3);
    CHECK(rows[0].coauthored_count == 1);
    CHECK(rows[0].sc_ratio == doctest::Approx(3.0));
    // division guard: no coauthored papers -> no ratio
    CHECK(rows[1].year == 2001);
    CHECK(!rows[1].sc_ratio.has_value());

    std::size_t total = 0;
    for (const auto& row : rows)
        total += row.single_count + row.coauthored_count;
    CHECK(total == corpus.entries.size());
}

TEST_CASE("corpus document round-trips byte-identically") {
    auto path = write_temp("roundtrip.csv", std::string(kRecordsHeader) +
                                                "p1,1999,\"T, with comma\",\"A;B\",UNS;UNLP,C2,I3\n"
                                                "p2,2000,U,C,,E3,\n");
    Corpus corpus = parse_corpus(path);
    std::string doc = serialize_corpus(corpus);
    Corpus again = parse_corpus_document(doc);
    CHECK(serialize_corpus(again) == doc);
    CHECK(again.entries.size() == corpus.entries.size());
    CHECK(again.directory.size() == corpus.directory.size());
    CHECK(again.entries[0].title == "T, with comma");
}

TEST_CASE("generate_corpus is deterministic") {
    GeneratorConfig config;
    config.seed = 42;
    config.n_papers = 150;
    config.n_authors = 60;
    config.attach_bias = 0.7;
    Corpus a = generate_corpus(config);
    Corpus b = generate_corpus(config);
    CHECK(serialize_corpus(a) == serialize_corpus(b));

    config.seed = 43;
    Corpus c = generate_corpus(config);
    CHECK(serialize_corpus(a) != serialize_corpus(c));
}

TEST_CASE("generate_corpus validates inputs") {
    GeneratorConfig config;
    config.n_authors = 1;
    CHECK_THROWS_AS(static_cast<void>(generate_corpus(config)), DataError);

    CHECK_THROWS_AS(static_cast<void>(parse_schedule("1990")), DataError);
    CHECK_THROWS_AS(static_cast<void>(parse_schedule("1990:2,2000:0.5")), DataError);
    CHECK_THROWS_AS(static_cast<void>(parse_schedule("2000:0.5,1990:0.2")), DataError);
    auto anchors = parse_schedule("1964:0.1,2014:0.8");
    REQUIRE(anchors.size() == 2);
    CHECK(anchors[1].year == 2014);
}

TEST_CASE("uniform selection passes a chi-square check against multinomial sampling") {
    GeneratorConfig config;
    config.seed = 20240501;
    config.n_papers = 1200;
    config.n_authors = 50;
    config.attach_bias = 0.0;
    Corpus corpus = generate_corpus(config);

    std::map<std::string, long> appearances;
    long total = 0;
    for (const auto& e : corpus.entries)
        for (const auto& a : e.authors) {
            ++appearances[a];
            ++total;
        }
    const double expected = static_cast<double>(total) / static_cast<double>(config.n_authors);
    double chi2 = 0;
    for (const auto& [key, rec] : corpus.directory) {
        double diff = static_cast<double>(appearances[rec.name]) - expected;
        chi2 += diff * diff / expected;
    }

    // oracle: direct multinomial draws of the same total, same cell count
    std::mt19937_64 rng(987654321);
    std::vector<double> oracle_stats;
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<long> cells(config.n_authors, 0);
        for (long t = 0; t < total; ++t) {
            auto u = static_cast<std::size_t>((static_cast<double>(rng() >> 11) * 0x1.0p-53) *
                                              static_cast<double>(config.n_authors));
            ++cells[u];
        }
        double stat = 0;
        for (long c : cells) {
            double diff = static_cast<double>(c) - expected;
            stat += diff * diff / expected;
        }
        oracle_stats.push_back(stat);
    }
    std::sort(oracle_stats.begin(), oracle_stats.end());
    // within the oracle's 99th percentile = statistically indistinguishable
    CHECK(chi2 < oracle_stats[197]);
}

TEST_CASE("attachment bias fattens the degree tail") {
    GeneratorConfig uniform;
    uniform.seed = 777;
    uniform.n_papers = 2000;
    uniform.n_authors = 600;
    uniform.attach_bias = 0.0;
    GeneratorConfig preferential = uniform;
    preferential.attach_bias = 1.0;

    Multigraph gu = build_coauthor(generate_corpus(uniform));
    Multigraph gp = build_coauthor(generate_corpus(preferential));

    auto degrees = [](const Multigraph& g) {
        std::vector<int> d;
        for (int u = 0; u < g.node_count(); ++u)
            d.push_back(g.simple_degree(u));
        std::sort(d.begin(), d.end());
        return d;
    };
    auto du = degrees(gu);
    auto dp = degrees(gp);
    REQUIRE(!du.empty());
    REQUIRE(!dp.empty());
    CHECK(dp.back() > du.back()); // larger max degree

    // tail mass beyond the uniform run's 95th percentile
    int q95 = du[static_cast<std::size_t>(0.95 * static_cast<double>(du.size() - 1))];
    auto tail_mass = [q95](const std::vector<int>& d) {
        double tail = 0, all = 0;
        for (int x : d) {
            all += x;
            if (x > q95)
                tail += x;
        }
        return tail / all;
    };
    CHECK(tail_mass(dp) > tail_mass(du));
}

TEST_CASE("rising coauthorship schedule pushes the S/C ratio downward") {
    GeneratorConfig config;
    config.seed = 2024;
    config.n_papers = 3000;
    config.n_authors = 300;
    config.schedule = parse_schedule("1964:0.1,2014:0.9");
    Corpus corpus = generate_corpus(config);
    auto rows = yearly_counts(corpus);

    // least-squares slope of the defined ratios against year
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rows) {
        if (!row.sc_ratio)
            continue;
        double x = row.year, y = *row.sc_ratio;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    REQUIRE(n > 10);
    double slope = (static_cast<double>(n) * sxy - sx * sy) /
                   (static_cast<double>(n) * sxx - sx * sx);
    CHECK(slope < 0.0);
}
