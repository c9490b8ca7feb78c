#include "bibnet/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bibnet/build.hpp"
#include "bibnet/corpus.hpp"
#include "bibnet/error.hpp"
#include "bibnet/export.hpp"
#include "bibnet/format.hpp"
#include "bibnet/generator.hpp"
#include "bibnet/metrics.hpp"
#include "bibnet/stats.hpp"
#include "bibnet/svg.hpp"
#include "bibnet/table.hpp"

namespace bibnet {

namespace {

struct CliState {
    std::ostream& out;
    std::ostream& err;
    DecimalStyle style = decimal_style_from_env();
};

void write_text(CliState& state, const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        state.out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw DataError("cannot write file: " + out_path);
    file << text;
}

TableFormat parse_format(const std::string& name) {
    if (name == "tsv")
        return TableFormat::Tsv;
    if (name == "markdown")
        return TableFormat::Markdown;
    throw CLI::ValidationError("--format must be tsv or markdown");
}

Gender parse_gender_flag(const std::string& flag) {
    auto gender = gender_from_string(flag);
    if (!gender || *gender == Gender::Unknown)
        throw CLI::ValidationError("--gender must be F or M");
    return *gender;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string cell(std::optional<double> v, int decimals, DecimalStyle style) {
    return format_opt(v, decimals, style);
}

std::string cluster_table(const std::vector<ClusterMetricsRow>& rows, bool with_sl,
                          TableFormat format, DecimalStyle style,
                          const std::string& label_header) {
    std::vector<std::string> header = {label_header, "N", "UE", "EwD", "TE"};
    if (with_sl)
        header.push_back("SL");
    for (const char* c : {"CC", "SVCC", "MVCC", "MECC", "MGD", "AGD", "D"})
        header.emplace_back(c);
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> r = {row.label, std::to_string(row.n), std::to_string(row.ue),
                                      std::to_string(row.ewd), std::to_string(row.te)};
        if (with_sl)
            r.push_back(std::to_string(row.sl));
        r.push_back(std::to_string(row.cc));
        r.push_back(std::to_string(row.svcc));
        r.push_back(std::to_string(row.mvcc));
        r.push_back(std::to_string(row.mecc));
        r.push_back(std::to_string(row.mgd));
        r.push_back(cell(row.agd, 3, style));
        r.push_back(cell(row.density, 3, style));
        cells.push_back(std::move(r));
    }
    return render_table(header, cells, format);
}

std::string component_table(const std::vector<ClusterMetricsRow>& rows, TableFormat format,
                            DecimalStyle style) {
    // Component report keeps the classic 8-column layout
    std::vector<std::string> header = {"Group", "N", "UE", "EwD", "TE", "MGD", "AGD", "D"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows)
        cells.push_back({row.label, std::to_string(row.n), std::to_string(row.ue),
                         std::to_string(row.ewd), std::to_string(row.te),
                         std::to_string(row.mgd), cell(row.agd, 3, style),
                         cell(row.density, 3, style)});
    return render_table(header, cells, format);
}

std::string correlation_table(const CorrelationMatrix& matrix, TableFormat format,
                              DecimalStyle style) {
    std::vector<std::string> header = {""};
    for (const auto& name : matrix.columns)
        header.push_back(name);
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < matrix.columns.size(); ++i) {
        std::vector<std::string> row = {matrix.columns[i]};
        for (std::size_t j = 0; j < matrix.columns.size(); ++j)
            row.push_back(cell(matrix.r[i][j], 3, style));
        cells.push_back(std::move(row));
    }
    return render_table(header, cells, format);
}

int dispatch(const std::vector<std::string>& args, CliState& state);

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState state{out, err};
    try {
        return dispatch(args, state);
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, CliState& state) {
    CLI::App app{"bibliographic network analysis toolkit"};
    app.require_subcommand(1);

    // ---- ingest ----------------------------------------------------------
    auto* ingest = app.add_subcommand("ingest", "parse a record CSV into a corpus document");
    std::string in_records, in_directory, in_year_range, in_out;
    ingest->add_option("--records", in_records, "record CSV file")->required();
    ingest->add_option("--directory", in_directory, "author directory CSV");
    ingest->add_option("--year-range", in_year_range, "meeting range LO:HI");
    ingest->add_option("--out,-o", in_out, "output corpus document")->required();

    // ---- simulate --------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "generate a synthetic corpus");
    GeneratorConfig gen_config;
    std::string sim_schedule, sim_out;
    simulate->add_option("--seed", gen_config.seed, "RNG seed")->required();
    simulate->add_option("--papers", gen_config.n_papers, "number of papers")->required();
    simulate->add_option("--authors", gen_config.n_authors, "author pool size")->required();
    simulate->add_option("--attach-bias", gen_config.attach_bias,
                         "preferential attachment exponent (0 = uniform)");
    simulate->add_option("--schedule", sim_schedule, "coauthorship schedule YEAR:P,YEAR:P,...");
    simulate->add_option("--out,-o", sim_out, "output corpus document")->required();

    // ---- annotate ----------------------------------------------------------
    auto* annotate_cmd = app.add_subcommand("annotate", "apply gender/affiliation annotations");
    std::string an_corpus, an_file, an_kind, an_out;
    annotate_cmd->add_option("--corpus", an_corpus, "corpus document")->required();
    annotate_cmd->add_option("--file", an_file, "annotation CSV")->required();
    annotate_cmd->add_option("--kind", an_kind, "gender|affiliation")->required();
    annotate_cmd->add_option("--out,-o", an_out, "output corpus document")->required();

    // ---- build -----------------------------------------------------------
    auto* build = app.add_subcommand("build", "construct a network from a corpus");
    build->require_subcommand(1);
    std::string build_corpus, build_window, build_gender, build_out;
    bool include_singles = false;
    auto add_build_common = [&](CLI::App* sub, bool coauthor_flags) {
        sub->add_option("--corpus", build_corpus, "corpus document")->required();
        sub->add_option("--out,-o", build_out, "output graph prefix")->required();
        if (coauthor_flags) {
            sub->add_option("--window", build_window, "year window LO:HI");
            sub->add_option("--gender", build_gender, "gender filter F|M");
            sub->add_flag("--include-singles", include_singles,
                          "add pure single-authors as isolates");
        }
    };
    add_build_common(build->add_subcommand("coauthor", "coauthorship network"), true);
    add_build_common(build->add_subcommand("jel", "thematic JEL network"), false);
    add_build_common(build->add_subcommand("affil", "coauthorship network grouped by affiliation"),
                     true);

    // ---- metrics ---------------------------------------------------------
    auto* metrics_cmd = app.add_subcommand("metrics", "compute the per-node metric frame");
    std::string metrics_graph, metrics_out;
    bool metrics_rw = false;
    metrics_cmd->add_option("--graph", metrics_graph, "graph prefix")->required();
    metrics_cmd->add_flag("--rw", metrics_rw, "include random-walk centralities");
    metrics_cmd->add_option("--out,-o", metrics_out, "output frame TSV")->required();

    // ---- stats -----------------------------------------------------------
    auto* stats_cmd = app.add_subcommand("stats", "tables and reports");
    stats_cmd->require_subcommand(1);
    std::string st_graph, st_frame, st_corpus, st_columns, st_metrics_list, st_key, st_by,
        st_metric, st_gender, st_format = "tsv", st_out;
    std::size_t st_k = 10;
    bool st_matrix = false, st_eigen_x100 = false;

    auto* st_degree = stats_cmd->add_subcommand("degree-dist", "degree histogram");
    st_degree->add_option("--graph", st_graph, "graph prefix")->required();

    auto* st_corr = stats_cmd->add_subcommand("corr", "Pearson correlation matrix");
    st_corr->add_option("--frame", st_frame, "metric frame TSV");
    st_corr->add_option("--graph", st_graph, "graph prefix (cluster metric correlations)");
    st_corr->add_option("--key", st_key, "cluster key: affiliation|jel-letter|gender");
    st_corr->add_option("--columns", st_columns, "comma-separated metric columns");

    auto* st_dev = stats_cmd->add_subcommand("deviation", "group mean deviations");
    st_dev->add_option("--frame", st_frame, "metric frame TSV")->required();
    st_dev->add_option("--by", st_by, "gender|affiliation")->default_val("gender");
    st_dev->add_option("--metrics", st_metrics_list, "comma-separated metric columns");

    auto* st_small = stats_cmd->add_subcommand("smallworld", "small-world diagnostic");
    st_small->add_option("--graph", st_graph, "graph prefix")->required();

    auto* st_top = stats_cmd->add_subcommand("top", "top-k nodes by metric");
    st_top->add_option("--frame", st_frame, "metric frame TSV")->required();
    st_top->add_option("--metric", st_metric, "metric column")->required();
    st_top->add_option("--k", st_k, "row count");
    st_top->add_option("--gender", st_gender, "gender filter F|M");
    st_top->add_flag("--eigen-x100", st_eigen_x100, "display eigenvector values times 100");

    auto* st_components = stats_cmd->add_subcommand("components", "connected component table");
    st_components->add_option("--graph", st_graph, "graph prefix")->required();

    auto* st_clusters = stats_cmd->add_subcommand("clusters", "cluster metric table");
    st_clusters->add_option("--graph", st_graph, "graph prefix")->required();
    st_clusters->add_option("--key", st_key, "affiliation|jel-letter|gender")->required();
    st_clusters->add_flag("--matrix", st_matrix, "also print the intra/extra pair matrix");

    auto* st_yearly = stats_cmd->add_subcommand("yearly", "single/coauthored counts per year");
    st_yearly->add_option("--corpus", st_corpus, "corpus document")->required();

    auto* st_kcore = stats_cmd->add_subcommand("kcore", "coreness summary and maximum core");
    st_kcore->add_option("--graph", st_graph, "graph prefix")->required();

    for (CLI::App* sub : {st_degree, st_corr, st_dev, st_small, st_top, st_components,
                          st_clusters, st_yearly, st_kcore}) {
        sub->add_option("--format", st_format, "tsv|markdown");
        sub->add_option("--out,-o", st_out, "output file (default stdout)");
    }

    // ---- export ----------------------------------------------------------
    auto* export_cmd = app.add_subcommand("export", "write exchange formats");
    export_cmd->require_subcommand(1);
    std::string ex_graph, ex_frame, ex_out, ex_kind, ex_columns;

    auto* ex_graphml = export_cmd->add_subcommand("graphml", "GraphML document");
    auto* ex_dot = export_cmd->add_subcommand("dot", "Graphviz DOT document");
    auto* ex_edges = export_cmd->add_subcommand("edges", "edge list + node sidecar");
    for (CLI::App* sub : {ex_graphml, ex_dot, ex_edges}) {
        sub->add_option("--graph", ex_graph, "graph prefix")->required();
        sub->add_option("--out,-o", ex_out, "output path")->required();
    }
    ex_graphml->add_option("--frame", ex_frame, "attach metric frame as node attributes");

    auto* ex_svg = export_cmd->add_subcommand("svg", "static SVG plot");
    ex_svg->add_option("--kind", ex_kind, "histogram|loglog|scatter-matrix")->required();
    ex_svg->add_option("--graph", ex_graph, "graph prefix (histogram/loglog)");
    ex_svg->add_option("--frame", ex_frame, "metric frame TSV (scatter-matrix)");
    ex_svg->add_option("--columns", ex_columns, "scatter-matrix metric columns");
    ex_svg->add_option("--out,-o", ex_out, "output SVG path")->required();

    // parse argv (and flag-level validations) fully before any filesystem work
    TableFormat table_format = TableFormat::Tsv;
    std::optional<Gender> gender_filter;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        table_format = parse_format(st_format);
        if (!build_gender.empty())
            gender_filter = parse_gender_flag(build_gender);
        if (!st_gender.empty())
            gender_filter = parse_gender_flag(st_gender);
        if (*st_dev && st_by != "affiliation" && st_by != "gender")
            throw CLI::ValidationError("--by must be gender or affiliation");
        if (*annotate_cmd && an_kind != "gender" && an_kind != "affiliation")
            throw CLI::ValidationError("--kind must be gender or affiliation");
    } catch (const CLI::CallForHelp&) {
        state.out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        state.err << "usage error: " << e.what() << '\n';
        return 1;
    }

    const DecimalStyle style = state.style;

    if (*ingest) {
        ParseOptions opts;
        if (!in_year_range.empty()) {
            YearRange range = parse_year_range(in_year_range);
            opts.year_min = range.lo;
            opts.year_max = range.hi;
        }
        std::optional<std::string> directory;
        if (!in_directory.empty())
            directory = in_directory;
        Corpus corpus = parse_corpus(in_records, directory, opts);
        save_corpus_document(corpus, in_out);
        state.err << "ingested " << corpus.entries.size() << " papers, "
                  << corpus.directory.size() << " authors\n";
        return 0;
    }

    if (*annotate_cmd) {
        Corpus corpus = load_corpus_document(an_corpus);
        AnnotationKind kind = an_kind == "gender" ? AnnotationKind::GenderKind
                                                  : AnnotationKind::AffiliationKind;
        AnnotationReport report = annotate(corpus, an_file, kind);
        save_corpus_document(corpus, an_out);
        for (const auto& [label, count] : report.class_counts)
            state.err << label << ": " << count << '\n';
        if (!report.unknown_names.empty()) {
            state.err << "warning: unknown names skipped:";
            for (const auto& name : report.unknown_names)
                state.err << ' ' << name;
            state.err << '\n';
        }
        return 0;
    }

    if (*simulate) {
        if (!sim_schedule.empty())
            gen_config.schedule = parse_schedule(sim_schedule);
        Corpus corpus = generate_corpus(gen_config);
        save_corpus_document(corpus, sim_out);
        state.err << "generated " << corpus.entries.size() << " papers, "
                  << corpus.directory.size() << " authors\n";
        return 0;
    }

    if (*build) {
        Corpus corpus = load_corpus_document(build_corpus);
        std::optional<YearRange> window;
        if (!build_window.empty())
            window = parse_year_range(build_window);
        std::optional<Gender> gender = build_gender.empty() ? std::nullopt : gender_filter;

        Multigraph graph;
        if (build->got_subcommand("jel")) {
            graph = build_jel(corpus);
        } else {
            graph = build_coauthor(corpus, window, gender, include_singles);
            if (build->got_subcommand("affil"))
                for (int u = 0; u < graph.node_count(); ++u)
                    graph.node(u).group = graph.node(u).affiliation.empty()
                                              ? unclassified_label()
                                              : graph.node(u).affiliation;
        }
        save_graph(graph, build_out);
        EdgeCounts counts = edge_counts(graph);
        state.err << "built graph: " << graph.node_count() << " nodes, " << counts.ue
                  << " unique edges, " << counts.te() << " total edges";
        if (counts.sl > 0)
            // the loop-inclusive unique count is reported too, since sources
            // differ on whether "unique links" include loops
            state.err << ", " << counts.sl << " self-loops (" << counts.unique_with_loops()
                      << " unique incl. loops)";
        state.err << '\n';
        return 0;
    }

    if (*metrics_cmd) {
        Multigraph graph = load_graph(metrics_graph);
        MetricFrame frame = metric_frame(graph, metrics_rw);
        std::ofstream file(metrics_out, std::ios::binary);
        if (!file)
            throw DataError("cannot write file: " + metrics_out);
        file << serialize_frame(frame);
        state.err << "metrics for " << frame.rows.size() << " nodes written\n";
        return 0;
    }

    if (*stats_cmd) {
        if (*st_degree) {
            Multigraph graph = load_graph(st_graph);
            DegreeDistribution dist = degree_distribution(graph);
            std::vector<std::vector<std::string>> cells;
            for (const auto& [degree, count] : dist.histogram)
                cells.push_back({std::to_string(degree), std::to_string(count)});
            write_text(state, st_out, render_table({"degree", "nodes"}, cells, table_format));
            return 0;
        }
        if (*st_corr) {
            CorrelationMatrix matrix;
            if (!st_frame.empty()) {
                MetricFrame frame = load_frame(st_frame);
                std::vector<std::string> columns =
                    st_columns.empty() ? [&frame] {
                        auto cols = MetricFrame::core_metric_names();
                        if (frame.has_rw) {
                            cols.push_back("rw_betweenness");
                            cols.push_back("rw_closeness");
                        }
                        return cols;
                    }()
                                       : split_list(st_columns);
                matrix = correlation_matrix(frame, columns);
            } else if (!st_graph.empty()) {
                if (st_key.empty())
                    throw DataError("stats corr --graph needs --key");
                auto key = partition_key_from_string(st_key);
                if (!key)
                    throw DataError("unknown cluster key: " + st_key);
                Multigraph graph = load_graph(st_graph);
                auto rows = cluster_metrics(graph, group_partition(graph, *key));
                matrix = cluster_correlations(rows, *key == PartitionKey::JelFirstLetter);
            } else {
                throw DataError("stats corr needs --frame or --graph");
            }
            write_text(state, st_out, correlation_table(matrix, table_format, style));
            return 0;
        }
        if (*st_dev) {
            MetricFrame frame = load_frame(st_frame);
            auto classes = st_by == "affiliation" ? affiliation_classes(frame)
                                                  : gender_classes(frame);
            std::vector<std::string> metrics = st_metrics_list.empty()
                                                   ? MetricFrame::core_metric_names()
                                                   : split_list(st_metrics_list);
            GroupDeviationTable table = group_mean_deviation(frame, classes, metrics);
            std::vector<std::string> header = {"group", "size"};
            for (const auto& m : table.metrics)
                header.push_back(m);
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : table.rows) {
                std::vector<std::string> r = {row.label, std::to_string(row.size)};
                for (const auto& dev : row.deviation_pct)
                    r.push_back(dev ? format_fixed(*dev, 1, style) + "%"
                                    : std::string(undefined_marker()));
                cells.push_back(std::move(r));
            }
            write_text(state, st_out, render_table(header, cells, table_format));
            return 0;
        }
        if (*st_small) {
            Multigraph graph = load_graph(st_graph);
            SmallWorldReport report = small_world_report(graph);
            std::vector<std::vector<std::string>> cells = {
                {"nodes", std::to_string(report.g)},
                {"ln(nodes)", format_fixed(report.ln_g, 2, style)},
                {"giant nodes", std::to_string(report.giant_nodes)},
                {"ln(giant)", format_fixed(report.ln_giant, 2, style)},
                {"giant node share", format_fixed(report.giant_share_nodes, 3, style)},
                {"giant edge share", format_fixed(report.giant_share_edges, 3, style)},
                {"giant MGD", std::to_string(report.mgd_giant)},
                {"giant AGD", format_fixed(report.agd_giant, 2, style)},
                {"note", report.verdict},
            };
            write_text(state, st_out, render_table({"quantity", "value"}, cells, table_format));
            return 0;
        }
        if (*st_top) {
            MetricFrame frame = load_frame(st_frame);
            std::optional<Gender> gender = st_gender.empty() ? std::nullopt : gender_filter;
            auto rows = top_k(frame, st_metric, st_k, gender);
            const double scale = (st_eigen_x100 && st_metric == "eigenvector") ? 100.0 : 1.0;
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : rows)
                cells.push_back({row.name, std::to_string(row.degree),
                                 format_sig(row.value * scale, 6, style), row.affiliation});
            write_text(state, st_out,
                       render_table({"name", "degree", st_metric, "affiliation"}, cells,
                                    table_format));
            return 0;
        }
        if (*st_components) {
            Multigraph graph = load_graph(st_graph);
            write_text(state, st_out,
                       component_table(component_metrics_table(graph), table_format, style));
            return 0;
        }
        if (*st_clusters) {
            auto key = partition_key_from_string(st_key);
            if (!key)
                throw DataError("unknown cluster key: " + st_key);
            Multigraph graph = load_graph(st_graph);
            Partition partition = group_partition(graph, *key);
            std::string text = cluster_table(cluster_metrics(graph, partition),
                                             *key == PartitionKey::JelFirstLetter, table_format,
                                             style, "group");
            if (st_matrix) {
                IntraExtra classified = intra_extra_edges(graph, partition);
                std::vector<std::vector<std::string>> cells;
                for (const auto& row : classified.per_group)
                    cells.push_back({row.label, std::to_string(row.intra),
                                     std::to_string(row.extra)});
                text += "\n" + render_table({"group", "intra", "extra"}, cells, table_format);
                cells.clear();
                for (const auto& [pair, count] : classified.pair_matrix)
                    cells.push_back({pair.first, pair.second, std::to_string(count)});
                text += "\n" + render_table({"group_a", "group_b", "edges"}, cells, table_format);
            }
            write_text(state, st_out, text);
            return 0;
        }
        if (*st_yearly) {
            Corpus corpus = load_corpus_document(st_corpus);
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : yearly_counts(corpus))
                cells.push_back({std::to_string(row.year), std::to_string(row.single_count),
                                 std::to_string(row.coauthored_count),
                                 row.sc_ratio ? format_fixed(*row.sc_ratio, 3, style)
                                              : std::string(undefined_marker())});
            write_text(state, st_out,
                       render_table({"year", "single", "coauthored", "sc_ratio"}, cells,
                                    table_format));
            return 0;
        }
        if (*st_kcore) {
            Multigraph graph = load_graph(st_graph);
            KCoreResult cores = kcore(graph);
            std::vector<std::vector<std::string>> cells;
            for (int u = 0; u < graph.node_count(); ++u)
                cells.push_back({graph.node(u).id,
                                 std::to_string(cores.coreness[static_cast<std::size_t>(u)])});
            std::string text = render_table({"node", "coreness"}, cells, table_format);
            text += "\nmax k: " + std::to_string(cores.max_k) + "\n";
            if (cores.max_k >= 1) {
                const auto& top = cores.cores[static_cast<std::size_t>(cores.max_k - 1)];
                for (std::size_t c = 0; c < top.size(); ++c) {
                    text += "core " + std::to_string(cores.max_k) + "." + std::to_string(c + 1) + ":";
                    for (int u : top[c])
                        text += " " + graph.node(u).id;
                    text += "\n";
                }
            }
            write_text(state, st_out, text);
            return 0;
        }
    }

    if (*export_cmd) {
        if (*ex_svg) {
            std::string text;
            if (ex_kind == "histogram" || ex_kind == "loglog") {
                if (ex_graph.empty())
                    throw DataError("export svg --kind " + ex_kind + " needs --graph");
                DegreeDistribution dist = degree_distribution(load_graph(ex_graph));
                text = ex_kind == "histogram" ? svg_histogram(dist) : svg_loglog(dist);
            } else if (ex_kind == "scatter-matrix") {
                if (ex_frame.empty())
                    throw DataError("export svg --kind scatter-matrix needs --frame");
                MetricFrame frame = load_frame(ex_frame);
                std::vector<std::string> columns = ex_columns.empty()
                                                       ? MetricFrame::core_metric_names()
                                                       : split_list(ex_columns);
                text = svg_scatter_matrix(scatter_matrix_data(frame, columns));
            } else {
                throw DataError("unknown svg kind: " + ex_kind);
            }
            write_text(state, ex_out, text);
            return 0;
        }
        Multigraph graph = load_graph(ex_graph);
        if (*ex_graphml) {
            if (!ex_frame.empty()) {
                MetricFrame frame = load_frame(ex_frame);
                write_text(state, ex_out, graph_to_graphml(graph, &frame));
            } else {
                write_text(state, ex_out, graph_to_graphml(graph));
            }
            return 0;
        }
        if (*ex_dot) {
            write_text(state, ex_out, graph_to_dot(graph));
            return 0;
        }
        if (*ex_edges) {
            save_graph(graph, ex_out);
            return 0;
        }
    }

    state.err << "usage error: no subcommand\n";
    return 1;
}

} // namespace

} // namespace bibnet
