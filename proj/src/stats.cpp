#include "bibnet/stats.hpp"

#include <algorithm>
#include <cmath>

#include "bibnet/error.hpp"

namespace bibnet {

DegreeDistribution degree_distribution(const Multigraph& graph) {
    DegreeDistribution dist;
    for (int u = 0; u < graph.node_count(); ++u)
        ++dist.histogram[graph.simple_degree(u)];
    for (const auto& [degree, count] : dist.histogram)
        if (degree >= 1 && count >= 1)
            dist.loglog.emplace_back(std::log(static_cast<double>(degree)),
                                     std::log(static_cast<double>(count)));
    return dist;
}

namespace {

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2)
        return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

CorrelationMatrix correlation_matrix(const std::vector<std::string>& names,
                                     const std::vector<std::vector<double>>& data) {
    if (names.size() != data.size())
        throw DataError("correlation: column name/data mismatch");
    const std::size_t k = names.size();
    for (std::size_t i = 1; i < k; ++i)
        if (data[i].size() != data[0].size())
            throw DataError("correlation: ragged columns");
    if (!data.empty() && data[0].size() < 2)
        throw DataError("correlation needs at least 2 rows");

    std::vector<bool> degenerate(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        bool constant = true;
        for (std::size_t r = 1; r < data[i].size(); ++r)
            if (data[i][r] != data[i][0]) {
                constant = false;
                break;
            }
        degenerate[i] = constant;
    }

    CorrelationMatrix matrix;
    matrix.columns = names;
    matrix.r.assign(k, std::vector<std::optional<double>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            std::optional<double> r;
            if (!degenerate[i] && !degenerate[j])
                r = (i == j) ? std::optional<double>(1.0) : pearson(data[i], data[j]);
            matrix.r[i][j] = r;
            matrix.r[j][i] = r;
        }
    }
    return matrix;
}

CorrelationMatrix correlation_matrix(const MetricFrame& frame,
                                     const std::vector<std::string>& metrics) {
    std::vector<std::vector<double>> data;
    data.reserve(metrics.size());
    for (const auto& name : metrics)
        data.push_back(frame.column(name));
    return correlation_matrix(metrics, data);
}

CorrelationMatrix cluster_correlations(const std::vector<ClusterMetricsRow>& rows,
                                       bool include_sl) {
    std::vector<std::string> names = {"N", "UE", "EwD", "TE"};
    if (include_sl)
        names.push_back("SL");
    for (const char* c : {"CC", "SVCC", "MVCC", "MECC", "MGD", "AGD", "D"})
        names.emplace_back(c);

    std::vector<std::vector<double>> data(names.size());
    for (const auto& row : rows) {
        std::size_t i = 0;
        data[i++].push_back(row.n);
        data[i++].push_back(static_cast<double>(row.ue));
        data[i++].push_back(static_cast<double>(row.ewd));
        data[i++].push_back(static_cast<double>(row.te));
        if (include_sl)
            data[i++].push_back(static_cast<double>(row.sl));
        data[i++].push_back(row.cc);
        data[i++].push_back(row.svcc);
        data[i++].push_back(row.mvcc);
        data[i++].push_back(static_cast<double>(row.mecc));
        data[i++].push_back(row.mgd);
        data[i++].push_back(row.agd.value_or(0.0));
        data[i++].push_back(row.density.value_or(0.0));
    }
    return correlation_matrix(names, data);
}

GroupDeviationTable group_mean_deviation(
    const MetricFrame& frame, const std::map<std::string, std::vector<std::size_t>>& classes,
    const std::vector<std::string>& metrics) {
    GroupDeviationTable table;
    table.metrics = metrics;
    for (const auto& [label, members] : classes)
        if (members.empty())
            throw DataError("empty partition class: " + label);

    for (std::size_t m = 0; m < metrics.size(); ++m) {
        std::vector<double> column = frame.column(metrics[m]);
        double overall = 0;
        std::size_t total = 0;
        for (const auto& [label, members] : classes) {
            for (std::size_t idx : members)
                overall += column.at(idx);
            total += members.size();
        }
        overall /= static_cast<double>(total);

        std::size_t r = 0;
        for (const auto& [label, members] : classes) {
            if (m == 0) {
                table.rows.push_back({label, members.size(), {}});
            }
            GroupDeviationRow& row = table.rows[r++];
            double group_mean = 0;
            for (std::size_t idx : members)
                group_mean += column.at(idx);
            group_mean /= static_cast<double>(members.size());
            if (overall == 0.0)
                row.deviation_pct.push_back(std::nullopt);
            else
                row.deviation_pct.push_back(100.0 * (group_mean - overall) / overall);
        }
    }
    return table;
}

std::map<std::string, std::vector<std::size_t>> gender_classes(const MetricFrame& frame) {
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < frame.rows.size(); ++i) {
        if (frame.rows[i].gender == Gender::Female)
            classes["female"].push_back(i);
        else if (frame.rows[i].gender == Gender::Male)
            classes["male"].push_back(i);
    }
    return classes;
}

std::map<std::string, std::vector<std::size_t>> affiliation_classes(const MetricFrame& frame) {
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < frame.rows.size(); ++i) {
        const std::string& label =
            frame.rows[i].affiliation.empty() ? unclassified_label() : frame.rows[i].affiliation;
        classes[label].push_back(i);
    }
    return classes;
}

SmallWorldReport small_world_report(const Multigraph& graph) {
    SmallWorldReport report;
    report.g = graph.node_count();
    if (report.g == 0)
        return report;
    report.ln_g = std::log(static_cast<double>(report.g));

    auto decomposition = connected_components(graph);
    const auto& giant = decomposition.components.front();
    report.giant_nodes = static_cast<int>(giant.size());
    report.ln_giant = std::log(static_cast<double>(report.giant_nodes));
    report.giant_share_nodes =
        static_cast<double>(report.giant_nodes) / static_cast<double>(report.g);

    const long total_edges = edge_counts(graph).te();
    Multigraph giant_graph = induced_subgraph(graph, giant);
    const long giant_edges = edge_counts(giant_graph).te();
    report.giant_share_edges =
        total_edges > 0 ? static_cast<double>(giant_edges) / static_cast<double>(total_edges) : 0.0;

    GeodesicStats geo = geodesic_stats(giant_graph);
    report.mgd_giant = geo.mgd;
    report.agd_giant = geo.agd;

    // informational: a giant component plus AGD comparable to ln(g) is the
    // usual small-world reading
    double ratio = report.ln_g > 0 ? report.agd_giant / report.ln_g : 0.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "AGD(giant)/ln(g) = %.2f; AGD(giant)/ln(giant) = %.2f; giant holds %.1f%% of nodes",
                  ratio, report.ln_giant > 0 ? report.agd_giant / report.ln_giant : 0.0,
                  100.0 * report.giant_share_nodes);
    report.verdict = buf;
    return report;
}

std::vector<TopKRow> top_k(const MetricFrame& frame, const std::string& metric, std::size_t k,
                           std::optional<Gender> gender_filter) {
    if (k < 1)
        throw DataError("top_k needs k >= 1");
    std::vector<double> column = frame.column(metric); // validates the name
    std::vector<TopKRow> rows;
    for (std::size_t i = 0; i < frame.rows.size(); ++i) {
        if (gender_filter && frame.rows[i].gender != *gender_filter)
            continue;
        rows.push_back({frame.rows[i].node, frame.rows[i].degree, column[i],
                        frame.rows[i].affiliation});
    }
    std::sort(rows.begin(), rows.end(), [](const TopKRow& a, const TopKRow& b) {
        if (a.value != b.value)
            return a.value > b.value;
        return a.name < b.name;
    });
    if (rows.size() > k)
        rows.resize(k);
    return rows;
}

std::vector<ScatterPair> scatter_matrix_data(const MetricFrame& frame,
                                             const std::vector<std::string>& metrics) {
    if (metrics.size() < 2)
        throw DataError("scatter matrix needs at least 2 columns");
    std::vector<std::vector<double>> data;
    data.reserve(metrics.size());
    for (const auto& name : metrics)
        data.push_back(frame.column(name));

    auto constant = [](const std::vector<double>& col) {
        for (std::size_t i = 1; i < col.size(); ++i)
            if (col[i] != col[0])
                return false;
        return true;
    };

    std::vector<ScatterPair> pairs;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
        for (std::size_t j = i + 1; j < metrics.size(); ++j) {
            ScatterPair pair;
            pair.x_name = metrics[i];
            pair.y_name = metrics[j];
            pair.degenerate_x = constant(data[i]);
            pair.degenerate_y = constant(data[j]);
            for (std::size_t r = 0; r < data[i].size(); ++r)
                pair.points.emplace_back(data[i][r], data[j][r]);
            pairs.push_back(std::move(pair));
        }
    }
    return pairs;
}

} // namespace bibnet
