#ifndef BIBNET_STATS_HPP
#define BIBNET_STATS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bibnet/metrics.hpp"
#include "bibnet/multigraph.hpp"

namespace bibnet {

struct DegreeDistribution {
    std::map<int, long> histogram; // degree -> node count
    std::vector<std::pair<double, double>> loglog; // (ln degree, ln count), degree >= 1
};

DegreeDistribution degree_distribution(const Multigraph& graph);

/// Pearson matrix; cells touching a zero-variance column are nullopt and
/// render as "-". Symmetric with unit diagonal elsewhere.
struct CorrelationMatrix {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> r;
};

CorrelationMatrix correlation_matrix(const std::vector<std::string>& names,
                                     const std::vector<std::vector<double>>& data);
CorrelationMatrix correlation_matrix(const MetricFrame& frame,
                                     const std::vector<std::string>& metrics);
/// Correlations among cluster metric columns (N, UE, ..., D). Undefined
/// AGD/density cells enter as 0 so every class row participates.
CorrelationMatrix cluster_correlations(const std::vector<ClusterMetricsRow>& rows,
                                       bool include_sl);

struct GroupDeviationRow {
    std::string label;
    std::size_t size = 0;
    /// Relative deviation of the group mean from the overall mean, percent;
    /// nullopt when the overall mean is zero.
    std::vector<std::optional<double>> deviation_pct;
};

struct GroupDeviationTable {
    std::vector<std::string> metrics;
    std::vector<GroupDeviationRow> rows;
};

/// The overall mean is taken over the union of the listed classes only, so
/// excluded rows (e.g. unknown gender) never skew the baseline.
GroupDeviationTable group_mean_deviation(const MetricFrame& frame,
                                         const std::map<std::string, std::vector<std::size_t>>& classes,
                                         const std::vector<std::string>& metrics);

/// Convenience: classes by gender (female/male only, unknowns excluded).
std::map<std::string, std::vector<std::size_t>> gender_classes(const MetricFrame& frame);
/// Classes by affiliation over all labeled rows.
std::map<std::string, std::vector<std::size_t>> affiliation_classes(const MetricFrame& frame);

struct SmallWorldReport {
    int g = 0;
    double ln_g = 0.0;
    int giant_nodes = 0;
    double ln_giant = 0.0;
    double giant_share_nodes = 0.0;
    double giant_share_edges = 0.0; // total multiplicity share
    int mgd_giant = 0;
    double agd_giant = 0.0;
    std::string verdict; // informational only, never an assertion
};

SmallWorldReport small_world_report(const Multigraph& graph);

struct TopKRow {
    std::string name;
    int degree = 0;
    double value = 0.0;
    std::string affiliation;
};

/// Descending by metric, ties by ascending name; optional gender filter.
std::vector<TopKRow> top_k(const MetricFrame& frame, const std::string& metric,
                           std::size_t k, std::optional<Gender> gender_filter = std::nullopt);

struct ScatterPair {
    std::string x_name;
    std::string y_name;
    std::vector<std::pair<double, double>> points;
    bool degenerate_x = false; // constant column
    bool degenerate_y = false;
};

/// All unordered column pairs with per-pair point lists, for plotting.
std::vector<ScatterPair> scatter_matrix_data(const MetricFrame& frame,
                                             const std::vector<std::string>& metrics);

} // namespace bibnet

#endif
