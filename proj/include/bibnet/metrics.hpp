#ifndef BIBNET_METRICS_HPP
#define BIBNET_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bibnet/multigraph.hpp"

namespace bibnet {

/// Degree = distinct non-loop neighbors; normalized by (g-1) when g >= 2.
struct DegreeResult {
    std::vector<int> degree;
    std::vector<double> normalized;
};

DegreeResult degree_centrality(const Multigraph& graph);

/// Unordered pair-sum betweenness: sigma(i) = sum over pairs {j,k}, both
/// distinct from i, of the geodesic fraction through i. The source tables'
/// raw form is 2*sigma and the normalized form 2*sigma/((g-1)(g-2)).
std::vector<double> betweenness(const Multigraph& graph);
std::vector<double> betweenness_normalized(const Multigraph& graph,
                                           const std::vector<double>& pair_sum);
inline double betweenness_paper_raw(double pair_sum) { return 2.0 * pair_sum; }

/// 1 / (sum of geodesic distances to reachable nodes); isolated nodes get 0.
std::vector<double> closeness(const Multigraph& graph);

struct EigenvectorResult {
    std::vector<double> values; // nonnegative, sums to 1 over all nodes
    int iterations = 0;
    bool converged = true;
    double residual = 0.0; // max-norm of A*v - lambda*v
    double eigenvalue = 0.0;
};

/// Dominant eigenvector of the simple adjacency, computed on the largest
/// component (other nodes get 0). Power iteration runs on A + (maxdeg+1)*I,
/// which shares eigenvectors with A and converges on bipartite components.
/// Throws DataError when the graph has no edge.
EigenvectorResult eigenvector(const Multigraph& graph, double tolerance = 1e-10,
                              int max_iterations = 100000);

/// Damped random-surfer fixed point on the simple graph, scaled so the values
/// sum to g (mean 1). Isolated nodes receive teleport-only mass.
std::vector<double> pagerank(const Multigraph& graph, double damping = 0.85,
                             double tolerance = 1e-10, int max_iterations = 1000000);

/// triangles(i) / C(deg(i), 2); nodes of degree < 2 get 0.
std::vector<double> clustering_coefficient(const Multigraph& graph);

/// Coreness by minimum-degree peeling on the simple view, plus the k-core
/// node sets split into connected components (the k-core definition used by
/// the source analysis requires connectedness).
struct KCoreResult {
    std::vector<int> coreness;
    int max_k = 0;
    /// cores[k-1] = connected components of the k-core, k = 1..max_k
    std::vector<std::vector<std::vector<int>>> cores;
};

KCoreResult kcore(const Multigraph& graph);

/// Current-flow (random-walk) betweenness: sum over source-sink pairs of the
/// net flow through each interior node, computed per component from the
/// Laplacian pseudo-inverse of the simple loop-free view. On trees this
/// equals the shortest-path pair-sum betweenness. Components smaller than 3
/// contribute zeros.
std::vector<double> rw_betweenness(const Multigraph& graph);

/// Reciprocal of the mean random-walk hitting time from the other nodes of
/// the component to the target; isolated nodes get 0.
std::vector<double> rw_closeness(const Multigraph& graph);

struct MetricRow {
    std::string node;
    Gender gender = Gender::Unknown;
    std::string affiliation;
    int degree = 0;
    double degree_norm = 0.0;
    double betweenness = 0.0; // pair-sum
    double betweenness_norm = 0.0;
    double closeness = 0.0;
    double eigenvector = 0.0;
    double pagerank = 0.0;
    double clustering = 0.0;
    int coreness = 0;
    std::optional<double> rw_betweenness;
    std::optional<double> rw_closeness;
};

struct MetricFrame {
    std::vector<MetricRow> rows;
    bool has_rw = false;

    static const std::vector<std::string>& core_metric_names();
    /// Column accessor by metric name; throws DataError on unknown name.
    std::vector<double> column(const std::string& metric) const;
};

/// Every metric on one immutable snapshot, one row per node in index order.
MetricFrame metric_frame(const Multigraph& graph, bool include_rw = false);

/// Tab-separated serialization, 6 significant digits, fixed column order.
std::string serialize_frame(const MetricFrame& frame);
MetricFrame parse_frame(const std::string& text);
MetricFrame load_frame(const std::string& path);
void save_frame(const MetricFrame& frame, const std::string& path);

} // namespace bibnet

#endif
