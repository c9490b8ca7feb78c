#ifndef BIBNET_MULTIGRAPH_HPP
#define BIBNET_MULTIGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bibnet/corpus.hpp"

namespace bibnet {

struct NodeInfo {
    std::string id; // canonical author name or JEL code
    Gender gender = Gender::Unknown;
    std::string affiliation;
    std::string group; // cluster label set by builders, free-form
};

/// Undirected multigraph: edges carry multiplicities, self-loops allowed.
/// All distance/centrality computations run on the deduplicated loop-free
/// simple view (neighbors()); multiplicities and loops are bookkeeping.
class Multigraph {
public:
    /// Adds a node (no-op on duplicate id) and returns its index.
    int add_node(const NodeInfo& info);
    int add_node(const std::string& id) { return add_node(NodeInfo{id, Gender::Unknown, "", ""}); }

    /// Accumulates multiplicity on the unordered pair {u,v}; u == v records a
    /// self-loop. Throws DataError for unknown indices.
    void add_edge(int u, int v, long multiplicity = 1);
    void add_edge_by_id(const std::string& u, const std::string& v, long multiplicity = 1);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const NodeInfo& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    NodeInfo& node(int i) { return nodes_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(const std::string& id) const;

    /// Sorted distinct non-loop neighbors: the simple-graph adjacency.
    const std::vector<int>& neighbors(int u) const { return adjacency_.at(static_cast<std::size_t>(u)); }
    int simple_degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    /// Edge multiset keyed by normalized (min,max) index pair, loops included.
    const std::map<std::pair<int, int>, long>& edges() const { return edges_; }
    long multiplicity(int u, int v) const;
    long loop_multiplicity(int u) const { return multiplicity(u, u); }

private:
    std::vector<NodeInfo> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;
    std::map<std::pair<int, int>, long> edges_;
};

struct EdgeCounts {
    long ue = 0;         // unique non-loop edges
    long ewd = 0;        // duplicate non-loop count (total non-loop - unique)
    long sl = 0;         // distinct self-loops
    long loop_total = 0; // self-loop multiplicity sum

    long te() const { return ue + ewd + loop_total; }
    long unique_with_loops() const { return ue + sl; }
};

EdgeCounts edge_counts(const Multigraph& graph);

/// Node partition into connected components, sorted by size descending with
/// ties broken by smallest member index; members sorted ascending.
struct ComponentDecomposition {
    std::vector<std::vector<int>> components;
};

ComponentDecomposition connected_components(const Multigraph& graph);

/// Geodesic statistics under the ordered-pair convention: the mean runs over
/// all finite ordered pairs including self-pairs (d = 0), which reproduces
/// AGD(K_n) = (n-1)/n. MGD is the largest finite distance.
struct GeodesicStats {
    int mgd = 0;
    double agd = 0.0;
    long long finite_pairs = 0; // ordered, self-pairs included
};

GeodesicStats geodesic_stats(const Multigraph& graph);

/// 2*UE / (g*(g-1)); nullopt when g < 2. Self-loops never count.
std::optional<double> density(const Multigraph& graph);

/// Whether a density/AGD value should render as "-": no non-loop edge.
bool has_nonloop_edge(const Multigraph& graph);

/// Keeps all edges (multiplicities and loops) with both endpoints inside;
/// node order of the original graph is preserved.
Multigraph induced_subgraph(const Multigraph& graph, const std::vector<int>& node_set);

/// BFS hop count on the simple view; nullopt when unreachable.
std::optional<int> distance(const Multigraph& graph, int a, int b);

/// Per-group induced-subgraph statistics; also used per component.
struct ClusterMetricsRow {
    std::string label;
    int n = 0;
    long ue = 0;
    long ewd = 0;
    long te = 0;
    long sl = 0;
    int cc = 0;   // connected components
    int svcc = 0; // single-vertex components
    int mvcc = 0; // nodes in the largest component
    long mecc = 0; // edge multiplicity (loops included) in the largest component
    int mgd = 0;
    std::optional<double> agd;     // nullopt when no non-loop edge
    std::optional<double> density; // nullopt when n < 2 or no non-loop edge
};

ClusterMetricsRow subgraph_metrics_row(const Multigraph& subgraph, const std::string& label);

/// One row per connected component, labeled G1..Gn in size order.
std::vector<ClusterMetricsRow> component_metrics_table(const Multigraph& graph);

} // namespace bibnet

#endif
