#include "bibnet/multigraph.hpp"

#include <algorithm>
#include <queue>

#include "bibnet/error.hpp"

namespace bibnet {

int Multigraph::add_node(const NodeInfo& info) {
    auto it = index_.find(info.id);
    if (it != index_.end())
        return it->second;
    int idx = static_cast<int>(nodes_.size());
    nodes_.push_back(info);
    adjacency_.emplace_back();
    index_.emplace(info.id, idx);
    return idx;
}

void Multigraph::add_edge(int u, int v, long multiplicity) {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
        throw DataError("edge endpoint out of range");
    if (multiplicity < 1)
        throw DataError("edge multiplicity must be >= 1");
    if (u > v)
        std::swap(u, v);
    long& m = edges_[{u, v}];
    bool fresh = (m == 0);
    m += multiplicity;
    if (u != v && fresh) {
        auto& au = adjacency_[static_cast<std::size_t>(u)];
        auto& av = adjacency_[static_cast<std::size_t>(v)];
        au.insert(std::lower_bound(au.begin(), au.end(), v), v);
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    }
}

void Multigraph::add_edge_by_id(const std::string& u, const std::string& v, long multiplicity) {
    auto ui = index_of(u);
    auto vi = index_of(v);
    if (!ui || !vi)
        throw DataError("unknown edge endpoint: " + (ui ? v : u));
    add_edge(*ui, *vi, multiplicity);
}

std::optional<int> Multigraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

long Multigraph::multiplicity(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

EdgeCounts edge_counts(const Multigraph& graph) {
    EdgeCounts counts;
    long nonloop_total = 0;
    for (const auto& [pair, mult] : graph.edges()) {
        if (pair.first == pair.second) {
            ++counts.sl;
            counts.loop_total += mult;
        } else {
            ++counts.ue;
            nonloop_total += mult;
        }
    }
    counts.ewd = nonloop_total - counts.ue;
    return counts;
}

ComponentDecomposition connected_components(const Multigraph& graph) {
    const int n = graph.node_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> components;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1)
            continue;
        int comp = static_cast<int>(components.size());
        components.emplace_back();
        std::queue<int> queue;
        queue.push(s);
        label[static_cast<std::size_t>(s)] = comp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            components[static_cast<std::size_t>(comp)].push_back(u);
            for (int v : graph.neighbors(u)) {
                if (label[static_cast<std::size_t>(v)] == -1) {
                    label[static_cast<std::size_t>(v)] = comp;
                    queue.push(v);
                }
            }
        }
    }
    for (auto& comp : components)
        std::sort(comp.begin(), comp.end());
    // size descending, ties by smallest member id
    std::stable_sort(components.begin(), components.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size())
                             return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return ComponentDecomposition{std::move(components)};
}

namespace {

// single-source BFS distances on the simple view; -1 means unreachable
std::vector<int> bfs_distances(const Multigraph& graph, int source) {
    std::vector<int> dist(static_cast<std::size_t>(graph.node_count()), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : graph.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

} // namespace

GeodesicStats geodesic_stats(const Multigraph& graph) {
    GeodesicStats stats;
    long long sum = 0;
    for (int s = 0; s < graph.node_count(); ++s) {
        auto dist = bfs_distances(graph, s);
        for (int d : dist) {
            if (d < 0)
                continue;
            sum += d;
            ++stats.finite_pairs;
            if (d > stats.mgd)
                stats.mgd = d;
        }
    }
    if (stats.finite_pairs > 0)
        stats.agd = static_cast<double>(sum) / static_cast<double>(stats.finite_pairs);
    return stats;
}

std::optional<double> density(const Multigraph& graph) {
    const long g = graph.node_count();
    if (g < 2)
        return std::nullopt;
    return 2.0 * static_cast<double>(edge_counts(graph).ue) /
           (static_cast<double>(g) * static_cast<double>(g - 1));
}

bool has_nonloop_edge(const Multigraph& graph) {
    for (const auto& [pair, mult] : graph.edges())
        if (pair.first != pair.second)
            return true;
    return false;
}

Multigraph induced_subgraph(const Multigraph& graph, const std::vector<int>& node_set) {
    std::vector<bool> keep(static_cast<std::size_t>(graph.node_count()), false);
    for (int u : node_set) {
        if (u < 0 || u >= graph.node_count())
            throw DataError("induced_subgraph: unknown node index");
        keep[static_cast<std::size_t>(u)] = true;
    }
    Multigraph sub;
    std::vector<int> remap(static_cast<std::size_t>(graph.node_count()), -1);
    for (int u = 0; u < graph.node_count(); ++u)
        if (keep[static_cast<std::size_t>(u)])
            remap[static_cast<std::size_t>(u)] = sub.add_node(graph.node(u));
    for (const auto& [pair, mult] : graph.edges()) {
        if (keep[static_cast<std::size_t>(pair.first)] && keep[static_cast<std::size_t>(pair.second)])
            sub.add_edge(remap[static_cast<std::size_t>(pair.first)],
                         remap[static_cast<std::size_t>(pair.second)], mult);
    }
    return sub;
}

std::optional<int> distance(const Multigraph& graph, int a, int b) {
    if (a < 0 || b < 0 || a >= graph.node_count() || b >= graph.node_count())
        throw DataError("distance: unknown node index");
    auto dist = bfs_distances(graph, a);
    int d = dist[static_cast<std::size_t>(b)];
    if (d < 0)
        return std::nullopt;
    return d;
}

ClusterMetricsRow subgraph_metrics_row(const Multigraph& subgraph, const std::string& label) {
    ClusterMetricsRow row;
    row.label = label;
    row.n = subgraph.node_count();
    EdgeCounts counts = edge_counts(subgraph);
    row.ue = counts.ue;
    row.ewd = counts.ewd;
    row.te = counts.te();
    row.sl = counts.sl;

    auto decomposition = connected_components(subgraph);
    row.cc = static_cast<int>(decomposition.components.size());
    for (const auto& comp : decomposition.components)
        if (comp.size() == 1)
            ++row.svcc;
    if (!decomposition.components.empty()) {
        const auto& giant = decomposition.components.front();
        row.mvcc = static_cast<int>(giant.size());
        Multigraph giant_graph = induced_subgraph(subgraph, giant);
        row.mecc = edge_counts(giant_graph).te();
    }

    GeodesicStats geo = geodesic_stats(subgraph);
    row.mgd = geo.mgd;
    bool any_edge = has_nonloop_edge(subgraph);
    if (any_edge)
        row.agd = geo.agd;
    if (any_edge && row.n >= 2)
        row.density = density(subgraph);
    return row;
}

std::vector<ClusterMetricsRow> component_metrics_table(const Multigraph& graph) {
    std::vector<ClusterMetricsRow> rows;
    auto decomposition = connected_components(graph);
    for (std::size_t i = 0; i < decomposition.components.size(); ++i) {
        Multigraph sub = induced_subgraph(graph, decomposition.components[i]);
        rows.push_back(subgraph_metrics_row(sub, "G" + std::to_string(i + 1)));
    }
    return rows;
}

} // namespace bibnet
