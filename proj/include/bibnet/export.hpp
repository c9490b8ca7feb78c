#ifndef BIBNET_EXPORT_HPP
#define BIBNET_EXPORT_HPP

#include <optional>
#include <string>

#include "bibnet/metrics.hpp"
#include "bibnet/multigraph.hpp"

namespace bibnet {

/// Native exchange pair: <prefix>.edges.csv (u,v,multiplicity) and
/// <prefix>.nodes.csv (id,gender,affiliation,group). Node order and the
/// sorted edge order make save->load->save byte-stable.
void save_graph(const Multigraph& graph, const std::string& prefix);
Multigraph load_graph(const std::string& prefix);

std::string graph_to_edge_csv(const Multigraph& graph);
std::string graph_to_node_csv(const Multigraph& graph);
Multigraph graph_from_csv(const std::string& node_text, const std::string& edge_text);

/// GraphML with node attribute keys and multiplicity as edge weight; when a
/// frame is given its metric columns ride along as node attributes.
std::string graph_to_graphml(const Multigraph& graph,
                             const MetricFrame* frame = nullptr);

/// Graphviz DOT, undirected; multiplicity as weight, loops preserved.
std::string graph_to_dot(const Multigraph& graph);

} // namespace bibnet

#endif
