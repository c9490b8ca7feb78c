#include "bibnet/export.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "bibnet/csv.hpp"
#include "bibnet/error.hpp"
#include "bibnet/format.hpp"

namespace bibnet {

std::string graph_to_node_csv(const Multigraph& graph) {
    std::ostringstream out;
    out << "id,gender,affiliation,group\n";
    for (int u = 0; u < graph.node_count(); ++u) {
        const NodeInfo& info = graph.node(u);
        out << csv_join({info.id, to_string(info.gender), info.affiliation, info.group}) << '\n';
    }
    return out.str();
}

std::string graph_to_edge_csv(const Multigraph& graph) {
    std::ostringstream out;
    out << "u,v,multiplicity\n";
    for (const auto& [pair, mult] : graph.edges())
        out << csv_join({graph.node(pair.first).id, graph.node(pair.second).id,
                         std::to_string(mult)})
            << '\n';
    return out.str();
}

Multigraph graph_from_csv(const std::string& node_text, const std::string& edge_text) {
    Multigraph graph;
    {
        std::istringstream in(node_text);
        auto rows = read_csv(in);
        if (rows.empty() || rows[0].fields != std::vector<std::string>{"id", "gender",
                                                                       "affiliation", "group"})
            throw DataError("node file header must be id,gender,affiliation,group");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& row = rows[i];
            if (row.fields.size() != 4)
                throw DataError("node file line " + std::to_string(row.line) +
                                ": expected 4 fields");
            NodeInfo info;
            info.id = row.fields[0];
            auto gender = gender_from_string(row.fields[1]);
            if (!gender)
                throw DataError("node file line " + std::to_string(row.line) +
                                ": invalid gender " + row.fields[1]);
            info.gender = *gender;
            info.affiliation = row.fields[2];
            info.group = row.fields[3];
            if (graph.index_of(info.id))
                throw DataError("node file line " + std::to_string(row.line) +
                                ": duplicate node id " + info.id);
            graph.add_node(info);
        }
    }
    {
        std::istringstream in(edge_text);
        auto rows = read_csv(in);
        if (rows.empty() ||
            rows[0].fields != std::vector<std::string>{"u", "v", "multiplicity"})
            throw DataError("edge file header must be u,v,multiplicity");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& row = rows[i];
            if (row.fields.size() != 3)
                throw DataError("edge file line " + std::to_string(row.line) +
                                ": expected 3 fields");
            long mult = 0;
            try {
                mult = std::stol(row.fields[2]);
            } catch (const std::exception&) {
                throw DataError("edge file line " + std::to_string(row.line) +
                                ": invalid multiplicity");
            }
            if (mult < 1)
                throw DataError("edge file line " + std::to_string(row.line) +
                                ": multiplicity must be >= 1");
            graph.add_edge_by_id(row.fields[0], row.fields[1], mult);
        }
    }
    return graph;
}

void save_graph(const Multigraph& graph, const std::string& prefix) {
    std::ofstream nodes(prefix + ".nodes.csv", std::ios::binary);
    std::ofstream edges(prefix + ".edges.csv", std::ios::binary);
    if (!nodes || !edges)
        throw DataError("cannot write graph files at prefix: " + prefix);
    nodes << graph_to_node_csv(graph);
    edges << graph_to_edge_csv(graph);
}

Multigraph load_graph(const std::string& prefix) {
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw DataError("cannot open file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return graph_from_csv(slurp(prefix + ".nodes.csv"), slurp(prefix + ".edges.csv"));
}

namespace {

std::string xml_escape(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c; break;
        }
    }
    return out;
}

std::string dot_escape(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string graph_to_graphml(const Multigraph& graph, const MetricFrame* frame) {
    if (frame != nullptr && frame->rows.size() != static_cast<std::size_t>(graph.node_count()))
        throw DataError("metric frame does not match graph node count");

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"gender\" attr.type=\"string\"/>\n"
        << "  <key id=\"d1\" for=\"node\" attr.name=\"affiliation\" attr.type=\"string\"/>\n"
        << "  <key id=\"d2\" for=\"node\" attr.name=\"group\" attr.type=\"string\"/>\n"
        << "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
    std::vector<std::string> metric_keys;
    std::vector<std::vector<double>> metric_columns;
    if (frame != nullptr) {
        metric_keys = MetricFrame::core_metric_names();
        metric_keys.emplace_back("coreness");
        if (frame->has_rw) {
            metric_keys.emplace_back("rw_betweenness");
            metric_keys.emplace_back("rw_closeness");
        }
        for (std::size_t i = 0; i < metric_keys.size(); ++i) {
            out << "  <key id=\"m" << i << "\" for=\"node\" attr.name=\"" << metric_keys[i]
                << "\" attr.type=\"double\"/>\n";
            metric_columns.push_back(frame->column(metric_keys[i]));
        }
    }
    out << "  <graph edgedefault=\"undirected\">\n";
    for (int u = 0; u < graph.node_count(); ++u) {
        const NodeInfo& info = graph.node(u);
        out << "    <node id=\"" << xml_escape(info.id) << "\">\n"
            << "      <data key=\"d0\">" << to_string(info.gender) << "</data>\n"
            << "      <data key=\"d1\">" << xml_escape(info.affiliation) << "</data>\n"
            << "      <data key=\"d2\">" << xml_escape(info.group) << "</data>\n";
        for (std::size_t i = 0; i < metric_keys.size(); ++i)
            out << "      <data key=\"m" << i << "\">"
                << format_sig(metric_columns[i][static_cast<std::size_t>(u)]) << "</data>\n";
        out << "    </node>\n";
    }
    for (const auto& [pair, mult] : graph.edges())
        out << "    <edge source=\"" << xml_escape(graph.node(pair.first).id) << "\" target=\""
            << xml_escape(graph.node(pair.second).id) << "\"><data key=\"w\">" << mult
            << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string graph_to_dot(const Multigraph& graph) {
    std::ostringstream out;
    out << "graph bibnet {\n";
    for (int u = 0; u < graph.node_count(); ++u) {
        const NodeInfo& info = graph.node(u);
        out << "  \"" << dot_escape(info.id) << "\" [gender=\"" << to_string(info.gender)
            << "\", affiliation=\"" << dot_escape(info.affiliation) << "\", group=\""
            << dot_escape(info.group) << "\"];\n";
    }
    for (const auto& [pair, mult] : graph.edges())
        out << "  \"" << dot_escape(graph.node(pair.first).id) << "\" -- \""
            << dot_escape(graph.node(pair.second).id) << "\" [weight=" << mult << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace bibnet
