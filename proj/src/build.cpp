#include "bibnet/build.hpp"

#include <algorithm>
#include <set>

#include "bibnet/error.hpp"

namespace bibnet {

YearRange parse_year_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw DataError("year range must be LO:HI, got: " + text);
    YearRange range;
    try {
        range.lo = std::stoi(text.substr(0, colon));
        range.hi = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw DataError("invalid year range: " + text);
    }
    if (range.lo > range.hi)
        throw DataError("year range is inverted: " + text);
    return range;
}

Multigraph build_coauthor(const Corpus& corpus, std::optional<YearRange> window,
                          std::optional<Gender> gender_filter, bool include_singles) {
    auto in_window = [&](const PaperEntry& e) { return !window || window->contains(e.year); };
    auto author_gender = [&](const std::string& name) {
        const AuthorRecord* rec = corpus.find_author(name);
        return rec ? rec->gender : Gender::Unknown;
    };
    auto keep_author = [&](const std::string& name) {
        return !gender_filter || author_gender(name) == *gender_filter;
    };

    // collect the node set first so indices follow sorted name order
    std::set<std::string> node_names;
    for (const auto& e : corpus.entries) {
        if (!in_window(e))
            continue;
        if (e.coauthored() || include_singles)
            for (const auto& a : e.authors)
                if (keep_author(a))
                    node_names.insert(a);
    }

    Multigraph graph;
    for (const auto& name : node_names) {
        const AuthorRecord* rec = corpus.find_author(name);
        NodeInfo info;
        info.id = name;
        if (rec != nullptr) {
            info.gender = rec->gender;
            info.affiliation = rec->affiliation;
        }
        graph.add_node(info);
    }

    for (const auto& e : corpus.entries) {
        if (!in_window(e) || !e.coauthored())
            continue;
        std::vector<int> members;
        for (const auto& a : e.authors)
            if (keep_author(a))
                if (auto idx = graph.index_of(a))
                    members.push_back(*idx);
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                graph.add_edge(members[i], members[j]);
    }
    return graph;
}

std::vector<Multigraph> window_series(const Corpus& corpus,
                                      const std::vector<YearRange>& windows) {
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (windows[i].lo > windows[i].hi)
            throw DataError("window range is inverted");
        for (std::size_t j = i + 1; j < windows.size(); ++j) {
            bool overlap = windows[i].lo <= windows[j].hi && windows[j].lo <= windows[i].hi;
            if (overlap)
                throw DataError("windows overlap");
        }
    }
    std::vector<Multigraph> series;
    series.reserve(windows.size());
    for (const auto& w : windows)
        series.push_back(build_coauthor(corpus, w));
    return series;
}

Multigraph build_jel(const Corpus& corpus) {
    std::set<std::string> codes;
    for (const auto& e : corpus.entries)
        for (const auto& code : e.jel)
            codes.insert(code);

    Multigraph graph;
    for (const auto& code : codes) {
        NodeInfo info;
        info.id = code;
        info.group = code.substr(0, 1);
        graph.add_node(info);
    }
    for (const auto& e : corpus.entries) {
        if (e.jel.size() == 2 && e.jel[0] != e.jel[1])
            graph.add_edge_by_id(e.jel[0], e.jel[1]);
        else // single code or identical pair: self-loop
            graph.add_edge_by_id(e.jel[0], e.jel[0]);
    }
    return graph;
}

std::optional<PartitionKey> partition_key_from_string(const std::string& label) {
    if (label == "affiliation") return PartitionKey::Affiliation;
    if (label == "jel-letter" || label == "jel_first_letter") return PartitionKey::JelFirstLetter;
    if (label == "gender") return PartitionKey::GenderKey;
    return std::nullopt;
}

Partition group_partition(const Multigraph& graph, PartitionKey key) {
    Partition partition;
    partition.label_of.resize(static_cast<std::size_t>(graph.node_count()));
    for (int u = 0; u < graph.node_count(); ++u) {
        const NodeInfo& info = graph.node(u);
        std::string label;
        switch (key) {
        case PartitionKey::Affiliation:
            label = info.affiliation;
            break;
        case PartitionKey::JelFirstLetter:
            label = info.id.empty() ? "" : info.id.substr(0, 1);
            break;
        case PartitionKey::GenderKey:
            label = info.gender == Gender::Unknown ? "" : to_string(info.gender);
            break;
        }
        if (label.empty() || label == unclassified_label())
            label = unclassified_label();
        partition.label_of[static_cast<std::size_t>(u)] = label;
        partition.classes[label].push_back(u);
    }
    return partition;
}

std::vector<ClusterMetricsRow> cluster_metrics(const Multigraph& graph,
                                               const Partition& partition) {
    std::vector<ClusterMetricsRow> rows;
    for (const auto& [label, members] : partition.classes) {
        if (members.empty())
            throw DataError("empty partition class: " + label);
        Multigraph sub = induced_subgraph(graph, members);
        rows.push_back(subgraph_metrics_row(sub, label));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ClusterMetricsRow& a, const ClusterMetricsRow& b) {
                         if (a.n != b.n)
                             return a.n > b.n;
                         return a.label < b.label;
                     });
    return rows;
}

IntraExtra intra_extra_edges(const Multigraph& graph, const Partition& partition) {
    IntraExtra result;
    std::map<std::string, std::pair<long, long>> groups; // label -> (intra, extra)
    for (const auto& label : partition.label_of)
        groups.try_emplace(label, 0, 0);

    for (const auto& [pair, mult] : graph.edges()) {
        const std::string& ga = partition.label_of[static_cast<std::size_t>(pair.first)];
        const std::string& gb = partition.label_of[static_cast<std::size_t>(pair.second)];
        auto key = ga <= gb ? std::make_pair(ga, gb) : std::make_pair(gb, ga);
        result.pair_matrix[key] += mult;
        if (ga == gb) {
            groups[ga].first += mult;
        } else {
            groups[ga].second += mult;
            groups[gb].second += mult;
        }
    }
    for (const auto& [label, counts] : groups)
        result.per_group.push_back({label, counts.first, counts.second});
    return result;
}

} // namespace bibnet
