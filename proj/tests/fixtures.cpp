#include "fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>

namespace bibnet::test {

namespace {

std::string padded(const char* stem, int i, int width = 4) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*d", stem, width, i);
    return buf;
}

} // namespace

Multigraph seventeen_component_fixture() {
    Multigraph graph;
    FixRng rng(20140907);

    // giant: locality-window spanning tree plus window-limited extras, so
    // the component stays stringy (high diameter) like the reference data
    const int giant_n = 850;
    const int window = 90;
    for (int i = 0; i < giant_n; ++i)
        graph.add_node(padded("a", i));
    std::set<std::pair<int, int>> used;
    for (int i = 1; i < giant_n; ++i) {
        int lo = std::max(0, i - window);
        int j = lo + static_cast<int>(rng.index(static_cast<std::size_t>(i - lo)));
        graph.add_edge(j, i);
        used.insert({j, i});
    }
    while (used.size() < 1442) {
        int i = 1 + static_cast<int>(rng.index(giant_n - 1));
        int lo = std::max(0, i - window);
        int j = lo + static_cast<int>(rng.index(static_cast<std::size_t>(i - lo)));
        if (j == i || used.count({j, i}))
            continue;
        graph.add_edge(j, i);
        used.insert({j, i});
    }
    // 167 duplicate multiplicities on existing giant edges
    std::vector<std::pair<int, int>> pool(used.begin(), used.end());
    for (int d = 0; d < 167; ++d) {
        const auto& e = pool[rng.index(pool.size())];
        graph.add_edge(e.first, e.second);
    }

    // one 5-clique
    std::vector<int> clique;
    for (int i = 0; i < 5; ++i)
        clique.push_back(graph.add_node(padded("k", i, 1)));
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            graph.add_edge(clique[i], clique[j]);

    // five triangles
    for (int t = 0; t < 5; ++t) {
        int a = graph.add_node(padded("t", t * 3, 2));
        int b = graph.add_node(padded("t", t * 3 + 1, 2));
        int c = graph.add_node(padded("t", t * 3 + 2, 2));
        graph.add_edge(a, b);
        graph.add_edge(b, c);
        graph.add_edge(a, c);
    }

    // ten dyads
    for (int d = 0; d < 10; ++d) {
        int a = graph.add_node(padded("d", d * 2, 2));
        int b = graph.add_node(padded("d", d * 2 + 1, 2));
        graph.add_edge(a, b);
    }
    return graph;
}

Multigraph jel_fixture() {
    Multigraph graph;
    // 109 code labels: A0..A9, B0..B9, ..., K8
    const std::string letters = "ABCDEFGHIJK";
    std::vector<int> idx;
    for (int i = 0; i < 109; ++i) {
        NodeInfo info;
        info.id = std::string(1, letters[static_cast<std::size_t>(i / 10)]) +
                  std::to_string(i % 10);
        info.group = info.id.substr(0, 1);
        idx.push_back(graph.add_node(info));
    }

    // backbone path 0..6 pins the diameter at 6: every other node hangs off
    // node 3, so no pair can be farther apart than the path endpoints
    for (int i = 0; i < 6; ++i)
        graph.add_edge(idx[i], idx[i + 1]);
    for (int i = 7; i < 109; ++i)
        graph.add_edge(idx[3], idx[i]);

    // 309 extra edges among the attached nodes: distances there stay <= 2
    FixRng rng(451);
    std::set<std::pair<int, int>> used;
    while (used.size() < 309) {
        int a = 7 + static_cast<int>(rng.index(102));
        int b = 7 + static_cast<int>(rng.index(102));
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        if (!used.insert({a, b}).second)
            continue;
        graph.add_edge(idx[a], idx[b]);
    }

    // 34 self-loops
    for (int i = 7; i < 41; ++i)
        graph.add_edge(idx[i], idx[i]);
    return graph;
}

Multigraph random_graph(FixRng& rng, int n, double p) {
    Multigraph graph;
    for (int i = 0; i < n; ++i)
        graph.add_node(padded("n", i, 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p)
                graph.add_edge(i, j);
    return graph;
}

Multigraph random_tree(FixRng& rng, int n) {
    Multigraph graph;
    for (int i = 0; i < n; ++i)
        graph.add_node(padded("n", i, 2));
    for (int i = 1; i < n; ++i)
        graph.add_edge(static_cast<int>(rng.index(static_cast<std::size_t>(i))), i);
    return graph;
}

Multigraph circulant_graph(int n, const std::vector<int>& offsets) {
    Multigraph graph;
    for (int i = 0; i < n; ++i)
        graph.add_node(padded("n", i, 2));
    for (int i = 0; i < n; ++i)
        for (int off : offsets) {
            int j = (i + off) % n;
            if (i < j)
                graph.add_edge(i, j);
            else if (j < i && graph.multiplicity(j, i) == 0)
                graph.add_edge(j, i);
        }
    return graph;
}

Multigraph complete_graph(int n) {
    Multigraph graph;
    for (int i = 0; i < n; ++i)
        graph.add_node(padded("n", i, 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            graph.add_edge(i, j);
    return graph;
}

Multigraph path_graph(int n) {
    Multigraph graph;
    for (int i = 0; i < n; ++i)
        graph.add_node(padded("n", i, 2));
    for (int i = 0; i + 1 < n; ++i)
        graph.add_edge(i, i + 1);
    return graph;
}

Multigraph cycle_graph(int n) {
    Multigraph graph = path_graph(n);
    if (n >= 3)
        graph.add_edge(0, n - 1);
    return graph;
}

Multigraph star_graph(int leaves) {
    Multigraph graph;
    graph.add_node("center");
    for (int i = 0; i < leaves; ++i)
        graph.add_node(padded("leaf", i, 2));
    for (int i = 1; i <= leaves; ++i)
        graph.add_edge(0, i);
    return graph;
}

} // namespace bibnet::test
