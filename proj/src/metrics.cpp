#include "bibnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>
#include <stack>

#include <Eigen/Dense>

#include "bibnet/error.hpp"
#include "bibnet/format.hpp"

namespace bibnet {

DegreeResult degree_centrality(const Multigraph& graph) {
    const int g = graph.node_count();
    DegreeResult result;
    result.degree.resize(static_cast<std::size_t>(g));
    result.normalized.resize(static_cast<std::size_t>(g), 0.0);
    for (int u = 0; u < g; ++u) {
        result.degree[static_cast<std::size_t>(u)] = graph.simple_degree(u);
        if (g >= 2)
            result.normalized[static_cast<std::size_t>(u)] =
                static_cast<double>(graph.simple_degree(u)) / static_cast<double>(g - 1);
    }
    return result;
}

std::vector<double> betweenness(const Multigraph& graph) {
    const int n = graph.node_count();
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);

    // Brandes accumulation: one BFS per source, dependencies pushed back
    // through the shortest-path DAG.
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
    std::vector<long long> sigma(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        for (int i = 0; i < n; ++i) {
            pred[static_cast<std::size_t>(i)].clear();
            sigma[static_cast<std::size_t>(i)] = 0;
            dist[static_cast<std::size_t>(i)] = -1;
            delta[static_cast<std::size_t>(i)] = 0.0;
        }
        order.clear();
        sigma[static_cast<std::size_t>(s)] = 1;
        dist[static_cast<std::size_t>(s)] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            order.push_back(v);
            for (int w : graph.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push(w);
                }
                if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
                    pred[static_cast<std::size_t>(w)].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : pred[static_cast<std::size_t>(w)])
                delta[static_cast<std::size_t>(v)] +=
                    (static_cast<double>(sigma[static_cast<std::size_t>(v)]) /
                     static_cast<double>(sigma[static_cast<std::size_t>(w)])) *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            if (w != s)
                bc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    // every unordered pair was visited from both endpoints
    for (double& x : bc)
        x /= 2.0;
    return bc;
}

std::vector<double> betweenness_normalized(const Multigraph& graph,
                                           const std::vector<double>& pair_sum) {
    const int g = graph.node_count();
    std::vector<double> out(pair_sum.size(), 0.0);
    if (g < 3)
        return out;
    const double denom = static_cast<double>(g - 1) * static_cast<double>(g - 2);
    for (std::size_t i = 0; i < pair_sum.size(); ++i)
        out[i] = 2.0 * pair_sum[i] / denom;
    return out;
}

std::vector<double> closeness(const Multigraph& graph) {
    const int n = graph.node_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push(s);
        long long sum = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            sum += dist[static_cast<std::size_t>(u)];
            for (int v : graph.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push(v);
                }
            }
        }
        if (sum > 0)
            out[static_cast<std::size_t>(s)] = 1.0 / static_cast<double>(sum);
    }
    return out;
}

EigenvectorResult eigenvector(const Multigraph& graph, double tolerance,
                              int max_iterations) {
    if (!has_nonloop_edge(graph))
        throw DataError("eigenvector centrality needs at least one edge");

    auto decomposition = connected_components(graph);
    const auto& giant = decomposition.components.front();
    const std::size_t m = giant.size();
    std::vector<int> local(static_cast<std::size_t>(graph.node_count()), -1);
    for (std::size_t i = 0; i < m; ++i)
        local[static_cast<std::size_t>(giant[i])] = static_cast<int>(i);

    int max_degree = 0;
    for (int u : giant)
        max_degree = std::max(max_degree, graph.simple_degree(u));
    const double shift = static_cast<double>(max_degree) + 1.0;

    std::vector<double> v(m, 1.0 / static_cast<double>(m));
    std::vector<double> av(m, 0.0); // A*v on the component
    auto apply_adjacency = [&](const std::vector<double>& x, std::vector<double>& y) {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (int w : graph.neighbors(giant[i]))
                y[i] += x[static_cast<std::size_t>(local[static_cast<std::size_t>(w)])];
    };

    EigenvectorResult result;
    std::vector<double> next(m);
    for (result.iterations = 1; result.iterations <= max_iterations; ++result.iterations) {
        apply_adjacency(v, av);
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            next[i] = av[i] + shift * v[i];
            norm += next[i]; // entries stay nonnegative
        }
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            next[i] /= norm;
            change += std::abs(next[i] - v[i]);
        }
        v.swap(next);

        if (change < tolerance) {
            apply_adjacency(v, av);
            double vdotav = 0.0, vdotv = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                vdotav += v[i] * av[i];
                vdotv += v[i] * v[i];
            }
            result.eigenvalue = vdotav / vdotv;
            result.residual = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                result.residual = std::max(result.residual,
                                           std::abs(av[i] - result.eigenvalue * v[i]));
            if (result.residual < 1e-9)
                break;
        }
        if (result.iterations == max_iterations)
            result.converged = false;
    }

    result.values.assign(static_cast<std::size_t>(graph.node_count()), 0.0);
    for (std::size_t i = 0; i < m; ++i)
        result.values[static_cast<std::size_t>(giant[i])] = v[i];
    return result;
}

std::vector<double> pagerank(const Multigraph& graph, double damping, double tolerance,
                             int max_iterations) {
    const int n = graph.node_count();
    std::vector<double> pr(static_cast<std::size_t>(n), 0.0);
    if (n == 0)
        return pr;
    std::fill(pr.begin(), pr.end(), 1.0 / static_cast<double>(n));
    std::vector<double> next(static_cast<std::size_t>(n));
    for (int it = 0; it < max_iterations; ++it) {
        double dangling = 0.0;
        for (int u = 0; u < n; ++u)
            if (graph.simple_degree(u) == 0)
                dangling += pr[static_cast<std::size_t>(u)];
        const double base = (1.0 - damping) / static_cast<double>(n) +
                            damping * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (int u = 0; u < n; ++u) {
            const int deg = graph.simple_degree(u);
            if (deg == 0)
                continue;
            const double share = damping * pr[static_cast<std::size_t>(u)] / deg;
            for (int v : graph.neighbors(u))
                next[static_cast<std::size_t>(v)] += share;
        }
        double change = 0.0;
        for (int i = 0; i < n; ++i)
            change += std::abs(next[static_cast<std::size_t>(i)] - pr[static_cast<std::size_t>(i)]);
        pr.swap(next);
        if (change < tolerance)
            break;
    }
    // mean-1 scale: popular nodes sit above 1
    for (double& x : pr)
        x *= static_cast<double>(n);
    return pr;
}

std::vector<double> clustering_coefficient(const Multigraph& graph) {
    const int n = graph.node_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = graph.neighbors(u);
        const std::size_t deg = nbrs.size();
        if (deg < 2)
            continue;
        long triangles = 0;
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = i + 1; j < deg; ++j) {
                const auto& ni = graph.neighbors(nbrs[i]);
                if (std::binary_search(ni.begin(), ni.end(), nbrs[j]))
                    ++triangles;
            }
        out[static_cast<std::size_t>(u)] =
            static_cast<double>(triangles) /
            (static_cast<double>(deg) * static_cast<double>(deg - 1) / 2.0);
    }
    return out;
}

KCoreResult kcore(const Multigraph& graph) {
    const int n = graph.node_count();
    KCoreResult result;
    result.coreness.assign(static_cast<std::size_t>(n), 0);

    // peeling: repeatedly remove the minimum-degree node
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int u = 0; u < n; ++u)
        degree[static_cast<std::size_t>(u)] = graph.simple_degree(u);

    int current = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[static_cast<std::size_t>(u)] &&
                (best == -1 || degree[static_cast<std::size_t>(u)] < degree[static_cast<std::size_t>(best)]))
                best = u;
        current = std::max(current, degree[static_cast<std::size_t>(best)]);
        result.coreness[static_cast<std::size_t>(best)] = current;
        removed[static_cast<std::size_t>(best)] = true;
        for (int v : graph.neighbors(best))
            if (!removed[static_cast<std::size_t>(v)])
                --degree[static_cast<std::size_t>(v)];
    }
    for (int c : result.coreness)
        result.max_k = std::max(result.max_k, c);

    for (int k = 1; k <= result.max_k; ++k) {
        std::vector<int> members;
        for (int u = 0; u < n; ++u)
            if (result.coreness[static_cast<std::size_t>(u)] >= k)
                members.push_back(u);
        Multigraph sub = induced_subgraph(graph, members);
        auto decomposition = connected_components(sub);
        std::vector<std::vector<int>> pieces;
        for (const auto& comp : decomposition.components) {
            std::vector<int> original;
            original.reserve(comp.size());
            for (int local : comp)
                original.push_back(*graph.index_of(sub.node(local).id));
            std::sort(original.begin(), original.end());
            pieces.push_back(std::move(original));
        }
        result.cores.push_back(std::move(pieces));
    }
    return result;
}

namespace {

// Laplacian pseudo-inverse of one connected component (simple loop-free
// view), via (L + J/m)^-1 - J/m.
Eigen::MatrixXd laplacian_pinv(const Multigraph& graph, const std::vector<int>& comp,
                               const std::vector<int>& local) {
    const auto m = static_cast<Eigen::Index>(comp.size());
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        int u = comp[i];
        lap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            static_cast<double>(graph.simple_degree(u));
        for (int w : graph.neighbors(u))
            lap(static_cast<Eigen::Index>(i),
                static_cast<Eigen::Index>(local[static_cast<std::size_t>(w)])) = -1.0;
    }
    const double inv_m = 1.0 / static_cast<double>(m);
    Eigen::MatrixXd shifted = lap.array() + inv_m;
    Eigen::MatrixXd inv = shifted.llt().solve(Eigen::MatrixXd::Identity(m, m));
    if (!inv.allFinite())
        throw DataError("laplacian solve failed on a connected component");
    return inv.array() - inv_m;
}

} // namespace

std::vector<double> rw_betweenness(const Multigraph& graph) {
    const int n = graph.node_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    auto decomposition = connected_components(graph);
    std::vector<int> local(static_cast<std::size_t>(n), -1);

    for (const auto& comp : decomposition.components) {
        const std::size_t m = comp.size();
        if (m < 3)
            continue;
        for (std::size_t i = 0; i < m; ++i)
            local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
        Eigen::MatrixXd pinv = laplacian_pinv(graph, comp, local);

        // unit current from s to t; node i carries half the absolute flow on
        // its incident edges; endpoints are excluded from their own pairs
        for (std::size_t s = 0; s < m; ++s) {
            for (std::size_t t = s + 1; t < m; ++t) {
                for (std::size_t i = 0; i < m; ++i) {
                    if (i == s || i == t)
                        continue;
                    const double vi = pinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(s)) -
                                      pinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t));
                    double flow = 0.0;
                    for (int w : graph.neighbors(comp[i])) {
                        const auto j = static_cast<std::size_t>(local[static_cast<std::size_t>(w)]);
                        const double vj =
                            pinv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(s)) -
                            pinv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t));
                        flow += std::abs(vi - vj);
                    }
                    out[static_cast<std::size_t>(comp[i])] += 0.5 * flow;
                }
            }
        }
    }
    return out;
}

std::vector<double> rw_closeness(const Multigraph& graph) {
    const int n = graph.node_count();
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    auto decomposition = connected_components(graph);
    std::vector<int> local(static_cast<std::size_t>(n), -1);

    for (const auto& comp : decomposition.components) {
        const std::size_t m = comp.size();
        if (m < 2)
            continue;
        for (std::size_t i = 0; i < m; ++i)
            local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
        Eigen::MatrixXd pinv = laplacian_pinv(graph, comp, local);

        Eigen::VectorXd degrees(static_cast<Eigen::Index>(m));
        double volume = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            degrees(static_cast<Eigen::Index>(i)) = static_cast<double>(graph.simple_degree(comp[i]));
            volume += degrees(static_cast<Eigen::Index>(i));
        }
        // hitting time H(j -> i) = (w_j - w_i) + vol*(P_ii - P_ij), w = P*d
        Eigen::VectorXd w = pinv * degrees;
        for (std::size_t i = 0; i < m; ++i) {
            double total = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                total += (w(static_cast<Eigen::Index>(j)) - w(static_cast<Eigen::Index>(i))) +
                         volume * (pinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) -
                                   pinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            }
            out[static_cast<std::size_t>(comp[i])] =
                static_cast<double>(m - 1) / total;
        }
    }
    return out;
}

const std::vector<std::string>& MetricFrame::core_metric_names() {
    static const std::vector<std::string> names = {
        "degree", "betweenness", "closeness", "eigenvector", "pagerank", "clustering"};
    return names;
}

std::vector<double> MetricFrame::column(const std::string& metric) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (metric == "degree") out.push_back(row.degree);
        else if (metric == "degree_norm") out.push_back(row.degree_norm);
        else if (metric == "betweenness") out.push_back(row.betweenness);
        else if (metric == "betweenness_norm") out.push_back(row.betweenness_norm);
        else if (metric == "closeness") out.push_back(row.closeness);
        else if (metric == "eigenvector") out.push_back(row.eigenvector);
        else if (metric == "pagerank") out.push_back(row.pagerank);
        else if (metric == "clustering") out.push_back(row.clustering);
        else if (metric == "coreness") out.push_back(row.coreness);
        else if (metric == "rw_betweenness") out.push_back(row.rw_betweenness.value_or(0.0));
        else if (metric == "rw_closeness") out.push_back(row.rw_closeness.value_or(0.0));
        else throw DataError("unknown metric: " + metric);
    }
    return out;
}

MetricFrame metric_frame(const Multigraph& graph, bool include_rw) {
    MetricFrame frame;
    frame.has_rw = include_rw;
    const int n = graph.node_count();
    if (n == 0)
        return frame;

    DegreeResult deg = degree_centrality(graph);
    std::vector<double> btw = betweenness(graph);
    std::vector<double> btw_norm = betweenness_normalized(graph, btw);
    std::vector<double> cls = closeness(graph);
    std::vector<double> eig(static_cast<std::size_t>(n), 0.0);
    if (has_nonloop_edge(graph))
        eig = eigenvector(graph).values;
    std::vector<double> pr = pagerank(graph);
    std::vector<double> clust = clustering_coefficient(graph);
    KCoreResult cores = kcore(graph);
    std::vector<double> rwb, rwc;
    if (include_rw) {
        rwb = rw_betweenness(graph);
        rwc = rw_closeness(graph);
    }

    frame.rows.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        auto i = static_cast<std::size_t>(u);
        MetricRow& row = frame.rows[i];
        const NodeInfo& info = graph.node(u);
        row.node = info.id;
        row.gender = info.gender;
        row.affiliation = info.affiliation;
        row.degree = deg.degree[i];
        row.degree_norm = deg.normalized[i];
        row.betweenness = btw[i];
        row.betweenness_norm = btw_norm[i];
        row.closeness = cls[i];
        row.eigenvector = eig[i];
        row.pagerank = pr[i];
        row.clustering = clust[i];
        row.coreness = cores.coreness[i];
        if (include_rw) {
            row.rw_betweenness = rwb[i];
            row.rw_closeness = rwc[i];
        }
    }
    return frame;
}

std::string serialize_frame(const MetricFrame& frame) {
    std::ostringstream out;
    out << "node\tgender\taffiliation\tdegree\tdegree_norm\tbetweenness\tbetweenness_norm"
        << "\tcloseness\teigenvector\tpagerank\tclustering\tcoreness";
    if (frame.has_rw)
        out << "\trw_betweenness\trw_closeness";
    out << '\n';
    for (const auto& row : frame.rows) {
        out << row.node << '\t' << to_string(row.gender) << '\t' << row.affiliation << '\t'
            << row.degree << '\t' << format_sig(row.degree_norm) << '\t'
            << format_sig(row.betweenness) << '\t' << format_sig(row.betweenness_norm) << '\t'
            << format_sig(row.closeness) << '\t' << format_sig(row.eigenvector) << '\t'
            << format_sig(row.pagerank) << '\t' << format_sig(row.clustering) << '\t'
            << row.coreness;
        if (frame.has_rw)
            out << '\t' << format_sig(row.rw_betweenness.value_or(0.0)) << '\t'
                << format_sig(row.rw_closeness.value_or(0.0));
        out << '\n';
    }
    return out.str();
}

MetricFrame parse_frame(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw DataError("empty metric frame");
    auto split = [](const std::string& s) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(s);
        while (std::getline(ss, field, '\t'))
            fields.push_back(field);
        return fields;
    };
    auto header = split(line);
    bool has_rw = !header.empty() && header.back() == "rw_closeness";
    const std::size_t expected = has_rw ? 14 : 12;
    if (header.size() != expected)
        throw DataError("unrecognized metric frame header");

    MetricFrame frame;
    frame.has_rw = has_rw;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto fields = split(line);
        if (fields.size() != expected)
            throw DataError("metric frame line " + std::to_string(lineno) +
                            ": wrong column count");
        MetricRow row;
        try {
            row.node = fields[0];
            auto gender = gender_from_string(fields[1]);
            if (!gender)
                throw DataError("bad gender");
            row.gender = *gender;
            row.affiliation = fields[2];
            row.degree = std::stoi(fields[3]);
            row.degree_norm = std::stod(fields[4]);
            row.betweenness = std::stod(fields[5]);
            row.betweenness_norm = std::stod(fields[6]);
            row.closeness = std::stod(fields[7]);
            row.eigenvector = std::stod(fields[8]);
            row.pagerank = std::stod(fields[9]);
            row.clustering = std::stod(fields[10]);
            row.coreness = std::stoi(fields[11]);
            if (has_rw) {
                row.rw_betweenness = std::stod(fields[12]);
                row.rw_closeness = std::stod(fields[13]);
            }
        } catch (const std::exception&) {
            throw DataError("metric frame line " + std::to_string(lineno) + ": malformed value");
        }
        frame.rows.push_back(std::move(row));
    }
    return frame;
}

MetricFrame load_frame(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_frame(ss.str());
}

void save_frame(const MetricFrame& frame, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write file: " + path);
    out << serialize_frame(frame);
}

} // namespace bibnet
