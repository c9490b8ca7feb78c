#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bibnet/build.hpp"
#include "bibnet/error.hpp"
#include "bibnet/generator.hpp"
#include "bibnet/stats.hpp"
#include "fixtures.hpp"

using namespace bibnet;
using namespace bibnet::test;

namespace {

MetricFrame tiny_frame(const std::vector<std::tuple<std::string, Gender, double, double>>& rows) {
    MetricFrame frame;
    for (const auto& [name, gender, degree, pr] : rows) {
        MetricRow row;
        row.node = name;
        row.gender = gender;
        row.degree = static_cast<int>(degree);
        row.degree_norm = degree;
        row.pagerank = pr;
        frame.rows.push_back(row);
    }
    return frame;
}

} // namespace

TEST_CASE("degree distribution histograms") {
    SUBCASE("K4") {
        auto dist = degree_distribution(complete_graph(4));
        REQUIRE(dist.histogram.size() == 1);
        CHECK(dist.histogram.at(3) == 4);
    }
    SUBCASE("star S5") {
        auto dist = degree_distribution(star_graph(5));
        CHECK(dist.histogram.at(1) == 5);
        CHECK(dist.histogram.at(5) == 1);
        REQUIRE(dist.loglog.size() == 2);
        CHECK(dist.loglog[0].first == doctest::Approx(0.0)); // ln 1
    }
    SUBCASE("totals always match the node count") {
        FixRng rng(2);
        for (int rep = 0; rep < 10; ++rep) {
            Multigraph g = random_graph(rng, 15, 0.3);
            long total = 0;
            for (const auto& [degree, count] : degree_distribution(g).histogram)
                total += count;
            CHECK(total == g.node_count());
        }
    }
    SUBCASE("zero-degree cells never reach the log-log points") {
        Multigraph g = complete_graph(2);
        g.add_node("alone");
        auto dist = degree_distribution(g);
        CHECK(dist.histogram.count(0) == 1);
        REQUIRE(dist.loglog.size() == 1);
        CHECK(dist.loglog[0].first == doctest::Approx(0.0));
    }
    SUBCASE("preferential fixture grows a heavy hub") {
        GeneratorConfig config;
        config.seed = 606;
        config.n_papers = 1500;
        config.n_authors = 400;
        config.attach_bias = 1.0;
        Multigraph g = build_coauthor(generate_corpus(config));
        auto dist = degree_distribution(g);
        std::vector<int> degrees;
        for (int u = 0; u < g.node_count(); ++u)
            degrees.push_back(g.simple_degree(u));
        std::sort(degrees.begin(), degrees.end());
        int median = degrees[degrees.size() / 2];
        CHECK(degrees.back() >= 3 * std::max(1, median));
        CHECK(dist.histogram.rbegin()->first == degrees.back());
    }
}

TEST_CASE("pearson correlations on crafted columns") {
    // closed forms worked by hand: y = 2x gives 1, z has zero covariance with x
    std::vector<std::string> names = {"x", "y", "z"};
    std::vector<std::vector<double>> data = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto matrix = correlation_matrix(names, data);
    CHECK(matrix.r[0][1] == doctest::Approx(1.0));
    CHECK(matrix.r[0][2] == doctest::Approx(0.0));
    CHECK(matrix.r[0][0] == doctest::Approx(1.0));

    std::vector<std::vector<double>> anti = {{1, 2, 3}, {-1, -2, -3}};
    auto m2 = correlation_matrix({"x", "negx"}, anti);
    CHECK(m2.r[0][1] == doctest::Approx(-1.0));
}

TEST_CASE("correlation matrices are symmetric with unit diagonal in [-1,1]") {
    GeneratorConfig config;
    config.seed = 51;
    config.n_papers = 300;
    config.n_authors = 90;
    Multigraph g = build_coauthor(generate_corpus(config));
    MetricFrame frame = metric_frame(g, true);
    auto cols = MetricFrame::core_metric_names();
    cols.push_back("rw_betweenness");
    cols.push_back("rw_closeness");
    auto matrix = correlation_matrix(frame, cols);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        REQUIRE(matrix.r[i][i].has_value());
        CHECK(*matrix.r[i][i] == doctest::Approx(1.0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            REQUIRE(matrix.r[i][j].has_value());
            CHECK(*matrix.r[i][j] == doctest::Approx(*matrix.r[j][i]));
            CHECK(*matrix.r[i][j] >= -1.0 - 1e-12);
            CHECK(*matrix.r[i][j] <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("zero-variance columns turn into undefined markers") {
    std::vector<std::vector<double>> data = {{1, 2, 3}, {5, 5, 5}};
    auto matrix = correlation_matrix({"x", "const"}, data);
    CHECK(!matrix.r[0][1].has_value());
    CHECK(!matrix.r[1][1].has_value());
    CHECK(matrix.r[0][0] == doctest::Approx(1.0));
}

TEST_CASE("cluster correlations run over the cluster metric columns") {
    Multigraph g = jel_fixture();
    auto rows = cluster_metrics(g, group_partition(g, PartitionKey::JelFirstLetter));
    auto matrix = cluster_correlations(rows, true);
    CHECK(matrix.columns.size() == 12); // N..D including SL
    REQUIRE(matrix.r[0][0].has_value());
    CHECK(*matrix.r[0][0] == doctest::Approx(1.0));
}

TEST_CASE("group mean deviations") {
    SUBCASE("equal-mean groups deviate by zero") {
        MetricFrame frame = tiny_frame({{"a", Gender::Female, 4, 1},
                                        {"b", Gender::Female, 6, 1},
                                        {"c", Gender::Male, 5, 1},
                                        {"d", Gender::Male, 5, 1}});
        auto table = group_mean_deviation(frame, gender_classes(frame), {"degree"});
        for (const auto& row : table.rows)
            CHECK(*row.deviation_pct[0] == doctest::Approx(0.0));
    }
    SUBCASE("single group deviates by zero by construction") {
        MetricFrame frame = tiny_frame({{"a", Gender::Male, 4, 1}, {"b", Gender::Male, 8, 1}});
        auto table = group_mean_deviation(frame, gender_classes(frame), {"degree"});
        REQUIRE(table.rows.size() == 1);
        CHECK(*table.rows[0].deviation_pct[0] == doctest::Approx(0.0));
    }
    SUBCASE("zero overall mean yields a marker") {
        MetricFrame frame = tiny_frame({{"a", Gender::Male, 0, 1}, {"b", Gender::Female, 0, 1}});
        auto table = group_mean_deviation(frame, gender_classes(frame), {"degree"});
        CHECK(!table.rows[0].deviation_pct[0].has_value());
    }
    SUBCASE("weighted identity holds on generated data") {
        GeneratorConfig config;
        config.seed = 4242;
        config.n_papers = 400;
        config.n_authors = 130;
        Multigraph g = build_coauthor(generate_corpus(config));
        MetricFrame frame = metric_frame(g);
        auto classes = gender_classes(frame);
        auto metrics = MetricFrame::core_metric_names();
        auto table = group_mean_deviation(frame, classes, metrics);

        std::size_t total = 0;
        for (const auto& row : table.rows)
            total += row.size;
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            double identity = 0;
            for (const auto& row : table.rows) {
                REQUIRE(row.deviation_pct[m].has_value());
                double share = static_cast<double>(row.size) / static_cast<double>(total);
                identity += share * (1.0 + *row.deviation_pct[m] / 100.0);
            }
            CHECK(identity == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("published gender deviations satisfy the identity within rounding") {
        // shares 566/279 with +3.1%/-6.4% degree deviations
        double share_m = 566.0 / 845.0, share_f = 279.0 / 845.0;
        double identity = share_m * 1.031 + share_f * 0.936;
        CHECK(std::abs(identity - 1.0) < 1e-3);
    }
}

TEST_CASE("small world report") {
    SUBCASE("connected graph holds every node") {
        auto report = small_world_report(complete_graph(5));
        CHECK(report.giant_share_nodes == doctest::Approx(1.0));
        CHECK(report.giant_share_edges == doctest::Approx(1.0));
        CHECK(report.mgd_giant == 1);
    }
    SUBCASE("two equal components split the shares") {
        Multigraph g = complete_graph(3);
        int a = g.add_node("x0");
        int b = g.add_node("x1");
        int c = g.add_node("x2");
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(a, c);
        auto report = small_world_report(g);
        CHECK(report.giant_share_nodes == doctest::Approx(0.5));
    }
    SUBCASE("reference-shaped fixture reports the published shares") {
        auto report = small_world_report(seventeen_component_fixture());
        CHECK(report.g == 890);
        CHECK(report.giant_nodes == 850);
        CHECK(report.giant_share_nodes == doctest::Approx(0.955).epsilon(0.005));
        CHECK(report.giant_share_edges == doctest::Approx(0.979).epsilon(0.005));
        CHECK(report.ln_g == doctest::Approx(std::log(890.0)));
        CHECK(report.ln_giant == doctest::Approx(std::log(850.0)));
        // this fixture shape keeps the giant's mean distance above ln(g);
        // the report itself never passes judgement
        CHECK(report.agd_giant > report.ln_g);
        CHECK(!report.verdict.empty());
    }
}

TEST_CASE("top_k ranking") {
    MetricFrame frame = tiny_frame({{"carol", Gender::Female, 5, 2.0},
                                    {"alice", Gender::Female, 5, 3.0},
                                    {"bob", Gender::Male, 5, 3.0},
                                    {"dave", Gender::Male, 2, 1.0}});
    SUBCASE("k larger than the population returns everything") {
        auto rows = top_k(frame, "pagerank", 99);
        CHECK(rows.size() == 4);
    }
    SUBCASE("ties break by ascending name") {
        auto rows = top_k(frame, "pagerank", 2);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].name == "alice");
        CHECK(rows[1].name == "bob");
    }
    SUBCASE("gender filter keeps matching rows only") {
        auto rows = top_k(frame, "pagerank", 10, Gender::Female);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].name == "alice");
        CHECK(rows[1].name == "carol");
    }
    SUBCASE("stable under row permutation") {
        MetricFrame shuffled;
        shuffled.rows = {frame.rows[3], frame.rows[1], frame.rows[0], frame.rows[2]};
        auto a = top_k(frame, "pagerank", 4);
        auto b = top_k(shuffled, "pagerank", 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i].name == b[i].name);
    }
    SUBCASE("unknown metric is an error") {
        CHECK_THROWS_AS(static_cast<void>(top_k(frame, "prestige", 3)), DataError);
        CHECK_THROWS_AS(static_cast<void>(top_k(frame, "degree", 0)), DataError);
    }
}

TEST_CASE("scatter matrix data covers every unordered pair") {
    GeneratorConfig config;
    config.seed = 7;
    config.n_papers = 120;
    config.n_authors = 50;
    Multigraph g = build_coauthor(generate_corpus(config));
    MetricFrame frame = metric_frame(g);

    SUBCASE("two columns give one pair") {
        auto pairs = scatter_matrix_data(frame, {"degree", "pagerank"});
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].points.size() == frame.rows.size());
    }
    SUBCASE("five columns give ten pairs") {
        auto pairs = scatter_matrix_data(
            frame, {"degree", "betweenness", "closeness", "eigenvector", "pagerank"});
        CHECK(pairs.size() == 10);
    }
    SUBCASE("constant columns carry the degenerate flag") {
        MetricFrame flat = tiny_frame({{"a", Gender::Male, 1, 7}, {"b", Gender::Male, 2, 7}});
        auto pairs = scatter_matrix_data(flat, {"degree", "pagerank"});
        REQUIRE(pairs.size() == 1);
        CHECK(!pairs[0].degenerate_x);
        CHECK(pairs[0].degenerate_y);
    }
    SUBCASE("fewer than two columns is an error") {
        CHECK_THROWS_AS(static_cast<void>(scatter_matrix_data(frame, {"degree"})), DataError);
    }
}
