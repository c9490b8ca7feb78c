#ifndef BIBNET_TESTS_FIXTURES_HPP
#define BIBNET_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bibnet/multigraph.hpp"

namespace bibnet::test {

/// Deterministic RNG for fixtures; kept separate from the library's
/// generator so test inputs never depend on implementation details.
class FixRng {
public:
    explicit FixRng(std::uint64_t seed) : eng_(seed) {}
    double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(next_double() * static_cast<double>(n));
    }

private:
    std::mt19937_64 eng_;
};

/// 17-component graph with the reference bookkeeping shape: an 850-node
/// giant with 1442 unique + 167 duplicate edges, one 5-clique, five
/// triangles and ten dyads (890 nodes, 1477 unique / 1644 total edges).
Multigraph seventeen_component_fixture();

/// 109-code thematic graph: 417 unique non-loop edges, 34 self-loops,
/// a single component with diameter exactly 6.
Multigraph jel_fixture();

/// G(n, p) with nodes "n00".."nXX"; optional loop/duplicate sprinkling.
Multigraph random_graph(FixRng& rng, int n, double p);

/// Uniform random labelled tree (random parent among previous nodes).
Multigraph random_tree(FixRng& rng, int n);

/// Circulant graph on n nodes with the given offsets: connected and
/// 2*|offsets|-regular when every offset < n/2.
Multigraph circulant_graph(int n, const std::vector<int>& offsets);

Multigraph complete_graph(int n);
Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph star_graph(int leaves);

} // namespace bibnet::test

#endif
