#ifndef BIBNET_BUILD_HPP
#define BIBNET_BUILD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bibnet/corpus.hpp"
#include "bibnet/multigraph.hpp"

namespace bibnet {

struct YearRange {
    int lo = 0;
    int hi = 0; // inclusive

    bool contains(int year) const { return year >= lo && year <= hi; }
};

/// "1990:1999" -> range; throws DataError on malformed/inverted input.
YearRange parse_year_range(const std::string& text);

/// Coauthorship network: a k-author paper contributes all k*(k-1)/2 pairs,
/// multiplicity accumulating across papers. Only authors with at least one
/// coauthored paper in the window become nodes unless include_singles is set,
/// which adds pure single-authors as isolates. gender_filter keeps only nodes
/// of that gender and the edges among them.
Multigraph build_coauthor(const Corpus& corpus,
                          std::optional<YearRange> window = std::nullopt,
                          std::optional<Gender> gender_filter = std::nullopt,
                          bool include_singles = false);

/// One coauthor graph per window; windows must not overlap.
std::vector<Multigraph> window_series(const Corpus& corpus,
                                      const std::vector<YearRange>& windows);

/// Thematic network over JEL codes: a paper tagged {x,y} with x != y adds
/// edge (x,y); a single code or an identical pair adds a self-loop.
Multigraph build_jel(const Corpus& corpus);

enum class PartitionKey { Affiliation, JelFirstLetter, GenderKey };

std::optional<PartitionKey> partition_key_from_string(const std::string& label);

/// Total partition of the node set; nodes without the attribute fall into
/// "unclassified". label_of has one entry per node index.
struct Partition {
    std::vector<std::string> label_of;
    std::map<std::string, std::vector<int>> classes;
};

Partition group_partition(const Multigraph& graph, PartitionKey key);

/// Induced-subgraph statistics per class, sorted by N descending (ties by
/// label). Throws DataError on an empty class.
std::vector<ClusterMetricsRow> cluster_metrics(const Multigraph& graph,
                                               const Partition& partition);

/// Edge classification by partition: intra (both endpoints in the class) vs
/// extra, multiplicities counted; plus the symmetric class-pair matrix.
struct IntraExtra {
    struct GroupRow {
        std::string label;
        long intra = 0;
        long extra = 0;
    };
    std::vector<GroupRow> per_group;                        // sorted by label
    std::map<std::pair<std::string, std::string>, long> pair_matrix; // key.first <= key.second
};

IntraExtra intra_extra_edges(const Multigraph& graph, const Partition& partition);

} // namespace bibnet

#endif
