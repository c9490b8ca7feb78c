#ifndef BIBNET_GENERATOR_HPP
#define BIBNET_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bibnet/corpus.hpp"

namespace bibnet {

/// Probability that a paper written in a given year is coauthored; values
/// between anchors are linearly interpolated, outside they clamp.
struct ScheduleAnchor {
    int year = 0;
    double coauthor_prob = 0.0;
};

struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t n_papers = 100;
    std::size_t n_authors = 50;
    /// Author selection weight is (prior paper count + 1)^attach_bias;
    /// 0 gives uniform selection, 1 classic preferential attachment.
    double attach_bias = 0.0;
    std::vector<ScheduleAnchor> schedule = {{1964, 0.2}, {2014, 0.6}};
    /// JEL letter frequency table (letter, weight); digits 0-9 uniform.
    std::vector<std::pair<char, double>> jel_letter_weights = default_jel_weights();

    static std::vector<std::pair<char, double>> default_jel_weights();
};

/// "1964:0.2,2014:0.8" -> anchors; throws DataError on malformed input.
std::vector<ScheduleAnchor> parse_schedule(const std::string& text);

/// Deterministic synthetic corpus: same config, same bytes. Validates
/// n_authors >= 2 and a sane schedule.
Corpus generate_corpus(const GeneratorConfig& config);

} // namespace bibnet

#endif
