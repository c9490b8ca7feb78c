#ifndef BIBNET_SVG_HPP
#define BIBNET_SVG_HPP

#include <string>
#include <vector>

#include "bibnet/stats.hpp"

namespace bibnet {

/// Self-contained static SVGs, deterministic byte-for-byte for fixed input.
/// Throws DataError on empty data.
std::string svg_histogram(const DegreeDistribution& dist,
                          const std::string& title = "Degree frequency");
std::string svg_loglog(const DegreeDistribution& dist,
                       const std::string& title = "Degree frequency (log-log)");
std::string svg_scatter_matrix(const std::vector<ScatterPair>& pairs,
                               const std::string& title = "Scatter matrix");

} // namespace bibnet

#endif
